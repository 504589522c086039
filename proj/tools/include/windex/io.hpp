#pragma once

#include <string>

#include "json.hpp"
#include "windex/enumerate.hpp"
#include "windex/reps.hpp"

namespace windex::io {

using json = nlohmann::ordered_json;

// {"kind":"cpn","p":2,"n":2}, {"kind":"group","cayley_table":...}, {"kind":"semilattice",...},
// {"kind":"BG","order":k}, {"kind":"point"}
BackendSpec backend_from_json(const json& j);
json backend_to_json(const BackendSpec& s);
// the spec a built-in presentation came from; throws unsupported_backend for custom ones
BackendSpec backend_of(const Presentation& p);

json presentation_to_json(const Presentation& p);
PresPtr presentation_from_json(const json& j);
// a "backend" key or a full "presentation" key
PresPtr presentation_of(const json& j);
json presentation_ref(const Presentation& p);

json vset_to_json(const Presentation& p, const VSet& s);
VSet vset_from_json(const Presentation& p, const json& j);

json wis_to_json(const Wis& w);
Wis wis_from_json(const json& j);

json transfer_to_json(const Presentation& p, const TransferSystem& r);
TransferSystem transfer_from_json(const Presentation& p, const json& j);
json family_to_json(const Presentation& p, Family f);
Family family_from_json(const Presentation& p, const json& j);
json sieve_to_json(const Presentation& p, const Sieve& s);
Sieve sieve_from_json(const Presentation& p, const json& j);
json rep_to_json(const RepDescriptor& v);
RepDescriptor rep_from_json(const PresPtr& p, const json& j);

json read_json_file(const std::string& path);

}  // namespace windex::io
