#pragma once

#include <optional>
#include <string>
#include <vector>

#include "windex/family.hpp"
#include "windex/transfer.hpp"
#include "windex/wis.hpp"

namespace windex {

enum class FibMap { color, unit, fold, transfer, transfer_fold };

FibMap parse_fib_map(const std::string& name);
std::string fib_map_name(FibMap m);

// left adjoints
Wis color_left(const PresPtr& p, Family f);       // E_F F^triv
Wis unit_left(const PresPtr& p, Family f);        // E_F F^0
Wis fold_left(const PresPtr& p, Family f);        // F^0 u E_F F^infty
Wis transfer_left(const PresPtr& p, const TransferSystem& r);  // overline F_R
Wis combined_left(const PresPtr& p, const TransferSystem& r, Family f);

// right adjoints
Wis color_right(const PresPtr& p, Family f);      // complete on F
Wis transfer_right(const PresPtr& p, const TransferSystem& r);
// join of every listed unital system whose fold family lies in f
Wis fold_right(const PresPtr& p, const std::vector<Wis>& unital_poset, Family f);

struct AdjointInfo {
    std::string left;
    std::optional<std::string> right;
    std::string note;
};
AdjointInfo adjoints(FibMap m);
// F_{empty-perp-nu} v E_e F^0 computed over p; for C_p this is the complete system
Wis unit_join_witness(const PresPtr& p);

struct Target {
    Family family;
    TransferSystem transfer;
};
// t = L(target) v w; throws target_not_above / not_admissible / not_unital
Wis cocartesian_transport(FibMap m, const Wis& w, const Target& target);
// the image of w under the map, as a target
Target fib_image(FibMap m, const Wis& w);
bool target_leq(FibMap m, const Target& a, const Target& b);

// reflections onto the subclasses
Wis localize_ae_unital(const Wis& w);
Wis localize_one_color(const Wis& w);
Wis localize_almost_unital(const Wis& w);
Wis localize_unital(const Wis& w);
Wis localize_indexing(const Wis& w);

}  // namespace windex
