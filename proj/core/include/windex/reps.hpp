#pragma once

#include <string>
#include <vector>

#include "windex/presentation.hpp"
#include "windex/wis.hpp"

namespace windex {

// An orthogonal representation of an abelian group, remembered by fixed-point dimensions.
struct RepDescriptor {
    PresPtr group;
    std::vector<int> fixed_dims;  // per orbit class, dim V^K
};

void require_abelian_group(const Presentation& p);
// throws invalid_spec unless dims are non-negative and shrink along inclusions
void check_rep(const RepDescriptor& v);
RepDescriptor rep_sum(const RepDescriptor& a, const RepDescriptor& b);
bool embeds(const VSet& s, const RepDescriptor& v);
Wis arity_support(const RepDescriptor& v);

// zero, trivial, sigma, lambda, lambda_Cp, lambda_Cp2
RepDescriptor named_rep(const PresPtr& p, const std::string& name);
std::vector<std::string> named_rep_names(const Presentation& p);

}  // namespace windex
