#pragma once

#include <memory>
#include <vector>

#include "windex/group.hpp"
#include "windex/presentation.hpp"

namespace windex {

// A finite set with an action of a subgroup H of a concrete finite group.
class ConcreteGSet {
public:
    using Sub = FiniteGroup::Subgroup;

    ConcreteGSet() = default;
    // perm[g] is the action of g for g in h; other entries are ignored.
    // throws invalid_spec when the action laws fail
    ConcreteGSet(std::shared_ptr<const FiniteGroup> g, Sub h, int points, std::vector<std::vector<int>> perm);

    const FiniteGroup& group() const { return *group_; }
    std::shared_ptr<const FiniteGroup> group_ptr() const { return group_; }
    const Sub& acting() const { return h_; }
    int size() const { return n_; }
    int act(int g, int x) const { return perm_[g][x]; }

    Sub stabilizer(int x) const;
    // orbit representatives, smallest point first
    std::vector<int> orbit_reps() const;

private:
    std::shared_ptr<const FiniteGroup> group_;
    Sub h_;
    int n_ = 0;
    std::vector<std::vector<int>> perm_;
};

// the left cosets h/k with h acting by multiplication
ConcreteGSet coset_set(std::shared_ptr<const FiniteGroup> g, const FiniteGroup::Subgroup& h,
                       const FiniteGroup::Subgroup& k);
ConcreteGSet disjoint_union(const ConcreteGSet& a, const ConcreteGSet& b);
ConcreteGSet cartesian_product(const ConcreteGSet& a, const ConcreteGSet& b);
ConcreteGSet restrict_action(const ConcreteGSet& x, const FiniteGroup::Subgroup& l);
// x over h becomes a set over g h g^-1
ConcreteGSet conjugate_action(const ConcreteGSet& x, int g);
ConcreteGSet induce_action(const ConcreteGSet& x, const FiniteGroup::Subgroup& h);
// K-equivariant maps h -> x with (a.f)(y) = f(y a)
ConcreteGSet coinduce(const ConcreteGSet& x, const FiniteGroup::Subgroup& h);

// presentations with a group model only; throws unsupported_backend otherwise
std::shared_ptr<const FiniteGroup> model_group(const PresPtr& p);
int slice_of_subgroup(const Presentation& p, int v, const FiniteGroup::Subgroup& k);
ConcreteGSet realize(const PresPtr& p, const VSet& s);
VSet orbit_decompose(const Presentation& p, const ConcreteGSet& x, int v);

// point-level versions of the orbital-core arithmetic
VSet point_restrict(const PresPtr& p, int f, const VSet& s);
VSet point_induce(const PresPtr& p, int v, int u, const VSet& t);
ConcreteGSet coinduce_along(const PresPtr& p, int v, int u, const VSet& t);
VSet point_coinduce(const PresPtr& p, int v, int u, const VSet& t);
VSet indexed_product(const PresPtr& p, const VSet& s, const std::vector<VSet>& t);

}  // namespace windex
