#include "windex/gset.hpp"

#include <algorithm>

#include "windex/error.hpp"

namespace windex {

namespace {
constexpr long long kMaxPoints = 1 << 22;
}

ConcreteGSet::ConcreteGSet(std::shared_ptr<const FiniteGroup> g, Sub h, int points,
                           std::vector<std::vector<int>> perm)
    : group_(std::move(g)), h_(std::move(h)), n_(points), perm_(std::move(perm)) {
    const auto& G = *group_;
    if (!G.is_subgroup(h_)) throw invalid_spec("acting set is not a subgroup");
    perm_.resize(G.order());
    for (int a : h_) {
        if (static_cast<int>(perm_[a].size()) != n_) throw invalid_spec("action table has wrong size");
        for (int x : perm_[a])
            if (x < 0 || x >= n_) throw invalid_spec("action sends a point out of range");
    }
    for (int x = 0; x < n_; ++x)
        if (perm_[G.identity()][x] != x) throw invalid_spec("identity acts nontrivially");
    for (int a : h_)
        for (int b : h_) {
            const int ab = G.mul(a, b);
            for (int x = 0; x < n_; ++x)
                if (perm_[a][perm_[b][x]] != perm_[ab][x]) throw invalid_spec("action is not associative");
        }
}

ConcreteGSet::Sub ConcreteGSet::stabilizer(int x) const {
    Sub s;
    for (int a : h_)
        if (perm_[a][x] == x) s.push_back(a);
    return s;
}

std::vector<int> ConcreteGSet::orbit_reps() const {
    std::vector<char> seen(n_, 0);
    std::vector<int> reps;
    for (int x = 0; x < n_; ++x) {
        if (seen[x]) continue;
        reps.push_back(x);
        for (int a : h_) seen[perm_[a][x]] = 1;
    }
    return reps;
}

ConcreteGSet coset_set(std::shared_ptr<const FiniteGroup> g, const FiniteGroup::Subgroup& h,
                       const FiniteGroup::Subgroup& k) {
    const auto& G = *g;
    if (!FiniteGroup::subset(k, h) || !G.is_subgroup(k)) throw not_a_subgroup("coset set needs k <= h");
    std::vector<int> coset_of(G.order(), -1);
    std::vector<int> reps;
    for (int x : h) {
        if (coset_of[x] >= 0) continue;
        for (int y : k) coset_of[G.mul(x, y)] = static_cast<int>(reps.size());
        reps.push_back(x);
    }
    const int n = static_cast<int>(reps.size());
    std::vector<std::vector<int>> perm(G.order());
    for (int a : h) {
        perm[a].resize(n);
        for (int i = 0; i < n; ++i) perm[a][i] = coset_of[G.mul(a, reps[i])];
    }
    return ConcreteGSet(std::move(g), h, n, std::move(perm));
}

ConcreteGSet disjoint_union(const ConcreteGSet& a, const ConcreteGSet& b) {
    if (a.acting() != b.acting()) throw mismatched_index("union of sets with different acting groups");
    const int n = a.size() + b.size();
    std::vector<std::vector<int>> perm(a.group().order());
    for (int g : a.acting()) {
        perm[g].resize(n);
        for (int x = 0; x < a.size(); ++x) perm[g][x] = a.act(g, x);
        for (int x = 0; x < b.size(); ++x) perm[g][a.size() + x] = a.size() + b.act(g, x);
    }
    return ConcreteGSet(a.group_ptr(), a.acting(), n, std::move(perm));
}

ConcreteGSet cartesian_product(const ConcreteGSet& a, const ConcreteGSet& b) {
    if (a.acting() != b.acting()) throw mismatched_index("product of sets with different acting groups");
    if (static_cast<long long>(a.size()) * b.size() > kMaxPoints) throw too_large("product too large");
    const int n = a.size() * b.size();
    std::vector<std::vector<int>> perm(a.group().order());
    for (int g : a.acting()) {
        perm[g].resize(n);
        for (int x = 0; x < a.size(); ++x)
            for (int y = 0; y < b.size(); ++y) perm[g][x * b.size() + y] = a.act(g, x) * b.size() + b.act(g, y);
    }
    return ConcreteGSet(a.group_ptr(), a.acting(), n, std::move(perm));
}

ConcreteGSet restrict_action(const ConcreteGSet& x, const FiniteGroup::Subgroup& l) {
    if (!FiniteGroup::subset(l, x.acting())) throw not_a_subgroup("restriction to a non-subgroup");
    std::vector<std::vector<int>> perm(x.group().order());
    for (int g : l) {
        perm[g].resize(x.size());
        for (int y = 0; y < x.size(); ++y) perm[g][y] = x.act(g, y);
    }
    return ConcreteGSet(x.group_ptr(), l, x.size(), std::move(perm));
}

ConcreteGSet conjugate_action(const ConcreteGSet& x, int g) {
    const auto& G = x.group();
    auto h = G.conjugate(g, x.acting());
    std::vector<std::vector<int>> perm(G.order());
    for (int a : h) {
        const int b = G.mul(G.mul(G.inv(g), a), g);
        perm[a].resize(x.size());
        for (int y = 0; y < x.size(); ++y) perm[a][y] = x.act(b, y);
    }
    return ConcreteGSet(x.group_ptr(), h, x.size(), std::move(perm));
}

ConcreteGSet induce_action(const ConcreteGSet& x, const FiniteGroup::Subgroup& h) {
    const auto& G = x.group();
    const auto& k = x.acting();
    if (!FiniteGroup::subset(k, h) || !G.is_subgroup(h)) throw not_a_subgroup("induction needs k <= h");
    // left cosets t_i k
    std::vector<int> coset_of(G.order(), -1);
    std::vector<int> reps;
    for (int y : h) {
        if (coset_of[y] >= 0) continue;
        for (int z : k) coset_of[G.mul(y, z)] = static_cast<int>(reps.size());
        reps.push_back(y);
    }
    const int nc = static_cast<int>(reps.size());
    const int n = nc * x.size();
    std::vector<std::vector<int>> perm(G.order());
    for (int a : h) {
        perm[a].resize(n);
        for (int i = 0; i < nc; ++i) {
            const int at = G.mul(a, reps[i]);
            const int j = coset_of[at];
            const int kk = G.mul(G.inv(reps[j]), at);
            for (int y = 0; y < x.size(); ++y) perm[a][i * x.size() + y] = j * x.size() + x.act(kk, y);
        }
    }
    return ConcreteGSet(x.group_ptr(), h, n, std::move(perm));
}

ConcreteGSet coinduce(const ConcreteGSet& x, const FiniteGroup::Subgroup& h) {
    const auto& G = x.group();
    const auto& k = x.acting();
    if (!FiniteGroup::subset(k, h) || !G.is_subgroup(h)) throw not_a_subgroup("coinduction needs k <= h");
    // right cosets k r_j
    std::vector<int> coset_of(G.order(), -1);
    std::vector<int> reps;
    for (int y : h) {
        if (coset_of[y] >= 0) continue;
        for (int z : k) coset_of[G.mul(z, y)] = static_cast<int>(reps.size());
        reps.push_back(y);
    }
    const int nc = static_cast<int>(reps.size());
    long long total = 1;
    for (int i = 0; i < nc; ++i) {
        total *= x.size();
        if (total > kMaxPoints) throw too_large("coinduced set too large");
    }
    const int n = static_cast<int>(total);
    std::vector<std::vector<int>> perm(G.order());
    std::vector<int> vals(nc), out(nc);
    for (int a : h) {
        perm[a].resize(n);
        for (int code = 0; code < n; ++code) {
            int c = code;
            for (int i = nc - 1; i >= 0; --i) {
                vals[i] = c % x.size();
                c /= x.size();
            }
            // (a.f)(r_i) = f(r_i a) = f(kk r_j) = kk . f(r_j)
            int res = 0;
            for (int i = 0; i < nc; ++i) {
                const int ra = G.mul(reps[i], a);
                const int j = coset_of[ra];
                const int kk = G.mul(ra, G.inv(reps[j]));
                res = res * x.size() + x.act(kk, vals[j]);
            }
            perm[a][code] = res;
        }
    }
    return ConcreteGSet(x.group_ptr(), h, n, std::move(perm));
}

std::shared_ptr<const FiniteGroup> model_group(const PresPtr& p) {
    if (!p->group) throw unsupported_backend("presentation has no concrete group");
    return std::shared_ptr<const FiniteGroup>(p, &p->group->group);
}

int slice_of_subgroup(const Presentation& p, int v, const FiniteGroup::Subgroup& k) {
    const auto& gm = *p.group;
    const auto& G = gm.group;
    const auto& h = gm.orbit_rep[v];
    for (int s = 0; s < p.slice_count(v); ++s) {
        const auto& rep = gm.slice_rep[v][s];
        if (rep.size() != k.size()) continue;
        for (int a : h)
            if (G.conjugate(a, k) == rep) return s;
    }
    throw not_a_subgroup("subgroup is not contained in the orbit representative of " + p.orbit_ids[v]);
}

ConcreteGSet realize(const PresPtr& p, const VSet& s) {
    auto g = model_group(p);
    const auto& gm = *p->group;
    const auto& h = gm.orbit_rep[s.over];
    ConcreteGSet out(g, h, 0, std::vector<std::vector<int>>(g->order(), std::vector<int>{}));
    for (int i = 0; i < p->slice_count(s.over); ++i)
        for (int c = 0; c < s.mult[i]; ++c) out = disjoint_union(out, coset_set(g, h, gm.slice_rep[s.over][i]));
    return out;
}

VSet orbit_decompose(const Presentation& p, const ConcreteGSet& x, int v) {
    if (!p.group) throw unsupported_backend("presentation has no concrete group");
    if (x.acting() != p.group->orbit_rep[v])
        throw mismatched_index("acting group is not the representative of " + p.orbit_ids[v]);
    VSet out = p.empty(v);
    for (int r : x.orbit_reps()) out.mult[slice_of_subgroup(p, v, x.stabilizer(r))]++;
    return out;
}

VSet point_restrict(const PresPtr& p, int f, const VSet& s) {
    const auto& gm = *p->group;
    const int u = p->slices[s.over][f].orbit;
    auto x = restrict_action(realize(p, s), gm.slice_rep[s.over][f]);
    return orbit_decompose(*p, conjugate_action(x, gm.slice_conj[s.over][f]), u);
}

VSet point_induce(const PresPtr& p, int v, int u, const VSet& t) {
    const auto& gm = *p->group;
    const auto& G = gm.group;
    auto x = conjugate_action(realize(p, t), G.inv(gm.slice_conj[v][u]));
    return orbit_decompose(*p, induce_action(x, gm.orbit_rep[v]), v);
}

ConcreteGSet coinduce_along(const PresPtr& p, int v, int u, const VSet& t) {
    const auto& gm = *p->group;
    const auto& G = gm.group;
    if (t.over != p->slices[v][u].orbit) throw mismatched_index("component over the wrong orbit");
    auto x = conjugate_action(realize(p, t), G.inv(gm.slice_conj[v][u]));
    return coinduce(x, gm.orbit_rep[v]);
}

VSet point_coinduce(const PresPtr& p, int v, int u, const VSet& t) {
    return orbit_decompose(*p, coinduce_along(p, v, u, t), v);
}

VSet indexed_product(const PresPtr& p, const VSet& s, const std::vector<VSet>& t) {
    auto g = model_group(p);
    const auto orbs = expand_orbits(s);
    if (orbs.size() != t.size()) throw mismatched_index("indexing set and components disagree");
    const auto& h = p->group->orbit_rep[s.over];
    std::vector<std::vector<int>> ident(g->order());
    for (int a : h) ident[a] = {0};
    ConcreteGSet acc(g, h, 1, ident);
    for (std::size_t i = 0; i < orbs.size(); ++i) {
        acc = cartesian_product(acc, coinduce_along(p, s.over, orbs[i], t[i]));
        if (acc.size() == 0) break;
    }
    return orbit_decompose(*p, acc, s.over);
}

}  // namespace windex
