#include "windex/reps.hpp"

#include "windex/error.hpp"

namespace windex {

void require_abelian_group(const Presentation& p) {
    const bool grp = p.backend == Backend::chain || p.backend == Backend::group;
    if (!grp || !p.abelian) throw unsupported_backend("representations need an abelian group backend");
}

void check_rep(const RepDescriptor& v) {
    const auto& p = *v.group;
    require_abelian_group(p);
    if (static_cast<int>(v.fixed_dims.size()) != p.orbit_count()) throw invalid_spec("one dimension per subgroup");
    for (int a = 0; a < p.orbit_count(); ++a) {
        if (v.fixed_dims[a] < 0) throw invalid_spec("negative dimension");
        for (int b = 0; b < p.orbit_count(); ++b)
            if (p.hom[a][b] && v.fixed_dims[a] < v.fixed_dims[b])
                throw invalid_spec("fixed points grow along " + p.orbit_ids[a] + " <= " + p.orbit_ids[b]);
    }
}

RepDescriptor rep_sum(const RepDescriptor& a, const RepDescriptor& b) {
    if (!same_tables(*a.group, *b.group)) throw group_mismatch("representations of different groups");
    RepDescriptor out{a.group, a.fixed_dims};
    for (std::size_t i = 0; i < out.fixed_dims.size(); ++i) out.fixed_dims[i] += b.fixed_dims[i];
    return out;
}

// An orbit H/L embeds iff V^L is not covered by the V^{L'} for L < L' <= H, which for
// real subspaces means every such V^{L'} is strictly smaller. Distinct orbits can always
// be placed apart except for H-fixed points when V^H = 0.
bool embeds(const VSet& s, const RepDescriptor& v) {
    const auto& p = *v.group;
    require_abelian_group(p);
    const int h = s.over;
    const int st = p.star[h];
    if (s.mult[st] > 1 && v.fixed_dims[h] == 0) return false;
    for (int l = 0; l < p.slice_count(h); ++l) {
        if (l == st || !s.mult[l]) continue;
        const int dl = v.fixed_dims[p.slices[h][l].orbit];
        for (int l2 = 0; l2 < p.slice_count(h); ++l2)
            if (l2 != l && p.slice_hom[h][l][l2] && v.fixed_dims[p.slices[h][l2].orbit] >= dl) return false;
    }
    return true;
}

Wis arity_support(const RepDescriptor& v) {
    check_rep(v);
    const auto& p = *v.group;
    Collection c(p.orbit_count());
    for (int h = 0; h < p.orbit_count(); ++h)
        for (const auto& s : p.sparse_universe[h])
            if (embeds(s, v)) c[h].push_back(s);
    return sparse_generate(v.group, c);
}

RepDescriptor named_rep(const PresPtr& pp, const std::string& name) {
    const auto& p = *pp;
    require_abelian_group(p);
    const int m = p.orbit_count();
    RepDescriptor r{pp, std::vector<int>(m, 0)};
    if (name == "zero" || name == "0") return r;
    if (name == "trivial" || name == "1") {
        r.fixed_dims.assign(m, 1);
        return r;
    }
    if (!p.chain) throw invalid_spec("rep '" + name + "' is defined for cyclic p-groups");
    const int pr = p.chain->p;
    const int n = p.chain->n;
    // a plane rotated through the quotient by the kernel: fixed only by subgroups of the kernel
    auto rotation = [&](int kernel, int dim) {
        r.fixed_dims.assign(m, 0);
        for (int k = 0; k <= kernel; ++k) r.fixed_dims[k] = dim;
        return r;
    };
    if (name == "sigma") {
        if (pr != 2 || n != 1) throw invalid_spec("sigma is the sign rep of C_2");
        r.fixed_dims = {1, 0};
        return r;
    }
    if (name == "lambda") {
        if (n != 1) throw invalid_spec("lambda is defined over C_p");
        return rotation(0, 2);
    }
    if (name == "lambda_Cp2") {
        if (n != 2) throw invalid_spec("lambda_Cp2 is defined over C_{p^2}");
        return rotation(0, 2);
    }
    if (name == "lambda_Cp") {
        if (n != 2) throw invalid_spec("lambda_Cp is defined over C_{p^2}");
        // irreducible: for p = 2 a rotation of order 2 splits, leaving the sign line
        return rotation(1, pr == 2 ? 1 : 2);
    }
    throw invalid_spec("unknown representation '" + name + "'");
}

std::vector<std::string> named_rep_names(const Presentation& p) {
    std::vector<std::string> out{"zero", "trivial"};
    if (!p.chain) return out;
    if (p.chain->n == 1) {
        out.push_back("lambda");
        if (p.chain->p == 2) out.push_back("sigma");
    }
    if (p.chain->n == 2) {
        out.push_back("lambda_Cp");
        out.push_back("lambda_Cp2");
    }
    return out;
}

}  // namespace windex
