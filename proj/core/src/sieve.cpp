#include "windex/sieve.hpp"

#include <algorithm>

#include "windex/error.hpp"

namespace windex {

bool Sieve::contains(int k, int h) const {
    return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(k, h));
}

bool Sieve::subset_of(const Sieve& o) const {
    return std::includes(o.pairs.begin(), o.pairs.end(), pairs.begin(), pairs.end());
}

void require_chain(const Presentation& p) {
    if (!p.chain) throw unsupported_backend("sieves are defined over chain groups only");
}

bool is_sieve(const Presentation& p, const Sieve& s, std::string* why) {
    require_chain(p);
    auto note = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    const int n = p.orbit_count();
    for (auto [k, h] : s.pairs) {
        if (k < 0 || h >= n || k >= h) return note("not a proper inclusion");
        if (!s.base.contains(p, h, k)) return note("pair outside the transfer system");
        if (!s.scope.contains(h)) return note("codomain outside the scope");
        // meets with subgroups of h in scope
        for (int l = 0; l <= h; ++l) {
            if (!s.scope.contains(l) || l <= k) continue;
            if (!s.contains(k, l)) return note("not closed under restriction");
        }
        // precomposition by transfers of r
        for (int j = 0; j < k; ++j)
            if (s.base.contains(p, k, j) && !s.contains(j, h)) return note("not closed under precomposition");
    }
    return std::is_sorted(s.pairs.begin(), s.pairs.end()) ? true : note("pairs not sorted");
}

std::vector<Sieve> enumerate_sieves(const PresPtr& pp, const TransferSystem& r, Family scope) {
    const auto& p = *pp;
    require_chain(p);
    std::vector<std::pair<int, int>> cand;
    for (const auto& [h, k] : r.pairs)
        if (scope.contains(h)) cand.push_back({k, h});
    std::sort(cand.begin(), cand.end());
    if (cand.size() > 24) throw too_large("too many candidate pairs for sieve enumeration");
    std::vector<Sieve> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cand.size()); ++mask) {
        Sieve s{r, scope, {}};
        for (std::size_t i = 0; i < cand.size(); ++i)
            if ((mask >> i) & 1u) s.pairs.push_back(cand[i]);
        if (is_sieve(p, s)) out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const Sieve& a, const Sieve& b) {
        if (a.pairs.size() != b.pairs.size()) return a.pairs.size() < b.pairs.size();
        return a.pairs < b.pairs;
    });
    return out;
}

Sieve sv(const Wis& w) {
    const auto& p = w.pres();
    require_chain(p);
    const TransferSystem r = fR(w);
    const Family scope = codomain(p, r) - families(w).fold;
    Sieve s{r, scope, {}};
    for (int h = 0; h < p.orbit_count(); ++h) {
        if (!scope.contains(h)) continue;
        for (int k = 0; k < h; ++k) {
            VSet x = p.orbit(h, k);
            x.mult[p.star[h]] = 1;
            if (w.has(x)) s.pairs.push_back({k, h});
        }
    }
    std::sort(s.pairs.begin(), s.pairs.end());
    return s;
}

Wis fiber_from_sieve(const PresPtr& pp, const TransferSystem& r, Family f, const Sieve& s) {
    const auto& p = *pp;
    require_chain(p);
    require_family(p, f);
    if (!admissible(pp, r, f)) throw not_admissible("Domain(R) is not inside the family");
    std::string why;
    if (!is_transfer_system(p, r, &why)) throw invalid_spec("not a transfer system: " + why);
    if (s.base != r || s.scope != (codomain(p, r) - f)) throw mismatched_index("sieve belongs to a different fiber");
    if (!is_sieve(p, s, &why)) throw invalid_spec("not a sieve: " + why);
    Collection c(p.orbit_count());
    for (int h = 0; h < p.orbit_count(); ++h) {
        if (f.contains(h)) {
            for (const auto& x : p.sparse_universe[h]) {
                bool ok = true;
                for (int i = 0; i < p.slice_count(h); ++i)
                    if (x.mult[i] && !r.contains(p, h, i)) ok = false;
                if (ok) c[h].push_back(x);
            }
            continue;
        }
        c[h] = {p.empty(h), p.terminal(h)};
        for (int k = 0; k < h; ++k) {
            if (!r.contains(p, h, k)) continue;
            c[h].push_back(p.orbit(h, k));
            if (s.contains(k, h)) {
                VSet x = p.orbit(h, k);
                x.mult[p.star[h]] = 1;
                c[h].push_back(x);
            }
        }
    }
    return Wis::sparse_unchecked(pp, std::move(c));
}

Sieve transport_sieve(const PresPtr& pp, const Sieve& s, const TransferSystem& r2, Family f, Family f2) {
    const auto& p = *pp;
    require_chain(p);
    if (!s.base.subset_of(r2) || !f.subset_of(f2)) throw target_not_above("transport needs R <= R' and F <= F'");
    (void)f;
    const Family scope = codomain(p, r2) - f2;
    Sieve out{r2, scope, {}};
    for (auto [k, h] : s.pairs) {
        if (!scope.contains(h)) continue;
        for (int j = 0; j <= k; ++j)
            if (j == k || r2.contains(p, k, j)) out.pairs.push_back({j, h});
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    out.pairs.erase(std::unique(out.pairs.begin(), out.pairs.end()), out.pairs.end());
    return out;
}

std::string sieve_str(const Presentation& p, const Sieve& s) {
    std::string out;
    for (auto [k, h] : s.pairs) out += (out.empty() ? "" : ", ") + p.orbit_ids[k] + "<" + p.orbit_ids[h];
    return "{" + out + "}";
}

}  // namespace windex
