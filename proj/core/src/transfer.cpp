#include "windex/transfer.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>

#include "windex/error.hpp"

namespace windex {

namespace {

struct Rules {
    std::vector<std::pair<int, int>> universe;
    std::map<std::pair<int, int>, int> index;
    std::vector<std::vector<int>> unary;                    // a => c
    std::vector<std::vector<std::pair<int, int>>> binary;   // a and b => c, stored at a
};

Rules make_rules(const Presentation& p) {
    Rules r;
    r.universe = transfer_universe(p);
    for (std::size_t i = 0; i < r.universe.size(); ++i) r.index[r.universe[i]] = static_cast<int>(i);
    const int n = static_cast<int>(r.universe.size());
    r.unary.resize(n);
    r.binary.resize(n);
    auto idx = [&](int v, int s) { return s == p.star[v] ? -1 : r.index.at({v, s}); };
    for (int a = 0; a < n; ++a) {
        const auto [w, u] = r.universe[a];
        std::set<int> need;
        // base change along every map into w
        for (int g = 0; g < p.slice_count(w); ++g) {
            const int l = p.slices[w][g].orbit;
            const auto& res = p.res[w][g][u];
            for (int x = 0; x < static_cast<int>(res.size()); ++x)
                if (res[x] && idx(l, x) >= 0) need.insert(idx(l, x));
        }
        for (const auto& perm : p.auts[w])
            if (idx(w, perm[u]) >= 0) need.insert(idx(w, perm[u]));
        need.erase(a);
        r.unary[a].assign(need.begin(), need.end());
        // composition: (w,u) then (orbit(u), x)
        const int uo = p.slices[w][u].orbit;
        for (int x = 0; x < p.slice_count(uo); ++x) {
            if (x == p.star[uo]) continue;
            const int c = idx(w, p.ind[w][u][x]);
            if (c >= 0) r.binary[a].push_back({r.index.at({uo, x}), c});
        }
    }
    return r;
}

}  // namespace

bool TransferSystem::contains(const Presentation& p, int v, int slice) const {
    if (slice == p.star[v]) return true;
    return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(v, slice));
}

bool TransferSystem::subset_of(const TransferSystem& o) const {
    return std::includes(o.pairs.begin(), o.pairs.end(), pairs.begin(), pairs.end());
}

std::vector<std::pair<int, int>> transfer_universe(const Presentation& p) {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < p.orbit_count(); ++v)
        for (int s = 0; s < p.slice_count(v); ++s)
            if (s != p.star[v]) out.push_back({v, s});
    return out;
}

bool is_transfer_system(const Presentation& p, const TransferSystem& r, std::string* why) {
    auto note = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    for (const auto& [v, s] : r.pairs) {
        if (v < 0 || v >= p.orbit_count() || s < 0 || s >= p.slice_count(v) || s == p.star[v])
            return note("pair out of range");
    }
    if (!std::is_sorted(r.pairs.begin(), r.pairs.end())) return note("pairs not sorted");
    for (const auto& [w, u] : r.pairs) {
        for (int g = 0; g < p.slice_count(w); ++g) {
            const int l = p.slices[w][g].orbit;
            const auto& res = p.res[w][g][u];
            for (int x = 0; x < static_cast<int>(res.size()); ++x)
                if (res[x] && !r.contains(p, l, x))
                    return note("restriction of " + p.slices[w][u].id + "->" + p.orbit_ids[w] + " to " +
                                p.slices[w][g].id + " leaves the system");
        }
        for (const auto& perm : p.auts[w])
            if (!r.contains(p, w, perm[u])) return note("not closed under conjugation");
        const int uo = p.slices[w][u].orbit;
        for (int x = 0; x < p.slice_count(uo); ++x)
            if (r.contains(p, uo, x) && !r.contains(p, w, p.ind[w][u][x]))
                return note("not closed under composition at " + p.orbit_ids[w]);
    }
    return true;
}

TransferSystem transfer_closure(const Presentation& p, std::vector<std::pair<int, int>> pairs) {
    const Rules rules = make_rules(p);
    std::vector<char> in(rules.universe.size(), 0);
    std::vector<int> todo;
    for (const auto& pr : pairs) {
        if (pr.second == p.star[pr.first]) continue;
        int a = rules.index.at(pr);
        if (!in[a]) {
            in[a] = 1;
            todo.push_back(a);
        }
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t a = 0; a < in.size(); ++a) {
            if (!in[a]) continue;
            for (int c : rules.unary[a])
                if (!in[c]) in[c] = 1, changed = true;
            for (auto [b, c] : rules.binary[a])
                if (in[b] && !in[c]) in[c] = 1, changed = true;
        }
    }
    TransferSystem r;
    for (std::size_t a = 0; a < in.size(); ++a)
        if (in[a]) r.pairs.push_back(rules.universe[a]);
    return r;
}

TransferSystem trivial_transfer() { return {}; }

TransferSystem complete_transfer(const Presentation& p) { return {transfer_universe(p)}; }

TransferSystem transfer_join(const Presentation& p, const TransferSystem& a, const TransferSystem& b) {
    auto pairs = a.pairs;
    pairs.insert(pairs.end(), b.pairs.begin(), b.pairs.end());
    return transfer_closure(p, pairs);
}

TransferSystem transfer_meet(const TransferSystem& a, const TransferSystem& b) {
    TransferSystem r;
    std::set_intersection(a.pairs.begin(), a.pairs.end(), b.pairs.begin(), b.pairs.end(),
                          std::back_inserter(r.pairs));
    return r;
}

std::vector<TransferSystem> enumerate_transfer_systems(const Presentation& p) {
    const Rules rules = make_rules(p);
    const int n = static_cast<int>(rules.universe.size());
    if (n > 26) throw too_large(std::to_string(n) + " candidate transfers is beyond brute force");
    std::vector<std::uint64_t> unary(n, 0);
    for (int a = 0; a < n; ++a)
        for (int c : rules.unary[a]) unary[a] |= std::uint64_t{1} << c;
    std::vector<TransferSystem> out;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) {
            if (!((mask >> a) & 1u)) continue;
            if ((unary[a] & ~mask) != 0) ok = false;
            for (auto [b, c] : rules.binary[a])
                if (((mask >> b) & 1u) && !((mask >> c) & 1u)) ok = false;
        }
        if (!ok) continue;
        TransferSystem r;
        for (int a = 0; a < n; ++a)
            if ((mask >> a) & 1u) r.pairs.push_back(rules.universe[a]);
        out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [](const TransferSystem& a, const TransferSystem& b) {
        if (a.pairs.size() != b.pairs.size()) return a.pairs.size() < b.pairs.size();
        return a.pairs < b.pairs;
    });
    return out;
}

std::string transfer_str(const Presentation& p, const TransferSystem& r) {
    std::string s;
    for (const auto& [v, u] : r.pairs)
        s += (s.empty() ? "" : ", ") + p.slices[v][u].id + "->" + p.orbit_ids[v];
    return "{" + s + "}";
}

TransferSystem fR(const Wis& w) {
    const auto& p = w.pres();
    if (!classify(w).unital) throw not_unital("fR needs a unital system");
    TransferSystem r;
    for (const auto& [v, s] : transfer_universe(p))
        if (w.has(p.orbit(v, s))) r.pairs.push_back({v, s});
    return r;
}

Wis transfer_to_indexing(const PresPtr& p, const TransferSystem& r) {
    Collection c(p->orbit_count());
    for (int v = 0; v < p->orbit_count(); ++v)
        for (const auto& s : p->sparse_universe[v]) {
            bool ok = true;
            for (int i = 0; i < p->slice_count(v); ++i)
                if (s.mult[i] && !r.contains(*p, v, i)) ok = false;
            if (ok) c[v].push_back(s);
        }
    return Wis::sparse_unchecked(p, std::move(c));
}

Wis overline_F(const PresPtr& p, const TransferSystem& r) {
    Collection c(p->orbit_count());
    for (int v = 0; v < p->orbit_count(); ++v) c[v] = {p->empty(v), p->terminal(v)};
    for (const auto& [v, u] : r.pairs) c[v].push_back(p->orbit(v, u));
    Collection tab = closure(*p, flatten(c), -1, p->sparse_bound);
    Collection sp(p->orbit_count());
    for (int v = 0; v < p->orbit_count(); ++v)
        for (const auto& s : tab[v])
            if (is_sparse(*p, s)) sp[v].push_back(s);
    return Wis::sparse_unchecked(p, std::move(sp));
}

Family domain_by_span(const Presentation& p, const TransferSystem& r) {
    Family f;
    for (const auto& [w, u] : r.pairs)
        for (int g = 0; g < p.slice_count(w); ++g) {
            const int l = p.slices[w][g].orbit;
            if (p.res[w][g][u][p.star[l]] >= 2) f.insert(l);
        }
    return f;
}

Family domain_by_fold(const PresPtr& p, const TransferSystem& r) { return families(overline_F(p, r)).fold; }

Family codomain(const Presentation& p, const TransferSystem& r) {
    Family f;
    for (const auto& pr : r.pairs) f.insert(pr.first);
    return generated_family(p, f);
}

DomainCodomain domain_codomain(const PresPtr& p, const TransferSystem& r) {
    Family a = domain_by_span(*p, r);
    Family b = domain_by_fold(p, r);
    if (a != b)
        throw error("domain of " + transfer_str(*p, r) + " disagrees: span {" + family_str(*p, a) + "} vs fold {" +
                    family_str(*p, b) + "}");
    return {a, codomain(*p, r)};
}

bool admissible(const PresPtr& p, const TransferSystem& r, Family f) {
    return domain_by_span(*p, r).subset_of(f);
}

}  // namespace windex
