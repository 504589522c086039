#pragma once
// shared helpers for the test binaries: generators, figure oracles, lookups

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "windex/enumerate.hpp"
#include "windex/fibrations.hpp"
#include "windex/gset.hpp"
#include "windex/reps.hpp"

namespace wt {

using namespace windex;

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(0x5eed1234abcdULL);
    return g;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

// random V-set over v with at most max_points points
inline VSet random_vset(const Presentation& p, int v, int max_points) {
    VSet s = p.empty(v);
    int budget = uniform(0, max_points);
    for (int tries = 0; tries < 8 && budget > 0; ++tries) {
        int i = uniform(0, p.slice_count(v) - 1);
        int pts = p.slices[v][i].points;
        if (pts > budget) continue;
        int m = uniform(1, budget / pts);
        s.mult[i] += m;
        budget -= m * pts;
    }
    return s;
}

inline int slice_id(const Presentation& p, int v, const std::string& id) { return p.slice_index(v, id); }
inline int orbit(const Presentation& p, const std::string& id) { return p.orbit_index(id); }

inline Family fam(const Presentation& p, std::vector<std::string> ids) { return family_of(p, ids); }

// transfer system generated by (source, target) id pairs
inline TransferSystem transfers(const Presentation& p, const std::vector<std::pair<std::string, std::string>>& gen) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& [k, h] : gen) {
        int v = p.orbit_index(h);
        pairs.push_back({v, p.slice_index(v, k)});
    }
    return transfer_closure(p, pairs);
}

inline int index_of(const std::vector<Wis>& ws, const Wis& w) {
    for (std::size_t i = 0; i < ws.size(); ++i)
        if (ws[i].sparse() == w.sparse()) return static_cast<int>(i);
    return -1;
}

inline Collection sparse_of(const Presentation& p, const std::vector<std::vector<VSet>>& levels) {
    Collection c(p.orbit_count());
    for (int v = 0; v < p.orbit_count(); ++v) {
        c[v] = levels[v];
        std::sort(c[v].begin(), c[v].end());
    }
    return c;
}

// Hasse diagram of the aE-unital C_p systems as usually drawn; nodes by grid position
inline std::pair<std::vector<std::string>, std::vector<std::pair<std::string, std::string>>> cp_figure() {
    std::vector<std::string> nodes{"11", "12", "13", "14", "22", "23", "24", "33", "34", "36", "44", "45", "46"};
    std::vector<std::pair<std::string, std::string>> edges{
        {"11", "12"}, {"12", "13"}, {"12", "22"}, {"13", "14"}, {"13", "23"}, {"14", "24"},
        {"22", "23"}, {"23", "24"}, {"23", "33"}, {"24", "34"}, {"33", "34"}, {"34", "36"},
        {"34", "44"}, {"36", "46"}, {"44", "45"}, {"45", "46"}};
    return {nodes, edges};
}

// the unital C_{p^2} figure as drawn; 32 arrows, lower -> upper.
// The arrow 74 -> 44 is drawn where the cover is 64 -> 44 (64 sits inside 44 level by level).
inline std::pair<std::vector<std::string>, std::vector<std::pair<std::string, std::string>>> cp2_figure() {
    std::vector<std::string> nodes{"11", "12", "13", "14", "15", "23", "25", "34", "35", "41", "42",
                                   "43", "44", "45", "54", "62", "64", "71", "72", "74", "81"};
    std::vector<std::pair<std::string, std::string>> edges{
        {"11", "12"}, {"11", "13"}, {"12", "14"}, {"13", "15"}, {"14", "15"}, {"25", "15"}, {"34", "14"},
        {"34", "35"}, {"35", "25"}, {"41", "11"}, {"41", "42"}, {"42", "12"}, {"42", "44"}, {"43", "23"},
        {"44", "34"}, {"45", "35"}, {"54", "34"}, {"62", "42"}, {"64", "54"}, {"71", "41"}, {"71", "72"},
        {"72", "62"}, {"72", "74"}, {"74", "64"}, {"81", "71"}, {"23", "13"}, {"44", "45"}, {"43", "45"},
        {"41", "43"}, {"62", "64"}, {"23", "25"}, {"74", "44"}};
    return {nodes, edges};
}

// the drawn arrow and the cover that replaces it
inline std::pair<std::string, std::string> cp2_drawn_arrow() { return {"74", "44"}; }
inline std::pair<std::string, std::string> cp2_true_cover() { return {"64", "44"}; }

inline std::pair<std::vector<std::string>, std::vector<std::pair<std::string, std::string>>> cp2_figure_corrected() {
    auto f = cp2_figure();
    for (auto& e : f.second)
        if (e == cp2_drawn_arrow()) e = cp2_true_cover();
    return f;
}

inline Poset figure_poset(const std::vector<std::string>& nodes,
                          const std::vector<std::pair<std::string, std::string>>& edges) {
    auto at = [&](const std::string& n) {
        return static_cast<int>(std::find(nodes.begin(), nodes.end(), n) - nodes.begin());
    };
    std::vector<std::pair<int, int>> e;
    for (const auto& [a, b] : edges) e.push_back({at(a), at(b)});
    return poset_from_edges(static_cast<int>(nodes.size()), e, nodes);
}

// figure nodes of the C_p diagram built from constructors
inline std::map<std::string, Wis> cp_named(const PresPtr& p) {
    const Family e = fam(*p, {"e"}), all = all_orbits(*p);
    std::map<std::string, Wis> m;
    m.emplace("11", empty_system(p));
    m.emplace("12", triv(p, e));
    m.emplace("13", zero(p, e));
    m.emplace("14", complete(p, e));  // E_e F^inf
    m.emplace("22", triv(p, all));
    m.emplace("23", join(zero(p, e), triv(p, all)));
    m.emplace("24", join(triv(p, all), complete(p, e)));
    m.emplace("33", zero(p, all));
    m.emplace("34", fold_left(p, e));
    m.emplace("36", fold_left(p, all));
    m.emplace("44", overline_F(p, complete_transfer(*p)));
    m.emplace("45", arity_support(named_rep(p, "lambda")));
    m.emplace("46", complete(p, all));
    return m;
}

inline std::map<std::string, Wis> cp2_named(const PresPtr& pp) {
    const auto& p = *pp;
    const std::string c1 = p.orbit_ids[1], c2 = p.orbit_ids[2];
    const Family e = fam(p, {"e"}), e1 = fam(p, {"e", c1}), all = all_orbits(p);
    const auto r10 = transfers(p, {{"e", c1}});
    const auto r21 = transfers(p, {{c1, c2}});
    const auto r20 = transfers(p, {{"e", c2}});
    const auto rc = complete_transfer(p);
    const Wis lam2 = arity_support(named_rep(pp, "lambda_Cp2"));
    const Wis lam1 = arity_support(named_rep(pp, "lambda_Cp"));
    const Wis e_lambda = extend_by_empty(e1, lam2);  // E_{C_p} F^lambda
    std::map<std::string, Wis> m;
    m.emplace("11", fold_left(pp, all));
    m.emplace("12", transfer_to_indexing(pp, r10));
    m.emplace("13", transfer_to_indexing(pp, r21));
    m.emplace("14", transfer_to_indexing(pp, r20));
    m.emplace("15", complete(pp, all));
    m.emplace("23", lam1);
    m.emplace("25", arity_support(rep_sum(named_rep(pp, "lambda_Cp2"), named_rep(pp, "lambda_Cp"))));
    m.emplace("34", join(fold_left(pp, e1), lam2));
    m.emplace("35", join(overline_F(pp, rc), lam2));
    m.emplace("41", fold_left(pp, e1));
    m.emplace("42", join(fold_left(pp, e1), overline_F(pp, r10)));
    m.emplace("43", overline_F(pp, r21));
    m.emplace("44", join(fold_left(pp, e1), overline_F(pp, r20)));
    m.emplace("45", overline_F(pp, rc));
    m.emplace("54", lam2);
    m.emplace("62", join(zero(pp, all), e_lambda));
    m.emplace("64", join(overline_F(pp, r20), e_lambda));
    m.emplace("71", fold_left(pp, e));
    m.emplace("72", overline_F(pp, r10));
    m.emplace("74", overline_F(pp, r20));
    m.emplace("81", zero(pp, all));
    return m;
}

// covers of an enumeration, translated to figure names through the constructors; empty on a miss
inline std::vector<std::pair<std::string, std::string>> named_covers(const Enumeration& e,
                                                                     const std::map<std::string, Wis>& named) {
    std::map<int, std::string> name_of;
    for (const auto& [n, w] : named) {
        int i = index_of(e.systems, w);
        if (i < 0) return {};
        name_of[i] = n;
    }
    std::vector<std::pair<std::string, std::string>> out;
    for (auto [a, b] : e.poset.covers()) out.push_back({name_of[a], name_of[b]});
    std::sort(out.begin(), out.end());
    return out;
}

// fiber cardinalities over C_{p^2}: rows R in the order triv, C_p/e, C_{p^2}/C_p, C_{p^2}/e, complete;
// columns the families empty, {e}, {e,C_p}, all
inline std::vector<std::vector<int>> cp2_fiber_table() {
    return {{1, 1, 1, 1}, {0, 2, 1, 1}, {0, 0, 2, 1}, {0, 3, 2, 1}, {0, 0, 3, 1}};
}

}  // namespace wt
