#include "doctest.h"
#include "support.hpp"
#include "windex/error.hpp"

using namespace windex;
using namespace wt;

namespace {

std::vector<std::vector<int>> s3_table() {
    std::vector<std::vector<int>> P = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            std::vector<int> c(3);
            for (int k = 0; k < 3; ++k) c[k] = P[i][P[j][k]];
            t[i][j] = static_cast<int>(std::find(P.begin(), P.end(), c) - P.begin());
        }
    return t;
}

// quaternion group from its 8 unit elements (+-1, +-i, +-j, +-k)
std::vector<std::vector<int>> q8_table() {
    // element = sign * unit; units 0..3 = 1,i,j,k
    int mul[4][4][2] = {{{0, 1}, {1, 1}, {2, 1}, {3, 1}},
                        {{1, 1}, {0, -1}, {3, 1}, {2, -1}},
                        {{2, 1}, {3, -1}, {0, -1}, {1, 1}},
                        {{3, 1}, {2, 1}, {1, -1}, {0, -1}}};
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int ua = a % 4, sa = a < 4 ? 1 : -1, ub = b % 4, sb = b < 4 ? 1 : -1;
            int u = mul[ua][ub][0], s = mul[ua][ub][1] * sa * sb;
            t[a][b] = u + (s < 0 ? 4 : 0);
        }
    return t;
}

}  // namespace

TEST_SUITE("orbital") {

TEST_CASE("chain presentation of C_2") {
    auto p = chain_presentation(2, 1);
    REQUIRE(p->orbit_count() == 2);
    CHECK(p->orbit_ids == std::vector<std::string>{"e", "C_2"});
    const int c2 = orbit(*p, "C_2");
    CHECK(p->slice_count(c2) == 2);
    // Res_e^{C_2} [C_2/e] = 2 *_e
    const int to_e = slice_id(*p, c2, "e");
    VSet r = restrict_vset(*p, to_e, p->orbit(c2, to_e));
    CHECK(r == p->copies(0, 2));
}

TEST_CASE("restriction examples") {
    auto p = chain_presentation(2, 2);
    const int c4 = orbit(*p, "C_4"), c2 = orbit(*p, "C_2");
    VSet r = restrict_vset(*p, slice_id(*p, c4, "C_2"), p->orbit(c4, slice_id(*p, c4, "e")));
    CHECK(r == p->orbit(c2, slice_id(*p, c2, "e"), 2));
    VSet s = p->orbit(c4, 0, 1);
    s.mult[p->star[c4]] = 3;
    CHECK(restrict_vset(*p, p->star[c4], s) == s);

    auto q = chain_presentation(3, 1);
    VSet t = q->terminal(1);
    t.mult[slice_id(*q, 1, "e")] = 1;
    CHECK(restrict_to(*q, 0, t) == q->copies(0, 4));
    CHECK_THROWS_AS(restrict_to(*q, 1, q->terminal(0)), no_such_map);
}

TEST_CASE("indexed coproduct examples") {
    auto p = chain_presentation(3, 1);
    const int free_ = slice_id(*p, 1, "e");
    CHECK(indexed_coproduct(*p, p->orbit(1, free_), {p->terminal(0)}) == p->orbit(1, free_));
    CHECK(indexed_coproduct(*p, p->copies(1, 2), {p->terminal(1), p->terminal(1)}) == p->copies(1, 2));
    CHECK_THROWS_AS(indexed_coproduct(*p, p->copies(1, 2), {p->terminal(1)}), mismatched_index);

    auto q = chain_presentation(2, 2);
    const int c4 = 2, c2 = 1;
    VSet c2e = q->orbit(c2, slice_id(*q, c2, "e"));
    CHECK(indexed_coproduct(*q, q->orbit(c4, slice_id(*q, c4, "C_2")), {c2e}) ==
          q->orbit(c4, slice_id(*q, c4, "e")));
}

TEST_CASE("summand inclusion") {
    auto p = chain_presentation(5, 1);
    VSet free_ = p->orbit(1, slice_id(*p, 1, "e"));
    CHECK(sset_leq(p->empty(1), p->terminal(1)));
    CHECK_FALSE(sset_leq(p->terminal(1), p->empty(1)));
    CHECK(sset_leq(free_, vset_sum(free_, p->terminal(1))));
}

TEST_CASE("semilattice restriction is by meet") {
    auto p = build_presentation(MeetSemilattice{{"b", "t"}, {{0, 0}, {0, 1}}});
    const int t = orbit(*p, "t");
    const int b_to_t = slice_id(*p, t, "b");
    CHECK(restrict_vset(*p, b_to_t, p->orbit(t, b_to_t)) == p->terminal(0));
    CHECK(validate_presentation(*p).ok());
}

TEST_CASE("every backend validates") {
    std::vector<PresPtr> ps;
    for (int pr : {2, 3, 5})
        for (int n = 0; n <= 3; ++n) ps.push_back(chain_presentation(pr, n));
    ps.push_back(build_presentation(FiniteGroupSpec{s3_table()}));
    ps.push_back(build_presentation(FiniteGroupSpec{q8_table()}));
    ps.push_back(build_presentation(FiniteGroupSpec{FiniteGroup::cyclic(6).table()}));
    ps.push_back(build_presentation(FiniteGroupSpec{FiniteGroup::cyclic(12).table()}));
    ps.push_back(build_presentation(OneObjectGroupoid{3}));
    ps.push_back(build_presentation(TrivialPoint{}));
    // the diamond lattice 0 < a, b < 1
    ps.push_back(build_presentation(
        MeetSemilattice{{"0", "a", "b", "1"}, {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}}}));
    for (const auto& p : ps) {
        auto rep = validate_presentation(*p);
        INFO(p->name);
        for (const auto& a : rep.axioms) {
            INFO(a.name << ": " << a.witness);
            CHECK(a.pass);
        }
    }
}

TEST_CASE("broken presentations are caught") {
    auto good = chain_presentation(2, 1);
    Presentation p = *good;
    // drop a point from Res_e [C_2/e]
    const int f = slice_id(p, 1, "e");
    p.res[1][f][f][p.star[0]] = 1;
    auto rep = validate_presentation(p);
    REQUIRE(rep.find("point count"));
    CHECK_FALSE(rep.find("point count")->pass);
    CHECK_FALSE(rep.find("point count")->witness.empty());

    CHECK_THROWS_AS(build_presentation(FiniteGroupSpec{{{0, 1}, {0, 1}}}), invalid_spec);
    CHECK_THROWS_AS(build_presentation(MeetSemilattice{{"a", "b"}, {{0, 1}, {0, 1}}}), invalid_spec);
    CHECK_THROWS_AS(build_presentation(FiniteGroupSpec{FiniteGroup::cyclic(64).table()}), too_large);
    CHECK_THROWS_AS(chain_presentation(4, 1), invalid_spec);
}

TEST_CASE("non-abelian slices are conjugacy classes") {
    auto p = build_presentation(FiniteGroupSpec{s3_table()});
    // orbits: e, C_2 (one class of three), C_3, S_3
    CHECK(p->orbit_count() == 4);
    const int top = p->orbit_count() - 1;
    CHECK(p->slice_count(top) == 4);
    CHECK_FALSE(p->abelian);
    // Res_e Ind_{C_2}^{S_3} * = 3 points
    for (int f = 0; f < p->slice_count(top); ++f) {
        VSet s = p->orbit(top, f);
        CHECK(p->points(restrict_to(*p, 0, s)) == p->points(s));
    }
}

TEST_CASE("associativity of indexed coproducts over C_{p^2}") {
    // T = coprod^S T_U; then coprod^T Z = coprod^S (coprod^{T_U} Z|_U)
    for (int pr : {2, 3}) {
        auto p = chain_presentation(pr, 2);
        int checked = 0;
        for (int round = 0; round < 400; ++round) {
            const int v = uniform(0, 2);
            VSet s = random_vset(*p, v, 3);
            std::vector<VSet> t;
            for (int u : expand_orbits(s)) t.push_back(random_vset(*p, p->slices[v][u].orbit, 2));
            VSet tt = indexed_coproduct(*p, s, t);
            if (p->points(tt) > 6) continue;
            // Z depends only on the slice class, so it can be regrouped along s
            std::map<int, VSet> zc;
            std::vector<VSet> z;
            for (int x : expand_orbits(tt)) {
                if (!zc.count(x)) zc[x] = random_vset(*p, p->slices[v][x].orbit, 1);
                z.push_back(zc[x]);
            }
            const VSet lhs = indexed_coproduct(*p, tt, z);
            std::vector<VSet> inner;
            const auto sorbs = expand_orbits(s);
            for (std::size_t i = 0; i < sorbs.size(); ++i) {
                const int u = sorbs[i];
                const int uo = p->slices[v][u].orbit;
                std::vector<VSet> zu;
                for (int y : expand_orbits(t[i])) zu.push_back(zc.at(p->ind[v][u][y]));
                inner.push_back(indexed_coproduct(*p, t[i], zu));
                CHECK(inner.back().over == uo);
            }
            CHECK(indexed_coproduct(*p, s, inner) == lhs);
            ++checked;
        }
        CHECK(checked > 100);
    }
}

}  // TEST_SUITE
