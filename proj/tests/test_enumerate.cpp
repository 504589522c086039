#include <set>

#include "doctest.h"
#include "support.hpp"
#include "windex/error.hpp"

using namespace windex;
using namespace wt;

namespace {

bool same_poset(const Enumeration& a, const Enumeration& b) {
    if (a.systems.size() != b.systems.size()) return false;
    for (std::size_t i = 0; i < a.systems.size(); ++i)
        if (!(a.systems[i] == b.systems[i])) return false;
    return a.poset.le == b.poset.le;
}

}  // namespace

TEST_SUITE("enumerate") {

TEST_CASE("transfer system and family counts") {
    const std::vector<std::size_t> catalan{1, 2, 5, 14, 42};
    for (int pr : {2, 3})
        for (int n = 0; n <= 3; ++n) {
            auto p = chain_presentation(pr, n);
            CHECK(enumerate_transfer_systems(*p).size() == catalan[n]);
            auto fs = enumerate_families(*p);
            CHECK(fs.size() == static_cast<std::size_t>(n + 2));
            Poset fp = family_poset(*p, fs);
            for (std::size_t a = 0; a < fs.size(); ++a)
                for (std::size_t b = 0; b < fs.size(); ++b) CHECK((fp.le[a][b] || fp.le[b][a]));
        }
    CHECK(enumerate_families(*build_presentation(TrivialPoint{})).size() == 2);
}

TEST_CASE("Transf of C_{p^2} is a pentagon") {
    auto q = chain_presentation(2, 2);
    auto rs = enumerate_transfer_systems(*q);
    Poset tp = transfer_poset(*q, rs);
    // bottom, two chains of lengths 2 and 3 to the top
    Poset pent = poset_from_edges(5, {{0, 1}, {1, 4}, {0, 2}, {2, 3}, {3, 4}});
    CHECK(isomorphic(tp, pent));
    CHECK(hasse(tp, {}).edges.size() == 5);
}

TEST_CASE("C_p counts by class") {
    for (int pr : {2, 3, 5}) {
        auto p = chain_presentation(pr, 1);
        CHECK(enumerate_wis_bruteforce(p, WisClass::ae_unital).systems.size() == 13);
        CHECK(enumerate_wis_bruteforce(p, WisClass::unital).systems.size() == 6);
        CHECK(enumerate_wis_bruteforce(p, WisClass::almost_unital).systems.size() == 9);
        CHECK(enumerate_wis_bruteforce(p, WisClass::indexing).systems.size() == 2);
        CHECK(enumerate_wis_bruteforce(p, WisClass::one_color_ae).systems.size() == 9);
    }
}

TEST_CASE("C_p figure") {
    auto p = chain_presentation(3, 1);
    auto e = enumerate_wis_bruteforce(p, WisClass::ae_unital);
    auto [nodes, edges] = cp_figure();
    Poset fig = figure_poset(nodes, edges);
    CHECK(fig.covers().size() == 16);
    CHECK(isomorphic(e.poset, fig));
    // the drawn nodes are the named constructors, and the arrows are exactly the covers
    auto got = named_covers(e, cp_named(p));
    std::sort(edges.begin(), edges.end());
    CHECK(got == edges);
}

TEST_CASE("C_{p^2} figure") {
    for (int pr : {2, 3}) {
        auto q = chain_presentation(pr, 2);
        auto e = enumerate_wis_bruteforce(q, WisClass::unital);
        REQUIRE(e.systems.size() == 21);
        auto named = cp2_named(q);
        std::set<int> hit;
        for (const auto& [n, w] : named) hit.insert(index_of(e.systems, w));
        CHECK(hit.size() == 21);
        CHECK_FALSE(hit.count(-1));

        // label-matched: the covers are the drawn arrows with one arrow moved
        auto [nodes, edges] = cp2_figure_corrected();
        std::sort(edges.begin(), edges.end());
        CHECK(named_covers(e, named) == edges);
        CHECK(isomorphic(e.poset, figure_poset(nodes, edges)));

        // the drawn arrow is a composite, and the drawn poset misses 64 <= 44
        const auto [lo, hi] = cp2_true_cover();
        const auto [mid_lo, drawn_hi] = cp2_drawn_arrow();
        CHECK(leq(named.at(lo), named.at(hi)));
        CHECK(leq(named.at(mid_lo), named.at(lo)));
        CHECK(drawn_hi == hi);
        auto [dn, de] = cp2_figure();
        Poset drawn = figure_poset(dn, de);
        auto at = [&](const std::string& x) { return static_cast<int>(std::find(dn.begin(), dn.end(), x) - dn.begin()); };
        CHECK_FALSE(drawn.le[at(lo)][at(hi)]);
        CHECK_FALSE(isomorphic(e.poset, drawn));
    }
}

TEST_CASE("brute force equals fiberwise") {
    for (auto [pr, n] : {std::pair{2, 1}, {3, 1}, {2, 2}, {3, 2}, {2, 3}}) {
        auto p = chain_presentation(pr, n);
        auto b = enumerate_wis_bruteforce(p, WisClass::unital, {.labels = false});
        auto f = enumerate_wis_fiberwise(p, false);
        CHECK(same_poset(b, f.result));
        REQUIRE(f.points.size() == f.result.systems.size());
        for (std::size_t i = 0; i < f.points.size(); ++i) {
            CHECK(fR(f.result.systems[i]) == f.points[i].transfer);
            CHECK(families(f.result.systems[i]).fold == f.points[i].family);
        }
    }
    CHECK_THROWS_AS(enumerate_wis_fiberwise(build_presentation(TrivialPoint{})), unsupported_backend);
}

TEST_CASE("p-independence") {
    for (int n : {1, 2}) {
        auto a = enumerate_wis_bruteforce(chain_presentation(2, n), WisClass::ae_unital, {.labels = false});
        auto b = enumerate_wis_bruteforce(chain_presentation(3, n), WisClass::ae_unital, {.labels = false});
        CHECK(a.systems.size() == b.systems.size());
        CHECK(isomorphic(a.poset, b.poset));
    }
}

TEST_CASE("point and BG give the 4-chain") {
    auto chain4 = poset_from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    for (auto p : {build_presentation(TrivialPoint{}), build_presentation(OneObjectGroupoid{3}),
                   chain_presentation(2, 0)}) {
        auto e = enumerate_wis_bruteforce(p, WisClass::ae_unital);
        REQUIRE(e.systems.size() == 4);
        CHECK(isomorphic(e.poset, chain4));
        CHECK(e.systems[0] == empty_system(p));
        CHECK(e.systems[1] == triv(p));
        CHECK(e.systems[2] == zero(p));
        CHECK(e.systems[3] == complete(p));
        CHECK(e.poset.labels == std::vector<std::string>{"empty", "F^triv", "F^0", "F"});
    }
}

TEST_CASE("other backends enumerate") {
    auto c6 = build_presentation(FiniteGroupSpec{FiniteGroup::cyclic(6).table()});
    auto e = enumerate_wis_bruteforce(c6, WisClass::indexing, {.labels = false});
    CHECK(e.systems.size() == enumerate_transfer_systems(*c6).size());
    auto sl = build_presentation(MeetSemilattice{{"a", "b"}, {{0, 0}, {0, 1}}});
    auto es = enumerate_wis_bruteforce(sl, WisClass::ae_unital, {.labels = false});
    for (const auto& w : es.systems) CHECK(validate_wic(w).ok());
    CHECK(es.poset.is_partial_order());
}

TEST_CASE("caps") {
    auto p = chain_presentation(2, 2);
    CHECK_THROWS_AS(enumerate_wis_bruteforce(p, WisClass::unital, {.level_cap = 2}), too_large);
    CHECK_THROWS_AS(enumerate_wis_bruteforce(p, WisClass::unital, {.candidate_cap = 3}), too_large);
}

TEST_CASE("output does not depend on thread count") {
    auto p = chain_presentation(2, 2);
    auto a = enumerate_wis_bruteforce(p, WisClass::ae_unital, {.threads = 1});
    auto b = enumerate_wis_bruteforce(p, WisClass::ae_unital, {.threads = 7});
    CHECK(same_poset(a, b));
    CHECK(a.poset.labels == b.poset.labels);
    CHECK(export_dot(hasse(a)) == export_dot(hasse(b)));
}

TEST_CASE("hasse diagrams") {
    Poset one = poset_from_edges(1, {}, {"x"});
    auto h = hasse(one, {});
    CHECK(h.nodes.size() == 1);
    CHECK(h.edges.empty());
    CHECK(export_dot(h).find("->") == std::string::npos);

    auto e = enumerate_wis_bruteforce(chain_presentation(2, 2), WisClass::unital);
    auto d = hasse(e);
    CHECK(d.nodes.size() == 21);
    CHECK(d.edges.size() == 32);
    CHECK(d.edges == e.poset.covers());
    // covers are exactly the non-composite relations
    const auto& le = e.poset.le;
    for (auto [a, b] : d.edges) {
        CHECK(le[a][b]);
        for (std::size_t c = 0; c < le.size(); ++c)
            if (static_cast<int>(c) != a && static_cast<int>(c) != b) CHECK_FALSE((le[a][c] && le[c][b]));
    }
    auto j = export_json(d);
    CHECK(j.find("\"edges\"") != std::string::npos);
    CHECK(export_dot(d) == export_dot(hasse(e)));
}

TEST_CASE("labels") {
    auto p = chain_presentation(2, 1);
    CHECK(label_system(arity_support(named_rep(p, "lambda"))) == "F^{lambda}");
    CHECK(label_system(zero(p)) == "F^0");
    CHECK(label_system(complete(p)) == "F");
    const std::string h = label_system(perp_nonunital(p, Family{}));
    CHECK(h.rfind("W#", 0) == 0);
    CHECK(content_hash(zero(p)) == content_hash(zero(chain_presentation(2, 1))));
    CHECK(annotate(zero(p)).find("unital") != std::string::npos);
    for (auto k : {WisClass::ae_unital, WisClass::almost_unital, WisClass::unital, WisClass::one_color_ae,
                   WisClass::indexing})
        CHECK(parse_wis_class(wis_class_name(k)) == k);
    CHECK_THROWS_AS(parse_wis_class("nope"), invalid_spec);
}

}  // TEST_SUITE
