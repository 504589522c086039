#include <set>

#include "doctest.h"
#include "support.hpp"
#include "windex/error.hpp"

using namespace windex;
using namespace wt;

namespace {

struct Case {
    PresPtr p;
    std::vector<Wis> ae;      // aE-unital
    std::vector<Wis> unital;
};

const std::vector<Case>& cases() {
    static std::vector<Case> cs = [] {
        std::vector<Case> out;
        for (auto [pr, n] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
            auto p = chain_presentation(pr, n);
            Case c{p, {}, {}};
            if (n == 1) c.ae = enumerate_wis_bruteforce(p, WisClass::ae_unital, {.labels = false}).systems;
            c.unital = enumerate_wis_bruteforce(p, WisClass::unital, {.labels = false}).systems;
            out.push_back(std::move(c));
        }
        return out;
    }();
    return cs;
}

}  // namespace

TEST_SUITE("fibrations") {

TEST_CASE("color adjoints") {
    for (const auto& c : cases()) {
        if (c.ae.empty()) continue;
        for (const auto& f : enumerate_families(*c.p))
            for (const auto& w : c.ae) {
                const Family col = families(w).color;
                CHECK(leq(color_left(c.p, f), w) == f.subset_of(col));
                CHECK(leq(w, color_right(c.p, f)) == col.subset_of(f));
            }
        // both adjoints are fully faithful
        for (const auto& f : enumerate_families(*c.p)) {
            CHECK(families(color_left(c.p, f)).color == f);
            CHECK(families(color_right(c.p, f)).color == f);
        }
    }
}

TEST_CASE("unit left adjoint and the missing right adjoint") {
    for (const auto& c : cases()) {
        if (c.ae.empty()) continue;
        for (const auto& f : enumerate_families(*c.p))
            for (const auto& w : c.ae) CHECK(leq(unit_left(c.p, f), w) == f.subset_of(families(w).unit));
    }
    auto p = chain_presentation(2, 1);
    CHECK_FALSE(adjoints(FibMap::unit).right.has_value());
    // two systems without units at C_p join to one with all units
    Wis a = perp_nonunital(p, Family{}), b = zero(p, fam(*p, {"e"}));
    CHECK_FALSE(families(a).unit.contains(1));
    CHECK_FALSE(families(b).unit.contains(1));
    CHECK(unit_join_witness(p) == complete(p));
}

TEST_CASE("fold adjoints") {
    for (const auto& c : cases())
        for (const auto& f : enumerate_families(*c.p)) {
            Wis l = fold_left(c.p, f), r = fold_right(c.p, c.unital, f);
            CHECK(families(l).fold == f);
            CHECK(families(r).fold == f);
            for (const auto& w : c.unital) {
                const Family fw = families(w).fold;
                CHECK(leq(l, w) == f.subset_of(fw));
                CHECK(leq(w, r) == fw.subset_of(f));
            }
        }
    auto p = chain_presentation(2, 1);
    const Family e = fam(*p, {"e"});
    CHECK(fold_left(p, e) == join(zero(p), infty(p, e)));
    CHECK(fold_left(p, e).sparse() == fold_left(p, e).sparse());
    const auto& un = cases()[0].unital;
    CHECK(fold_right(p, un, e) == arity_support(named_rep(p, "lambda")));
}

TEST_CASE("transfer adjoints") {
    for (const auto& c : cases())
        for (const auto& r : enumerate_transfer_systems(*c.p)) {
            Wis l = transfer_left(c.p, r), rt = transfer_right(c.p, r);
            CHECK(fR(l) == r);
            CHECK(fR(rt) == r);
            CHECK(classify(rt).indexing_system);
            for (const auto& w : c.unital) {
                CHECK(leq(l, w) == r.subset_of(fR(w)));
                CHECK(leq(w, rt) == fR(w).subset_of(r));
            }
        }
    auto p = chain_presentation(2, 1);
    CHECK(transfer_right(p, trivial_transfer()) == infty(p));
    CHECK(fR(fold_left(p, fam(*p, {"e"}))) == trivial_transfer());
    CHECK_THROWS_AS(fR(infty(p, fam(*p, {"e"}))), not_unital);
    CHECK(fR(arity_support(named_rep(p, "lambda"))) == complete_transfer(*p));
    Wis ob = overline_F(p, complete_transfer(*p));
    CHECK_FALSE(classify(ob).indexing_system);
    CHECK_FALSE(ob.has(p->copies(1, 2)));
    CHECK_THROWS_AS(fR(triv(p)), not_unital);
}

TEST_CASE("indexing systems match transfer systems") {
    for (const auto& c : cases()) {
        const auto rs = enumerate_transfer_systems(*c.p);
        std::vector<Wis> idx;
        for (const auto& w : c.unital)
            if (classify(w).indexing_system) idx.push_back(w);
        CHECK(idx.size() == rs.size());
        for (const auto& a : rs)
            for (const auto& b : rs)
                CHECK(leq(transfer_to_indexing(c.p, a), transfer_to_indexing(c.p, b)) == a.subset_of(b));
        for (const auto& w : idx) CHECK(transfer_to_indexing(c.p, fR(w)) == w);
    }
}

TEST_CASE("combined map: image is the admissible pairs") {
    for (const auto& c : cases()) {
        std::set<std::pair<TransferSystem, Family>> image;
        for (const auto& w : c.unital) image.insert({fR(w), families(w).fold});
        std::set<std::pair<TransferSystem, Family>> adm;
        for (const auto& r : enumerate_transfer_systems(*c.p))
            for (const auto& f : enumerate_families(*c.p))
                if (admissible(c.p, r, f)) {
                    adm.insert({r, f});
                    Wis l = combined_left(c.p, r, f);
                    CHECK(fR(l) == r);
                    CHECK(families(l).fold == f);
                    for (const auto& w : c.unital)
                        CHECK(leq(l, w) == (r.subset_of(fR(w)) && f.subset_of(families(w).fold)));
                }
        CHECK(image == adm);
    }
}

TEST_CASE("domain and codomain") {
    auto q = chain_presentation(2, 2);
    auto dc = domain_codomain(q, transfers(*q, {{"C_2", "C_4"}}));
    CHECK(dc.domain == fam(*q, {"e", "C_2"}));
    CHECK(dc.codomain == all_orbits(*q));
    dc = domain_codomain(q, trivial_transfer());
    CHECK(dc.domain.empty());
    CHECK(dc.codomain.empty());
    auto p = chain_presentation(3, 1);
    dc = domain_codomain(p, complete_transfer(*p));
    CHECK(dc.domain == fam(*p, {"e"}));
    CHECK(dc.codomain == all_orbits(*p));
    // span formula vs fold of overline F, on every transfer system in reach
    for (auto pp : {chain_presentation(2, 1), chain_presentation(2, 2), chain_presentation(3, 3),
                    build_presentation(FiniteGroupSpec{FiniteGroup::cyclic(6).table()})})
        for (const auto& r : enumerate_transfer_systems(*pp)) {
            CHECK(domain_by_span(*pp, r) == domain_by_fold(pp, r));
            CHECK(domain_by_span(*pp, r).subset_of(codomain(*pp, r)));
        }
}

TEST_CASE("cocartesian transport examples") {
    auto p = chain_presentation(2, 1);
    const Family e = fam(*p, {"e"}), all = all_orbits(*p);
    CHECK(cocartesian_transport(FibMap::fold, zero(p), {e, {}}) == fold_left(p, e));
    CHECK(cocartesian_transport(FibMap::unit, zero(p, e), {all, {}}) == zero(p));
    Wis t = cocartesian_transport(FibMap::transfer_fold, zero(p), {e, complete_transfer(*p)});
    CHECK(t == join(overline_F(p, complete_transfer(*p)), fold_left(p, e)));
    // the fiber over (complete, {e}) is {overline F, F^lambda}; the transport is its bottom
    CHECK(t == overline_F(p, complete_transfer(*p)));
    CHECK(fR(t) == complete_transfer(*p));
    CHECK(families(t).fold == e);

    CHECK_THROWS_AS(cocartesian_transport(FibMap::fold, complete(p), {e, {}}), target_not_above);
    CHECK_THROWS_AS(cocartesian_transport(FibMap::fold, triv(p), {e, {}}), not_unital);
    auto q = chain_presentation(2, 2);
    CHECK_THROWS_AS(
        cocartesian_transport(FibMap::transfer_fold, zero(q), {fam(*q, {"e"}), transfers(*q, {{"C_2", "C_4"}})}),
        not_admissible);
}

TEST_CASE("transport universal property") {
    const std::vector<FibMap> maps{FibMap::color, FibMap::unit, FibMap::fold, FibMap::transfer, FibMap::transfer_fold};
    int checked = 0;
    for (const auto& c : cases())
        for (FibMap m : maps) {
            const bool on_ae = m == FibMap::color || m == FibMap::unit;
            const auto& poset = on_ae ? c.ae : c.unital;
            if (poset.empty()) continue;
            std::vector<Target> targets;
            const auto rs = enumerate_transfer_systems(*c.p);
            for (const auto& f : enumerate_families(*c.p)) {
                if (m == FibMap::transfer) break;
                if (m == FibMap::transfer_fold) {
                    for (const auto& r : rs)
                        if (admissible(c.p, r, f)) targets.push_back({f, r});
                } else {
                    targets.push_back({f, {}});
                }
            }
            if (m == FibMap::transfer)
                for (const auto& r : rs) targets.push_back({{}, r});
            for (const auto& w : poset)
                for (const auto& tg : targets) {
                    if (!target_leq(m, fib_image(m, w), tg)) continue;
                    Wis t = cocartesian_transport(m, w, tg);
                    CHECK(leq(w, t));
                    const Target ti = fib_image(m, t);
                    CHECK((target_leq(m, ti, tg) && target_leq(m, tg, ti)));
                    for (const auto& w2 : poset) {
                        CHECK(leq(t, w2) == (leq(w, w2) && target_leq(m, tg, fib_image(m, w2))));
                        ++checked;
                    }
                }
        }
    CHECK(checked >= 1000);
}

TEST_CASE("localizations are reflections") {
    const auto& c = cases()[0];
    auto all = enumerate_wis_bruteforce(c.p, WisClass::ae_unital, {.labels = false}).systems;
    // the poset of all systems over C_p is too large; use the aE ones plus some non-aE examples
    std::vector<Wis> inputs = all;
    inputs.push_back(perp_nonunital(c.p, Family{}));
    inputs.push_back(perp_nonunital(c.p, fam(*c.p, {"e"})));
    inputs.push_back(Wis::generated(c.p, {c.p->orbit(1, c.p->slice_index(1, "e"))}));
    inputs.push_back(Wis::generated(c.p, {c.p->copies(0, 2)}));
    struct L {
        Wis (*f)(const Wis&);
        bool (*in)(const Classification&);
    };
    const std::vector<L> ls{
        {localize_ae_unital, [](const Classification& k) { return k.ae_unital; }},
        {localize_one_color, [](const Classification& k) { return k.one_color; }},
        {localize_almost_unital, [](const Classification& k) { return k.almost_unital; }},
        {localize_unital, [](const Classification& k) { return k.unital; }},
        {localize_indexing, [](const Classification& k) { return k.indexing_system; }},
    };
    for (const auto& l : ls)
        for (const auto& w : inputs) {
            Wis r = l.f(w);
            CHECK(l.in(classify(r)));
            CHECK(leq(w, r));
            // minimal among aE-unital candidates of the class
            for (const auto& y : all)
                if (l.in(classify(y)) && leq(w, y)) CHECK(leq(r, y));
            if (l.in(classify(w))) CHECK(r == w);
        }
}

TEST_CASE("fR preserves joins and meets") {
    for (const auto& c : cases())
        for (const auto& a : c.unital)
            for (const auto& b : c.unital) {
                CHECK(fR(join(a, b)) == transfer_join(*c.p, fR(a), fR(b)));
                CHECK(fR(meet(a, b)) == transfer_meet(fR(a), fR(b)));
            }
}

TEST_CASE("fibration names") {
    for (auto m : {FibMap::color, FibMap::unit, FibMap::fold, FibMap::transfer, FibMap::transfer_fold})
        CHECK(parse_fib_map(fib_map_name(m)) == m);
    CHECK(parse_fib_map("nabla") == FibMap::fold);
    CHECK_THROWS_AS(parse_fib_map("bogus"), invalid_spec);
    CHECK(adjoints(FibMap::fold).right.has_value());
    CHECK_FALSE(adjoints(FibMap::transfer_fold).right.has_value());
}

}  // TEST_SUITE
