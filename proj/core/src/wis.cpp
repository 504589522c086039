#include "windex/wis.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

#include "windex/error.hpp"
#include "windex/gset.hpp"

namespace windex {

namespace {

using Table = std::vector<std::set<VSet>>;

Collection to_collection(const Table& t) {
    Collection c(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) c[i].assign(t[i].begin(), t[i].end());
    return c;
}

bool contains(const std::vector<VSet>& level, const VSet& s) {
    return std::binary_search(level.begin(), level.end(), s);
}

bool only_terminal_copies(const Presentation& p, const VSet& s) {
    for (int i = 0; i < static_cast<int>(s.mult.size()); ++i)
        if (i != p.star[s.over] && s.mult[i]) return false;
    return true;
}

bool is_terminal(const Presentation& p, const VSet& s) {
    return only_terminal_copies(p, s) && s.mult[p.star[s.over]] == 1;
}

// every S-indexed coproduct with components drawn from vals, up to bound points
std::vector<VSet> coproducts(const Presentation& p, const VSet& s, const Table& vals, int bound,
                             std::vector<std::vector<std::optional<std::vector<VSet>>>>& cache) {
    const int v = s.over;
    std::set<VSet> acc{p.empty(v)};
    for (int u = 0; u < p.slice_count(v); ++u) {
        if (!s.mult[u]) continue;
        auto& slot = cache[v][u];
        if (!slot) {
            std::vector<VSet> ch;
            const int pts = p.slices[v][u].points;
            for (const auto& t : vals[p.slices[v][u].orbit])
                if (p.points(t) * pts <= bound) ch.push_back(induce(p, v, u, t));
            slot = std::move(ch);
        }
        if (slot->empty()) return {};
        for (int k = 0; k < s.mult[u]; ++k) {
            std::set<VSet> next;
            for (const auto& a : acc) {
                const int pa = p.points(a);
                for (const auto& c : *slot)
                    if (pa + p.points(c) <= bound) next.insert(vset_sum(a, c));
            }
            acc.swap(next);
            if (acc.empty()) return {};
        }
    }
    return {acc.begin(), acc.end()};
}

Table saturate(const Presentation& p, const Collection& index, Table cur, int bound, int steps) {
    for (int round = 0; steps < 0 || round < steps; ++round) {
        std::vector<std::vector<std::optional<std::vector<VSet>>>> cache(p.orbit_count());
        for (int v = 0; v < p.orbit_count(); ++v) cache[v].resize(p.slice_count(v));
        Table next = cur;
        bool grew = false;
        for (int v = 0; v < p.orbit_count(); ++v)
            for (const auto& s : index[v])
                for (auto& r : coproducts(p, s, cur, bound, cache))
                    if (next[v].insert(std::move(r)).second) grew = true;
        cur.swap(next);
        if (!grew) break;
    }
    return cur;
}

Table to_table(const Collection& c) {
    Table t(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) t[i].insert(c[i].begin(), c[i].end());
    return t;
}

bool sparse_member(const Presentation& p, const Collection& c, const VSet& s) {
    const int v = s.over;
    if (only_terminal_copies(p, s)) return contains(c[v], p.copies(v, std::min(s.mult[p.star[v]], 2)));
    auto d = sparse_decompose(p, s);
    if (!contains(c[v], d.sbar)) return false;
    for (const auto& piece : d.pieces)
        if (!sparse_member(p, c, piece)) return false;
    return true;
}

// sub-multisets of s
void for_each_summand(const VSet& s, const std::function<void(const VSet&)>& fn) {
    VSet cur{s.over, std::vector<int>(s.mult.size(), 0)};
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == s.mult.size()) {
            fn(cur);
            return;
        }
        for (int k = 0; k <= s.mult[i]; ++k) {
            cur.mult[i] = k;
            rec(i + 1);
        }
        cur.mult[i] = 0;
    };
    rec(0);
}

int common_bound(const Wis& a, const Wis& b) {
    if (!a.is_sparse_form() && !b.is_sparse_form()) return std::min(a.bound(), b.bound());
    if (!a.is_sparse_form()) return a.bound();
    if (!b.is_sparse_form()) return b.bound();
    return default_bound(a.pres());
}

void same_presentation(const Wis& a, const Wis& b) {
    if (!same_tables(a.pres(), b.pres()))
        throw mixed_presentation("systems live over different presentations");
}

Wis from_levels(const PresPtr& p, Family f, const std::function<std::vector<VSet>(int)>& level) {
    require_family(*p, f);
    Collection c(p->orbit_count());
    for (int v = 0; v < p->orbit_count(); ++v)
        if (f.contains(v)) {
            c[v] = level(v);
            std::sort(c[v].begin(), c[v].end());
        }
    return Wis::sparse_unchecked(p, std::move(c));
}

}  // namespace

Wis Wis::sparse_unchecked(PresPtr p, Collection sparse) {
    Wis w;
    w.pres_ = std::move(p);
    w.form_ = Form::sparse;
    for (auto& level : sparse) {
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
    }
    w.data_ = std::move(sparse);
    return w;
}

Wis Wis::generated(PresPtr p, std::vector<VSet> gens, int bound) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    int need = 0;
    for (const auto& g : gens) need = std::max(need, p->points(g));
    if (bound <= 0) bound = std::max(default_bound(*p), need);
    Wis w;
    w.data_ = closure(*p, gens, -1, bound);
    w.pres_ = std::move(p);
    w.form_ = Form::generated;
    w.gens_ = std::move(gens);
    w.bound_ = bound;
    return w;
}

Membership Wis::member(const VSet& s) const {
    if (form_ == Form::sparse) return sparse_member(*pres_, data_, s) ? Membership::yes : Membership::no;
    if (pres_->points(s) > bound_) return Membership::indeterminate;
    return contains(data_[s.over], s) ? Membership::yes : Membership::no;
}

int default_bound(const Presentation& p, int query_points) {
    if (const char* env = std::getenv("WINDEX_BOUND")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    return std::max({8, 2 * p.max_slice_points, p.sparse_bound, 2 * query_points});
}

Collection empty_collection(const Presentation& p) { return Collection(p.orbit_count()); }

Collection collect(const Presentation& p, const std::vector<VSet>& sets) {
    Table t(p.orbit_count());
    for (const auto& s : sets) t[s.over].insert(s);
    return to_collection(t);
}

std::vector<VSet> flatten(const Collection& c) {
    std::vector<VSet> out;
    for (const auto& level : c) out.insert(out.end(), level.begin(), level.end());
    return out;
}

bool is_sparse(const Presentation& p, const VSet& s) {
    const int v = s.over;
    const int st = p.star[v];
    if (s.mult[st] > 2) return false;
    std::vector<int> present;
    for (int i = 0; i < static_cast<int>(s.mult.size()); ++i) {
        if (i == st || !s.mult[i]) continue;
        if (s.mult[i] > 1) return false;
        present.push_back(i);
    }
    if (s.mult[st] == 2) return present.empty();
    for (int a : present)
        for (int b : present)
            if (a != b && p.slice_hom[v][a][b]) return false;
    return true;
}

Collection hat(const Presentation& p, const Collection& c) {
    Table out(p.orbit_count());
    for (int w = 0; w < p.orbit_count(); ++w)
        for (const auto& s : c[w])
            for (int f = 0; f < p.slice_count(w); ++f) {
                VSet r = restrict_vset(p, f, s);
                for (const auto& perm : p.auts[r.over]) out[r.over].insert(twist(r, perm));
                out[r.over].insert(std::move(r));
            }
    for (int v = 0; v < p.orbit_count(); ++v)
        if (!out[v].empty()) out[v].insert(p.terminal(v));
    return to_collection(out);
}

Collection closure(const Presentation& p, const std::vector<VSet>& gens, int steps, int bound) {
    for (const auto& g : gens)
        if (p.points(g) > bound)
            throw bound_too_small("generator " + p.str(g) + " has more than " + std::to_string(bound) + " points");
    Collection h = hat(p, collect(p, gens));
    return to_collection(saturate(p, h, to_table(h), bound, steps));
}

Collection members_within(const Wis& w, int bound) {
    const auto& p = w.pres();
    Collection out(p.orbit_count());
    if (w.is_sparse_form()) {
        for (int v = 0; v < p.orbit_count(); ++v) {
            if (w.sparse()[v].empty()) continue;
            for (auto& s : vsets_within(p, v, bound))
                if (w.has(s)) out[v].push_back(std::move(s));
        }
        return out;
    }
    if (bound > w.bound())
        throw bound_too_small("asked for members up to " + std::to_string(bound) + " points, system bound is " +
                              std::to_string(w.bound()));
    for (int v = 0; v < p.orbit_count(); ++v)
        for (const auto& s : w.table()[v])
            if (p.points(s) <= bound) out[v].push_back(s);
    return out;
}

Families families(const Wis& w) {
    const auto& p = w.pres();
    check_orbit_cap(p);
    Families f;
    Family nonterm;
    const Collection& c = w.is_sparse_form() ? w.sparse() : w.table();
    for (int v = 0; v < p.orbit_count(); ++v) {
        for (const auto& s : c[v]) {
            if (is_terminal(p, s))
                f.color.insert(v);
            else
                nonterm.insert(v);
        }
        if (contains(c[v], p.empty(v))) f.unit.insert(v);
        if (contains(c[v], p.copies(v, 2))) f.fold.insert(v);
    }
    f.essence = generated_family(p, nonterm);
    return f;
}

Classification classify(const Presentation& p, const Families& f) {
    const Family all = all_orbits(p);
    Classification c;
    c.one_color = f.color == all;
    c.ae_unital = f.essence == f.unit;
    c.almost_unital = c.ae_unital && c.one_color;
    c.unital = f.unit == all;
    c.indexing_system = (f.unit & f.fold) == all;
    return c;
}

Classification classify(const Wis& w) { return classify(w.pres(), families(w)); }

bool operator==(const Wis& a, const Wis& b) {
    same_presentation(a, b);
    if (a.is_sparse_form() && b.is_sparse_form()) return a.sparse() == b.sparse();
    const int bd = common_bound(a, b);
    return members_within(a, bd) == members_within(b, bd);
}

bool leq(const Wis& a, const Wis& b) {
    same_presentation(a, b);
    if (a.is_sparse_form() && b.is_sparse_form()) {
        for (std::size_t v = 0; v < a.sparse().size(); ++v)
            if (!std::includes(b.sparse()[v].begin(), b.sparse()[v].end(), a.sparse()[v].begin(),
                               a.sparse()[v].end()))
                return false;
        return true;
    }
    const int bd = common_bound(a, b);
    auto ma = members_within(a, bd), mb = members_within(b, bd);
    for (std::size_t v = 0; v < ma.size(); ++v)
        if (!std::includes(mb[v].begin(), mb[v].end(), ma[v].begin(), ma[v].end())) return false;
    return true;
}

Wis meet(const Wis& a, const Wis& b) {
    same_presentation(a, b);
    const auto& p = a.pres();
    if (a.is_sparse_form() && b.is_sparse_form()) {
        Collection c(p.orbit_count());
        for (int v = 0; v < p.orbit_count(); ++v)
            std::set_intersection(a.sparse()[v].begin(), a.sparse()[v].end(), b.sparse()[v].begin(),
                                  b.sparse()[v].end(), std::back_inserter(c[v]));
        return Wis::sparse_unchecked(a.pres_ptr(), std::move(c));
    }
    const int bd = common_bound(a, b);
    auto ma = members_within(a, bd), mb = members_within(b, bd);
    std::vector<VSet> gens;
    for (std::size_t v = 0; v < ma.size(); ++v)
        std::set_intersection(ma[v].begin(), ma[v].end(), mb[v].begin(), mb[v].end(), std::back_inserter(gens));
    return Wis::generated(a.pres_ptr(), std::move(gens), bd);
}

Wis join(const Wis& a, const Wis& b) {
    same_presentation(a, b);
    const auto& p = a.pres();
    if (a.is_sparse_form() && b.is_sparse_form()) {
        auto gens = flatten(a.sparse());
        auto gb = flatten(b.sparse());
        gens.insert(gens.end(), gb.begin(), gb.end());
        Collection tab = closure(p, gens, -1, p.sparse_bound);
        Collection c(p.orbit_count());
        for (int v = 0; v < p.orbit_count(); ++v)
            for (const auto& s : tab[v])
                if (is_sparse(p, s)) c[v].push_back(s);
        return Wis::sparse_unchecked(a.pres_ptr(), std::move(c));
    }
    auto gens = a.is_sparse_form() ? flatten(a.sparse()) : a.generators();
    auto gb = b.is_sparse_form() ? flatten(b.sparse()) : b.generators();
    gens.insert(gens.end(), gb.begin(), gb.end());
    int bd = std::max(a.is_sparse_form() ? 0 : a.bound(), b.is_sparse_form() ? 0 : b.bound());
    bd = std::max(bd, default_bound(p));
    return Wis::generated(a.pres_ptr(), std::move(gens), bd);
}

Wis join_all(const PresPtr& p, const std::vector<Wis>& ws) {
    Wis acc = empty_system(p);
    for (const auto& w : ws) acc = join(acc, w);
    return acc;
}

Collection sparse_part(const Wis& w) {
    if (w.is_sparse_form()) return w.sparse();
    const auto& p = w.pres();
    if (w.bound() < p.sparse_bound)
        throw bound_too_small("bound " + std::to_string(w.bound()) + " is below the sparse bound " +
                              std::to_string(p.sparse_bound));
    Collection c(p.orbit_count());
    for (int v = 0; v < p.orbit_count(); ++v)
        for (const auto& s : w.table()[v])
            if (is_sparse(p, s)) c[v].push_back(s);
    return c;
}

SparseExtract sparse_extract(const Wis& w) {
    return {Wis::sparse_unchecked(w.pres_ptr(), sparse_part(w)), !classify(w).ae_unital};
}

Wis sparse_generate(const PresPtr& pp, const Collection& sparse) {
    const auto& p = *pp;
    if (static_cast<int>(sparse.size()) != p.orbit_count()) throw mismatched_index("one level per orbit expected");
    for (int v = 0; v < p.orbit_count(); ++v)
        for (const auto& s : sparse[v]) {
            if (s.over != v || static_cast<int>(s.mult.size()) != p.slice_count(v))
                throw mismatched_index("set filed under the wrong orbit");
            if (!is_sparse(p, s)) throw not_closed(p.str(s) + " is not sparse");
        }
    Collection norm = sparse;
    for (auto& level : norm) {
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
    }
    auto gens = flatten(norm);
    Collection tab = closure(p, gens, -1, p.sparse_bound);
    for (int v = 0; v < p.orbit_count(); ++v)
        for (const auto& s : tab[v])
            if (is_sparse(p, s) && !contains(norm[v], s)) {
                // find a one-step witness when there is one
                std::string how = "the closure";
                Collection one = closure(p, gens, 1, p.sparse_bound);
                if (contains(one[v], s)) how = "a single indexed coproduct of members";
                throw not_closed(p.str(s) + " over " + p.orbit_ids[v] + " arises from " + how +
                                 " but is missing from the collection");
            }
    auto tmp = Wis::sparse_unchecked(pp, norm);
    // families read off the full bounded closure
    Families f;
    Family nonterm;
    for (int v = 0; v < p.orbit_count(); ++v) {
        for (const auto& s : tab[v])
            if (!is_terminal(p, s)) nonterm.insert(v);
        if (contains(tab[v], p.empty(v))) f.unit.insert(v);
    }
    if (generated_family(p, nonterm) != f.unit) return Wis::generated(pp, gens);
    return tmp;
}

Decomposition sparse_decompose(const Presentation& p, const VSet& s) {
    const int v = s.over;
    const int st = p.star[v];
    Decomposition d;
    for (int i = 0; i < p.slice_count(v); ++i)
        if (s.mult[i]) d.isotropy.push_back(i);
    std::vector<int> e(p.slice_count(v), -1), fmap(p.slice_count(v), -1);
    for (int u : d.isotropy) {
        e[u] = u;
        fmap[u] = p.star[p.slices[v][u].orbit];
    }
    std::vector<int> alive = d.isotropy;
    for (;;) {
        bool moved = false;
        for (std::size_t a = 0; a < alive.size() && !moved; ++a) {
            const int from = alive[a];
            if (from == st) continue;
            for (std::size_t b = 0; b < alive.size() && !moved; ++b) {
                const int to = alive[b];
                if (to == st || to == from || !p.slice_hom[v][from][to]) continue;
                const int wo = p.slices[v][to].orbit;
                int x = -1;
                for (int y = 0; y < p.slice_count(wo) && x < 0; ++y)
                    if (p.ind[v][to][y] == from) x = y;
                if (x < 0) throw error("inconsistent presentation: no slice realizes a map");
                for (int u : d.isotropy)
                    if (e[u] == from) {
                        e[u] = to;
                        fmap[u] = p.ind[wo][x][fmap[u]];
                    }
                alive.erase(alive.begin() + static_cast<long>(a));
                moved = true;
            }
        }
        if (!moved) break;
    }
    d.reduced_isotropy = alive;
    d.sbar = p.empty(v);
    for (int w : alive) {
        d.sbar.mult[w] = 1;
        VSet piece = p.empty(p.slices[v][w].orbit);
        for (int u : d.isotropy)
            if (e[u] == w) piece.mult[fmap[u]] += s.mult[u];
        d.pieces.push_back(std::move(piece));
    }
    for (int u : d.isotropy) {
        d.retraction.push_back(e[u]);
        d.retraction_map.push_back(fmap[u]);
    }
    return d;
}

bool WicValidation::ok() const {
    for (const auto& a : axioms)
        if ((a.name == "IS-a" || a.name == "IC-a" || a.name == "IC-b" || a.name == "closure") && !a.pass)
            return false;
    return true;
}

bool WicValidation::passes(const std::string& name) const {
    for (const auto& a : axioms)
        if (a.name == name) return a.pass;
    return false;
}

WicValidation validate_wic(const Wis& w, int bound) {
    const auto& p = w.pres();
    if (bound <= 0) bound = default_bound(p);
    if (!w.is_sparse_form()) bound = std::min(bound, w.bound());
    // below this the sparse part and 2* are not both visible
    const int least = std::max(2, p.sparse_bound);
    if (bound < least)
        throw bound_too_small("validation needs a bound of at least " + std::to_string(least) + ", got " +
                              std::to_string(bound));
    const Collection tab = members_within(w, bound);
    auto in = [&](const VSet& s) { return contains(tab[s.over], s); };
    AxiomResult isa{"IS-a"}, ica{"IC-a"}, icb{"IC-b"}, clo{"closure"}, i1{"IC-i"}, i2{"IC-ii"}, i3{"IC-iii"},
        i4{"IC-iv"};
    auto fail = [](AxiomResult& a, const std::string& why) {
        if (a.pass) a.witness = why;
        a.pass = false;
    };
    for (int v = 0; v < p.orbit_count(); ++v) {
        if (tab[v].empty()) {
            fail(i1, "no members over " + p.orbit_ids[v]);
        } else if (!in(p.terminal(v))) {
            fail(isa, "level " + p.orbit_ids[v] + " is nonempty but lacks *");
        }
        if (!in(p.copies(v, 2))) fail(i4, "2* missing over " + p.orbit_ids[v]);
        for (const auto& s : tab[v]) {
            for (int f = 0; f < p.slice_count(v); ++f) {
                VSet r = restrict_vset(p, f, s);
                bool ok = in(r);
                for (const auto& perm : p.auts[r.over]) ok = ok && in(twist(r, perm));
                if (!ok) fail(ica, "restriction of " + p.str(s) + " to " + p.slices[v][f].id + " is missing");
            }
            const bool terminal = is_terminal(p, s);
            for_each_summand(s, [&](const VSet& t) {
                if (in(t)) return;
                const bool nonempty = p.points(t) > 0;
                if (!terminal && nonempty) fail(i2, p.str(t) + " is a nonempty summand of " + p.str(s));
                fail(i3, p.str(t) + " is a summand of " + p.str(s));
            });
        }
    }
    {
        std::vector<std::vector<std::optional<std::vector<VSet>>>> cache(p.orbit_count());
        for (int v = 0; v < p.orbit_count(); ++v) cache[v].resize(p.slice_count(v));
        Table t = to_table(tab);
        for (int v = 0; v < p.orbit_count() && clo.pass; ++v)
            for (const auto& s : tab[v]) {
                for (const auto& r : coproducts(p, s, t, bound, cache))
                    if (!in(r)) {
                        fail(clo, p.str(r) + " is a " + p.str(s) + "-indexed coproduct of members");
                        break;
                    }
                if (!clo.pass) break;
            }
    }
    icb.witness = "";
    return WicValidation{{isa, ica, icb, clo, i1, i2, i3, i4}};
}

Wis empty_system(const PresPtr& p) { return Wis::sparse_unchecked(p, empty_collection(*p)); }
Wis triv(const PresPtr& p) { return triv(p, all_orbits(*p)); }
Wis zero(const PresPtr& p) { return zero(p, all_orbits(*p)); }
Wis infty(const PresPtr& p) { return infty(p, all_orbits(*p)); }
Wis complete(const PresPtr& p) { return complete(p, all_orbits(*p)); }

Wis triv(const PresPtr& p, Family f) {
    return from_levels(p, f, [&](int v) { return std::vector<VSet>{p->terminal(v)}; });
}
Wis zero(const PresPtr& p, Family f) {
    return from_levels(p, f, [&](int v) { return std::vector<VSet>{p->empty(v), p->terminal(v)}; });
}
Wis infty(const PresPtr& p, Family f) {
    return from_levels(p, f, [&](int v) { return std::vector<VSet>{p->empty(v), p->terminal(v), p->copies(v, 2)}; });
}
Wis complete(const PresPtr& p, Family f) {
    return from_levels(p, f, [&](int v) { return p->sparse_universe[v]; });
}

Wis extend_by_empty(Family f, const Wis& w) {
    const auto& p = w.pres();
    require_family(p, f);
    if (w.is_sparse_form()) {
        Collection c = w.sparse();
        for (int v = 0; v < p.orbit_count(); ++v)
            if (!f.contains(v)) c[v].clear();
        return Wis::sparse_unchecked(w.pres_ptr(), std::move(c));
    }
    std::vector<VSet> gens;
    for (int v = 0; v < p.orbit_count(); ++v)
        if (f.contains(v)) gens.insert(gens.end(), w.table()[v].begin(), w.table()[v].end());
    return Wis::generated(w.pres_ptr(), std::move(gens), w.bound());
}

Wis borel(Family f, const Wis& w) { return extend_by_empty(f, w); }

Wis perp_nonunital(const PresPtr& p, Family f, int bound) {
    require_family(*p, f);
    if (bound <= 0) bound = default_bound(*p);
    std::vector<VSet> gens;
    for (int v = 0; v < p->orbit_count(); ++v)
        for (auto& s : vsets_within(*p, v, bound)) {
            bool inside = true;
            for (int i = 0; i < p->slice_count(v); ++i)
                if (s.mult[i] && !f.contains(p->slices[v][i].orbit)) inside = false;
            if (f.contains(v) || !inside) gens.push_back(std::move(s));
        }
    return Wis::generated(p, std::move(gens), bound);
}

Wis restrict_wis(const Wis& w, int v) {
    const auto& p = w.pres();
    if (!p.chain) throw unsupported_backend("slice restriction is implemented for chain groups");
    auto q = chain_presentation(p.chain->p, v);
    Collection c(v + 1);
    const Collection& src = w.is_sparse_form() ? w.sparse() : w.table();
    for (int u = 0; u <= v; ++u)
        for (const auto& s : src[u]) c[u].push_back(VSet{u, s.mult});
    if (w.is_sparse_form()) return Wis::sparse_unchecked(q, std::move(c));
    return Wis::generated(q, flatten(c), w.bound());
}

Wis coinduce_wis(const Wis& slice_system, const PresPtr& target) {
    const auto& src = slice_system.pres();
    if (!src.chain || !target->chain) throw unsupported_backend("coinduction is implemented for chain groups");
    if (src.chain->p != target->chain->p || src.chain->n > target->chain->n)
        throw mismatched_index("slice system does not sit inside the target chain");
    const int h = src.chain->n;
    const int bound = default_bound(*target);
    std::vector<VSet> gens;
    for (int u = 0; u < target->orbit_count(); ++u)
        for (auto& s : vsets_within(*target, u, bound)) {
            bool ok = true;
            for (int l = 0; l <= std::min(u, h) && ok; ++l) {
                VSet r = restrict_to(*target, l, s);
                auto m = slice_system.member(VSet{l, r.mult});
                if (m == Membership::indeterminate) throw bound_too_small("slice system bound too small");
                ok = m == Membership::yes;
            }
            if (ok) gens.push_back(std::move(s));
        }
    return Wis::generated(target, std::move(gens), bound);
}

Wis multiplicative_hull(const Wis& w, int product_bound) {
    const auto& pp = w.pres_ptr();
    const auto& p = *pp;
    if (!p.group) throw unsupported_backend("indexed products need a group backend");
    if (!classify(w).one_color) throw invalid_spec("the multiplicative hull needs a one-color system");
    const Collection comps = members_within(w, product_bound);
    Collection out(p.orbit_count());
    for (int v = 0; v < p.orbit_count(); ++v)
        for (const auto& s : p.sparse_universe[v]) {
            const auto orbs = expand_orbits(s);
            std::vector<const std::vector<VSet>*> lists;
            bool vacuous = false;
            for (int u : orbs) {
                lists.push_back(&comps[p.slices[v][u].orbit]);
                vacuous = vacuous || lists.back()->empty();
            }
            bool ok = true;
            if (!vacuous) {
                std::vector<std::size_t> idx(orbs.size(), 0);
                std::vector<VSet> t(orbs.size());
                for (bool more = true; more && ok;) {
                    for (std::size_t i = 0; i < orbs.size(); ++i) t[i] = (*lists[i])[idx[i]];
                    auto m = w.member(indexed_product(pp, s, t));
                    if (m == Membership::indeterminate) throw bound_too_small("product escapes the system bound");
                    ok = m == Membership::yes;
                    more = false;
                    for (std::size_t i = 0; i < idx.size(); ++i) {
                        if (++idx[i] < lists[i]->size()) {
                            more = true;
                            break;
                        }
                        idx[i] = 0;
                    }
                }
            }
            if (ok) out[v].push_back(s);
        }
    return sparse_generate(pp, out);
}

std::string describe(const Wis& w) {
    const auto& p = w.pres();
    std::ostringstream os;
    const Collection& c = w.is_sparse_form() ? w.sparse() : w.table();
    for (int v = 0; v < p.orbit_count(); ++v) {
        if (v) os << "; ";
        os << p.orbit_ids[v] << ": {";
        bool first = true;
        for (const auto& s : c[v]) {
            if (!w.is_sparse_form() && !is_sparse(p, s)) continue;
            os << (first ? "" : ", ") << p.str(s);
            first = false;
        }
        os << "}";
    }
    return os.str();
}

}  // namespace windex
