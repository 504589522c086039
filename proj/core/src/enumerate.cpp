#include "windex/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "windex/error.hpp"
#include "windex/fibrations.hpp"
#include "windex/reps.hpp"

namespace windex {

WisClass parse_wis_class(const std::string& name) {
    if (name == "aE_unital" || name == "ae_unital") return WisClass::ae_unital;
    if (name == "a_unital" || name == "almost_unital") return WisClass::almost_unital;
    if (name == "unital") return WisClass::unital;
    if (name == "one_color_aE" || name == "one_color_ae") return WisClass::one_color_ae;
    if (name == "indexing") return WisClass::indexing;
    throw invalid_spec("unknown class '" + name + "'");
}

std::string wis_class_name(WisClass c) {
    switch (c) {
        case WisClass::ae_unital: return "aE_unital";
        case WisClass::almost_unital: return "a_unital";
        case WisClass::unital: return "unital";
        case WisClass::one_color_ae: return "one_color_aE";
        case WisClass::indexing: return "indexing";
    }
    return "?";
}

bool in_class(const Classification& c, WisClass k) {
    switch (k) {
        case WisClass::ae_unital: return c.ae_unital;
        case WisClass::almost_unital: return c.almost_unital;
        case WisClass::unital: return c.unital;
        case WisClass::one_color_ae: return c.one_color && c.ae_unital;
        case WisClass::indexing: return c.indexing_system;
    }
    return false;
}

namespace {

bool is_term(const Presentation& p, const VSet& s) { return s == p.terminal(s.over); }

bool has(const std::vector<VSet>& level, const VSet& s) {
    return std::binary_search(level.begin(), level.end(), s);
}

// sub-multisets of s that are nonempty
void summands(const VSet& s, std::vector<VSet>& out) {
    VSet t = s;
    std::fill(t.mult.begin(), t.mult.end(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == s.mult.size()) {
            if (std::any_of(t.mult.begin(), t.mult.end(), [](int m) { return m > 0; })) out.push_back(t);
            return;
        }
        for (int m = 0; m <= s.mult[i]; ++m) {
            t.mult[i] = m;
            rec(i + 1);
        }
        t.mult[i] = 0;
    };
    rec(0);
}

// levels a system of the class can have at v, checked one level at a time
std::vector<std::vector<VSet>> level_options(const Presentation& p, int v, WisClass k, std::size_t cap) {
    const auto& uni = p.sparse_universe[v];
    if (uni.size() >= 63 || (std::size_t{1} << uni.size()) > cap)
        throw too_large("sparse universe over " + p.orbit_ids[v] + " has " + std::to_string(uni.size()) +
                        " sets; candidate cap exceeded");
    const VSet e = p.empty(v), star = p.terminal(v), two = p.copies(v, 2);
    const bool need_color = k != WisClass::ae_unital;
    const bool need_unit = k == WisClass::unital || k == WisClass::indexing;
    std::vector<std::vector<VSet>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << uni.size()); ++mask) {
        std::vector<VSet> level;
        for (std::size_t i = 0; i < uni.size(); ++i)
            if ((mask >> i) & 1u) level.push_back(uni[i]);
        std::sort(level.begin(), level.end());
        if (level.empty()) {
            if (!need_color && !need_unit) out.push_back(level);
            continue;
        }
        if (!has(level, star)) continue;
        if (need_unit && !has(level, e)) continue;
        if (k == WisClass::indexing && !has(level, two)) continue;
        bool nonterm = false, ok = true;
        for (const auto& s : level) {
            if (is_term(p, s)) continue;
            nonterm = true;
            if (s == e) continue;
            std::vector<VSet> sub;
            summands(s, sub);
            for (const auto& t : sub)
                if (!has(level, t)) ok = false;
        }
        // essence equals unit: a level with non-terminal members has the empty set
        if (nonterm && !has(level, e)) ok = false;
        if (ok) out.push_back(std::move(level));
    }
    return out;
}

bool restrictions_ok(const Presentation& p, const std::vector<std::vector<VSet>>& chosen,
                     const std::vector<char>& assigned, int v) {
    for (const auto& s : chosen[v]) {
        for (int f = 0; f < p.slice_count(v); ++f) {
            const int u = p.slices[v][f].orbit;
            if (!assigned[u]) continue;
            VSet r = restrict_vset(p, f, s);
            if (is_sparse(p, r) && !has(chosen[u], r)) return false;
        }
        for (const auto& perm : p.auts[v]) {
            VSet t = twist(s, perm);
            if (!has(chosen[v], t)) return false;
        }
    }
    // lower levels already chosen must restrict into v's level as well
    for (int w = 0; w < p.orbit_count(); ++w) {
        if (w == v || !assigned[w]) continue;
        for (int f = 0; f < p.slice_count(w); ++f) {
            if (p.slices[w][f].orbit != v) continue;
            for (const auto& s : chosen[w]) {
                VSet r = restrict_vset(p, f, s);
                if (is_sparse(p, r) && !has(chosen[v], r)) return false;
            }
        }
    }
    return true;
}

std::optional<Wis> check_candidate(const PresPtr& pp, const Collection& c, WisClass k) {
    const auto& p = *pp;
    Collection tab = closure(p, flatten(c), -1, p.sparse_bound);
    for (int v = 0; v < p.orbit_count(); ++v) {
        std::vector<VSet> sp;
        for (const auto& s : tab[v])
            if (is_sparse(p, s)) sp.push_back(s);
        std::sort(sp.begin(), sp.end());
        if (sp != c[v]) return std::nullopt;
    }
    Families f;
    Family nonterm;
    for (int v = 0; v < p.orbit_count(); ++v) {
        if (!tab[v].empty()) f.color.insert(v);
        for (const auto& s : tab[v])
            if (!is_term(p, s)) nonterm.insert(v);
        if (std::find(tab[v].begin(), tab[v].end(), p.empty(v)) != tab[v].end()) f.unit.insert(v);
        if (std::find(tab[v].begin(), tab[v].end(), p.copies(v, 2)) != tab[v].end()) f.fold.insert(v);
    }
    f.essence = generated_family(p, nonterm);
    if (!in_class(classify(p, f), k)) return std::nullopt;
    return Wis::sparse_unchecked(pp, c);
}

std::size_t member_count(const Wis& w) {
    std::size_t n = 0;
    for (const auto& l : w.sparse()) n += l.size();
    return n;
}

void sort_systems(std::vector<Wis>& ws) {
    std::sort(ws.begin(), ws.end(), [](const Wis& a, const Wis& b) {
        const auto na = member_count(a), nb = member_count(b);
        return na != nb ? na < nb : a.sparse() < b.sparse();
    });
}

Poset containment_poset(const std::vector<Wis>& ws, bool labels) {
    return poset_from_leq(
        static_cast<int>(ws.size()), [&](int i, int j) { return leq(ws[i], ws[j]); },
        labels ? label_systems(ws) : std::vector<std::string>{});
}

}  // namespace

Enumeration enumerate_wis_bruteforce(const PresPtr& pp, WisClass k, const EnumerationOptions& opt) {
    const auto& p = *pp;
    check_orbit_cap(p);
    const int n = p.orbit_count();
    std::vector<std::vector<std::vector<VSet>>> opts(n);
    for (int v = 0; v < n; ++v) opts[v] = level_options(p, v, k, opt.level_cap);

    // depth-first over levels, pruning on restrictions between assigned levels
    std::vector<Collection> cands;
    Collection chosen(n);
    std::vector<char> assigned(n, 0);
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            if (cands.size() >= opt.candidate_cap) throw too_large("candidate cap exceeded");
            cands.push_back(chosen);
            return;
        }
        for (const auto& level : opts[v]) {
            chosen[v] = level;
            assigned[v] = 1;
            if (restrictions_ok(p, chosen, assigned, v)) rec(v + 1);
            assigned[v] = 0;
        }
        chosen[v].clear();
    };
    rec(0);

    // closure checks in parallel; results merged by candidate index
    std::vector<std::optional<Wis>> found(cands.size());
    unsigned t = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
    t = std::min<unsigned>(t, std::max<std::size_t>(1, cands.size() / 16));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < t; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < cands.size(); i += t) found[i] = check_candidate(pp, cands[i], k);
        });
    for (auto& th : pool) th.join();

    Enumeration e;
    e.pres = pp;
    for (auto& f : found)
        if (f) e.systems.push_back(std::move(*f));
    sort_systems(e.systems);
    e.poset = containment_poset(e.systems, opt.labels);
    return e;
}

FiberwiseEnumeration enumerate_wis_fiberwise(const PresPtr& pp, bool labels) {
    const auto& p = *pp;
    require_chain(p);
    const auto rs = enumerate_transfer_systems(p);
    const auto fs = enumerate_families(p);
    std::vector<std::pair<FiberPoint, Wis>> items;
    for (const auto& r : rs)
        for (const auto& f : fs) {
            if (!admissible(pp, r, f)) continue;
            const Family scope = codomain(p, r) - f;
            for (const auto& s : enumerate_sieves(pp, r, scope))
                items.push_back({FiberPoint{r, f, s}, fiber_from_sieve(pp, r, f, s)});
        }
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        const auto na = member_count(a.second), nb = member_count(b.second);
        return na != nb ? na < nb : a.second.sparse() < b.second.sparse();
    });
    FiberwiseEnumeration out;
    out.result.pres = pp;
    for (auto& [pt, w] : items) {
        out.points.push_back(pt);
        out.result.systems.push_back(w);
    }
    // x <= y iff the base points compare and the transported sieve lies in y's sieve
    const auto& pts = out.points;
    out.result.poset = poset_from_leq(
        static_cast<int>(pts.size()),
        [&](int i, int j) {
            const auto& a = pts[i];
            const auto& b = pts[j];
            if (!a.transfer.subset_of(b.transfer) || !a.family.subset_of(b.family)) return false;
            return transport_sieve(pp, a.sieve, b.transfer, a.family, b.family).subset_of(b.sieve);
        },
        labels ? label_systems(out.result.systems) : std::vector<std::string>{});
    return out;
}

Poset transfer_poset(const Presentation& p, const std::vector<TransferSystem>& rs) {
    std::vector<std::string> labels;
    for (const auto& r : rs) labels.push_back(transfer_str(p, r));
    return poset_from_leq(
        static_cast<int>(rs.size()), [&](int i, int j) { return rs[i].subset_of(rs[j]); }, labels);
}

Poset family_poset(const Presentation& p, const std::vector<Family>& fs) {
    std::vector<std::string> labels;
    for (const auto& f : fs) labels.push_back("{" + family_str(p, f) + "}");
    return poset_from_leq(
        static_cast<int>(fs.size()), [&](int i, int j) { return fs[i].subset_of(fs[j]); }, labels);
}

std::string content_hash(const Wis& w) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    const auto c = sparse_part(w);
    for (std::size_t v = 0; v < c.size(); ++v) {
        mix(0xff00 + v);
        for (const auto& s : c[v]) {
            mix(0xfe);
            for (int m : s.mult) mix(static_cast<std::uint64_t>(m));
        }
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "W#%08x", static_cast<unsigned>(h ^ (h >> 32)));
    return buf;
}

namespace {

std::string with_family(const Presentation& p, const std::string& base, Family f) {
    if (f == all_orbits(p)) return base;
    return base + "_{" + family_str(p, f) + "}";
}

struct Entry {
    std::string name;
    Wis w;
};

std::vector<Entry> catalog(const PresPtr& pp) {
    const auto& p = *pp;
    std::vector<Entry> out;
    auto add = [&](std::string name, const Wis& w) {
        if (!w.is_sparse_form()) return;
        for (const auto& e : out)
            if (e.w.sparse() == w.sparse()) return;
        out.push_back({std::move(name), w});
    };
    add("empty", empty_system(pp));
    const auto fams = enumerate_families(p);
    for (const auto& f : fams) {
        if (f.empty()) continue;
        add(with_family(p, "F^0", f), zero(pp, f));
        add(with_family(p, "F^triv", f), triv(pp, f));
        add(with_family(p, "F", f), complete(pp, f));
        add(with_family(p, "F^inf", f), fold_left(pp, f));
    }
    try {
        for (const auto& r : enumerate_transfer_systems(p)) {
            if (r.pairs.empty()) continue;
            add("F_R" + transfer_str(p, r), transfer_to_indexing(pp, r));
            add("Fbar_R" + transfer_str(p, r), overline_F(pp, r));
        }
    } catch (const error&) {
    }
    if (p.is_group() && p.abelian) {
        try {
            const auto names = named_rep_names(p);
            std::vector<std::pair<std::string, RepDescriptor>> reps;
            for (const auto& n : names)
                if (n != "zero" && n != "trivial") reps.push_back({n, named_rep(pp, n)});
            const std::size_t single = reps.size();
            for (std::size_t i = 0; i < single; ++i)
                for (std::size_t j = i; j < single; ++j)
                    reps.push_back({reps[i].first + "+" + reps[j].first, rep_sum(reps[i].second, reps[j].second)});
            for (const auto& [n, v] : reps) {
                Wis a = arity_support(v);
                add("F^{" + n + "}", a);
                for (const auto& f : fams)
                    if (!f.empty() && f != all_orbits(p))
                        add("E_{" + family_str(p, f) + "}F^{" + n + "}", extend_by_empty(f, a));
            }
        } catch (const error&) {
        }
    }
    return out;
}

}  // namespace

std::vector<std::string> label_systems(const std::vector<Wis>& ws) {
    std::vector<std::string> out(ws.size());
    if (ws.empty()) return out;
    const PresPtr& pp = ws[0].pres_ptr();
    const auto cat = catalog(pp);
    std::size_t left = ws.size();
    auto match = [&](const std::string& name, const Wis& w) {
        for (std::size_t i = 0; i < ws.size(); ++i)
            if (out[i].empty() && ws[i].is_sparse_form() && w.is_sparse_form() && ws[i].sparse() == w.sparse()) {
                out[i] = name;
                --left;
            }
    };
    for (const auto& e : cat) match(e.name, e.w);
    // then joins of two named systems, only while something is unnamed
    for (std::size_t a = 0; a < cat.size() && left; ++a)
        for (std::size_t b = a + 1; b < cat.size() && left; ++b) {
            if (leq(cat[a].w, cat[b].w) || leq(cat[b].w, cat[a].w)) continue;
            Wis j = join(cat[a].w, cat[b].w);
            match(cat[a].name + " v " + cat[b].name, j);
        }
    for (std::size_t i = 0; i < ws.size(); ++i)
        if (out[i].empty()) out[i] = content_hash(ws[i]);
    return out;
}

std::string label_system(const Wis& w) { return label_systems({w})[0]; }

std::string annotate(const Wis& w) {
    const auto& p = w.pres();
    const Families f = families(w);
    const Classification c = classify(p, f);
    std::ostringstream os;
    std::vector<std::string> flags;
    if (c.indexing_system) flags.push_back("indexing");
    if (c.unital) flags.push_back("unital");
    if (c.almost_unital) flags.push_back("a-unital");
    if (c.ae_unital) flags.push_back("aE-unital");
    if (c.one_color) flags.push_back("one-color");
    for (std::size_t i = 0; i < flags.size(); ++i) os << (i ? "," : "") << flags[i];
    os << " c={" << family_str(p, f.color) << "} u={" << family_str(p, f.unit) << "} n={"
       << family_str(p, f.fold) << "} e={" << family_str(p, f.essence) << "}";
    if (c.unital) os << " fR=" << transfer_str(p, fR(w));
    return os.str();
}

HasseDiagram hasse(const Enumeration& e) {
    std::vector<std::string> notes;
    for (const auto& w : e.systems) notes.push_back(annotate(w));
    return hasse(e.poset, notes);
}

}  // namespace windex
