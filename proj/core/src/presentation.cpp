#include "windex/presentation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "windex/error.hpp"

namespace windex {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

PresPtr build_chain(const ChainGroup& spec) {
    if (!is_prime(spec.p)) throw invalid_spec(std::to_string(spec.p) + " is not prime");
    if (spec.n < 0) throw invalid_spec("negative chain length");
    std::vector<long long> pw{1};
    for (int i = 0; i < spec.n; ++i) {
        pw.push_back(pw.back() * spec.p);
        if (pw.back() > (1 << 30)) throw too_large("group order exceeds 2^30");
    }
    auto pr = std::make_shared<Presentation>();
    auto& p = *pr;
    const int n = spec.n;
    p.backend = Backend::chain;
    p.chain = spec;
    p.name = n == 0 ? "e" : "C_" + std::to_string(pw[n]);
    for (int j = 0; j <= n; ++j) p.orbit_ids.push_back(j == 0 ? "e" : "C_" + std::to_string(pw[j]));
    p.slices.resize(n + 1);
    p.res.resize(n + 1);
    p.ind.resize(n + 1);
    p.auts.resize(n + 1);
    p.hom.assign(n + 1, std::vector<char>(n + 1, 0));
    for (int k = 0; k <= n; ++k) {
        for (int j = 0; j <= k; ++j) p.slices[k].push_back({p.orbit_ids[j], j, static_cast<int>(pw[k - j])});
        p.star.push_back(k);
        for (int j = k; j <= n; ++j) p.hom[k][j] = 1;
        p.res[k].resize(k + 1);
        p.ind[k].resize(k + 1);
        for (int l = 0; l <= k; ++l) {
            // C_{p^l} \ C_{p^k} / C_{p^j}: p^{k-max(l,j)} double cosets, stabilizer C_{p^min(l,j)}
            for (int j = 0; j <= k; ++j) {
                std::vector<int> m(l + 1, 0);
                m[std::min(l, j)] = static_cast<int>(pw[k - std::max(l, j)]);
                p.res[k][l].push_back(std::move(m));
            }
            for (int j = 0; j <= l; ++j) p.ind[k][l].push_back(j);
        }
    }
    if (pw[n] <= 4096) {
        GroupModel gm;
        gm.group = FiniteGroup::cyclic(static_cast<int>(pw[n]));
        for (int j = 0; j <= n; ++j) {
            FiniteGroup::Subgroup h;
            for (long long x = 0; x < pw[n]; x += pw[n - j]) h.push_back(static_cast<int>(x));
            gm.orbit_rep.push_back(h);
        }
        for (int k = 0; k <= n; ++k) {
            gm.slice_rep.emplace_back(gm.orbit_rep.begin(), gm.orbit_rep.begin() + k + 1);
            gm.slice_conj.emplace_back(k + 1, 0);
        }
        p.group = std::move(gm);
    }
    p.abelian = true;
    p.finalize();
    return pr;
}

PresPtr build_group(const FiniteGroupSpec& spec) {
    if (static_cast<int>(spec.cayley_table.size()) > spec.max_order)
        throw too_large("group order " + std::to_string(spec.cayley_table.size()) + " above cap " +
                        std::to_string(spec.max_order));
    FiniteGroup g(spec.cayley_table);
    using Sub = FiniteGroup::Subgroup;
    const auto subs = g.subgroups();

    std::map<Sub, int> gclass;
    std::vector<Sub> reps;
    for (const auto& s : subs) {
        if (gclass.count(s)) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(s);
        for (int x = 0; x < g.order(); ++x) gclass.emplace(g.conjugate(x, s), c);
    }
    const int m = static_cast<int>(reps.size());

    auto pr = std::make_shared<Presentation>();
    auto& p = *pr;
    p.backend = Backend::group;
    p.name = "G" + std::to_string(g.order());
    std::map<std::size_t, int> per_size;
    for (const auto& r : reps) per_size[r.size()]++;
    std::map<std::size_t, int> seen_size;
    for (const auto& r : reps) {
        std::string id;
        if (r.size() == 1)
            id = "e";
        else if (static_cast<int>(r.size()) == g.order())
            id = "G";
        else {
            id = "H" + std::to_string(r.size());
            if (per_size[r.size()] > 1) id += "_" + std::to_string(++seen_size[r.size()]);
        }
        p.orbit_ids.push_back(id);
    }

    GroupModel gm;
    gm.group = g;
    gm.orbit_rep = reps;
    std::vector<std::map<Sub, int>> slice_of(m);
    p.slices.resize(m);
    for (int v = 0; v < m; ++v) {
        const Sub& h = reps[v];
        struct Cand {
            Sub rep;
            int cls;
        };
        std::vector<Cand> cands;
        std::map<Sub, int> local;
        for (const auto& k : subs) {
            if (!FiniteGroup::subset(k, h) || local.count(k)) continue;
            int idx = static_cast<int>(cands.size());
            cands.push_back({k, gclass.at(k)});
            for (int x : h) local.emplace(g.conjugate(x, k), idx);
        }
        std::vector<int> order(cands.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            const auto& ca = cands[a];
            const auto& cb = cands[b];
            if (ca.rep.size() != cb.rep.size()) return ca.rep.size() < cb.rep.size();
            if (ca.cls != cb.cls) return ca.cls < cb.cls;
            return ca.rep < cb.rep;
        });
        std::vector<int> pos(cands.size());
        for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
        std::map<int, int> per_cls, seen_cls;
        for (const auto& c : cands) per_cls[c.cls]++;
        std::vector<Sub> srep;
        std::vector<int> sconj;
        for (int i : order) {
            const auto& c = cands[i];
            std::string id = p.orbit_ids[c.cls];
            if (per_cls[c.cls] > 1) id += "#" + std::to_string(++seen_cls[c.cls]);
            p.slices[v].push_back({id, c.cls, static_cast<int>(h.size() / c.rep.size())});
            srep.push_back(c.rep);
            int conj = -1;
            for (int x = 0; x < g.order() && conj < 0; ++x)
                if (g.conjugate(x, c.rep) == reps[c.cls]) conj = x;
            sconj.push_back(conj);
        }
        for (auto& [k, idx] : local) slice_of[v][k] = pos[idx];
        gm.slice_rep.push_back(std::move(srep));
        gm.slice_conj.push_back(std::move(sconj));
        p.star.push_back(slice_of[v].at(h));
    }

    p.hom.assign(m, std::vector<char>(m, 0));
    for (int v = 0; v < m; ++v)
        for (const auto& s : p.slices[v]) p.hom[s.orbit][v] = 1;

    p.res.resize(m);
    p.ind.resize(m);
    p.auts.resize(m);
    for (int v = 0; v < m; ++v) {
        const Sub& h = reps[v];
        const int ns = p.slice_count(v);
        p.res[v].resize(ns);
        for (int f = 0; f < ns; ++f) {
            const Sub& l = gm.slice_rep[v][f];
            const int gf = gm.slice_conj[v][f];
            const int u = p.slices[v][f].orbit;
            for (int w = 0; w < ns; ++w) {
                const Sub& k = gm.slice_rep[v][w];
                std::vector<int> out(p.slice_count(u), 0);
                std::vector<char> done(g.order(), 0);
                for (int x : h) {
                    if (done[x]) continue;
                    for (int a : l)
                        for (int b : k) done[g.mul(g.mul(a, x), b)] = 1;
                    Sub mm = FiniteGroup::intersect(l, g.conjugate(x, k));
                    out[slice_of[u].at(g.conjugate(gf, mm))]++;
                }
                p.res[v][f].push_back(std::move(out));
            }
        }
        p.ind[v].resize(ns);
        for (int uu = 0; uu < ns; ++uu) {
            const int u = p.slices[v][uu].orbit;
            const int ginv = g.inv(gm.slice_conj[v][uu]);
            for (int x = 0; x < p.slice_count(u); ++x)
                p.ind[v][uu].push_back(slice_of[v].at(g.conjugate(ginv, gm.slice_rep[u][x])));
        }
        std::set<std::vector<int>> perms;
        for (int x = 0; x < g.order(); ++x) {
            if (g.conjugate(x, h) != h) continue;
            std::vector<int> perm(ns);
            bool ident = true;
            for (int s = 0; s < ns; ++s) {
                perm[s] = slice_of[v].at(g.conjugate(x, gm.slice_rep[v][s]));
                ident = ident && perm[s] == s;
            }
            if (!ident) perms.insert(perm);
        }
        p.auts[v].assign(perms.begin(), perms.end());
    }
    p.abelian = g.is_abelian();
    p.group = std::move(gm);
    p.finalize();
    return pr;
}

PresPtr build_semilattice(const MeetSemilattice& spec) {
    const int m = static_cast<int>(spec.elements.size());
    if (m == 0) throw invalid_spec("empty semilattice");
    if (static_cast<int>(spec.meet_table.size()) != m) throw invalid_spec("meet table has wrong size");
    for (const auto& row : spec.meet_table) {
        if (static_cast<int>(row.size()) != m) throw invalid_spec("meet table is not square");
        for (int x : row)
            if (x < 0 || x >= m) throw invalid_spec("meet table entry out of range");
    }
    std::set<std::string> ids(spec.elements.begin(), spec.elements.end());
    if (static_cast<int>(ids.size()) != m) throw invalid_spec("duplicate semilattice element");
    auto meet = [&](int a, int b) { return spec.meet_table[a][b]; };
    for (int a = 0; a < m; ++a) {
        if (meet(a, a) != a) throw invalid_spec("meet is not idempotent");
        for (int b = 0; b < m; ++b) {
            if (meet(a, b) != meet(b, a)) throw invalid_spec("meet is not commutative");
            for (int c = 0; c < m; ++c)
                if (meet(meet(a, b), c) != meet(a, meet(b, c))) throw invalid_spec("meet is not associative");
        }
    }
    auto pr = std::make_shared<Presentation>();
    auto& p = *pr;
    p.backend = Backend::semilattice;
    p.name = "semilattice";
    p.orbit_ids = spec.elements;
    p.hom.assign(m, std::vector<char>(m, 0));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) p.hom[a][b] = meet(a, b) == a;
    p.slices.resize(m);
    p.res.resize(m);
    p.ind.resize(m);
    p.auts.resize(m);
    std::vector<std::vector<int>> slice_of(m, std::vector<int>(m, -1));
    for (int v = 0; v < m; ++v) {
        for (int u = 0; u < m; ++u)
            if (p.hom[u][v]) {
                slice_of[v][u] = p.slice_count(v);
                p.slices[v].push_back({spec.elements[u], u, 1});
            }
        p.star.push_back(slice_of[v][v]);
    }
    for (int v = 0; v < m; ++v) {
        const int ns = p.slice_count(v);
        p.res[v].resize(ns);
        p.ind[v].resize(ns);
        for (int f = 0; f < ns; ++f) {
            const int a = p.slices[v][f].orbit;
            for (int w = 0; w < ns; ++w) {
                std::vector<int> out(p.slice_count(a), 0);
                out[slice_of[a][meet(a, p.slices[v][w].orbit)]] = 1;
                p.res[v][f].push_back(std::move(out));
            }
            for (const auto& x : p.slices[a]) p.ind[v][f].push_back(slice_of[v][x.orbit]);
        }
    }
    p.finalize();
    return pr;
}

PresPtr build_single(const std::string& id, Backend b) {
    auto pr = std::make_shared<Presentation>();
    auto& p = *pr;
    p.backend = b;
    p.name = id;
    p.orbit_ids = {id};
    p.slices = {{{id, 0, 1}}};
    p.star = {0};
    p.hom = {{1}};
    p.res = {{{{1}}}};
    p.ind = {{{0}}};
    p.auts.resize(1);
    p.finalize();
    return pr;
}

}  // namespace

PresPtr build_presentation(const BackendSpec& spec) {
    return std::visit(
        [](const auto& s) -> PresPtr {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ChainGroup>)
                return build_chain(s);
            else if constexpr (std::is_same_v<T, FiniteGroupSpec>)
                return build_group(s);
            else if constexpr (std::is_same_v<T, MeetSemilattice>)
                return build_semilattice(s);
            else if constexpr (std::is_same_v<T, OneObjectGroupoid>) {
                if (s.group_order < 1) throw invalid_spec("groupoid needs a positive group order");
                return build_single("BG", Backend::groupoid);
            } else
                return build_single("*", Backend::point);
        },
        spec);
}

PresPtr chain_presentation(int p, int n) { return build_presentation(ChainGroup{p, n}); }

bool same_tables(const Presentation& a, const Presentation& b) {
    if (&a == &b) return true;
    if (a.orbit_ids != b.orbit_ids || a.star != b.star || a.res != b.res || a.ind != b.ind || a.auts != b.auts)
        return false;
    for (int v = 0; v < a.orbit_count(); ++v) {
        if (a.slice_count(v) != b.slice_count(v)) return false;
        for (int i = 0; i < a.slice_count(v); ++i) {
            const auto &x = a.slices[v][i], &y = b.slices[v][i];
            if (x.id != y.id || x.orbit != y.orbit || x.points != y.points) return false;
        }
    }
    return true;
}

void Presentation::finalize(std::size_t sparse_cap) {
    const int m = orbit_count();
    slice_hom.assign(m, {});
    max_slice_points = 1;
    for (int v = 0; v < m; ++v) {
        const int ns = slice_count(v);
        slice_hom[v].assign(ns, std::vector<char>(ns, 0));
        for (int a = 0; a < ns; ++a) {
            const int u = slices[v][a].orbit;
            for (int b = 0; b < ns; ++b) slice_hom[v][a][b] = res[v][a][b][star[u]] > 0;
            max_slice_points = std::max(max_slice_points, slices[v][a].points);
        }
    }
    sparse_universe.assign(m, {});
    sparse_bound = 2;
    for (int v = 0; v < m; ++v) {
        auto& out = sparse_universe[v];
        out.push_back(empty(v));
        out.push_back(copies(v, 1));
        out.push_back(copies(v, 2));
        std::vector<int> others;
        for (int s = 0; s < slice_count(v); ++s)
            if (s != star[v]) others.push_back(s);
        std::vector<int> chosen;
        bool overflow = false;
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (overflow) return;
            if (i == others.size()) {
                if (chosen.empty()) return;
                VSet a = empty(v);
                for (int s : chosen) a.mult[s] = 1;
                VSet b = a;
                b.mult[star[v]] = 1;
                out.push_back(a);
                out.push_back(b);
                if (out.size() > sparse_cap) overflow = true;
                return;
            }
            rec(i + 1);
            const int s = others[i];
            for (int c : chosen)
                if (slice_hom[v][s][c] || slice_hom[v][c][s]) return;
            chosen.push_back(s);
            rec(i + 1);
            chosen.pop_back();
        };
        rec(0);
        if (overflow) throw too_large("sparse universe over " + orbit_ids[v] + " exceeds cap");
        std::sort(out.begin(), out.end());
        for (const auto& s : out) sparse_bound = std::max(sparse_bound, points(s));
    }
}

int Presentation::orbit_index(std::string_view id) const {
    for (int i = 0; i < orbit_count(); ++i)
        if (orbit_ids[i] == id) return i;
    throw invalid_spec("unknown orbit '" + std::string(id) + "'");
}

int Presentation::slice_index(int v, std::string_view id) const {
    for (int i = 0; i < slice_count(v); ++i)
        if (slices[v][i].id == id) return i;
    throw invalid_spec("unknown slice '" + std::string(id) + "' over " + orbit_ids[v]);
}

int Presentation::slice_over(int v, int u) const {
    for (int i = 0; i < slice_count(v); ++i)
        if (slices[v][i].orbit == u) return i;
    return -1;
}

VSet Presentation::empty(int v) const { return VSet{v, std::vector<int>(slice_count(v), 0)}; }

VSet Presentation::copies(int v, int n) const {
    VSet s = empty(v);
    s.mult[star[v]] = n;
    return s;
}

VSet Presentation::orbit(int v, int slice, int n) const {
    VSet s = empty(v);
    s.mult[slice] = n;
    return s;
}

int Presentation::points(const VSet& s) const {
    int total = 0;
    for (int i = 0; i < static_cast<int>(s.mult.size()); ++i) total += s.mult[i] * slices[s.over][i].points;
    return total;
}

std::string Presentation::str(const VSet& s) const {
    std::ostringstream os;
    bool first = true;
    auto term = [&](int i) {
        if (!first) os << " + ";
        first = false;
        if (s.mult[i] > 1) os << s.mult[i];
        if (i == star[s.over])
            os << "*";
        else
            os << "[" << orbit_ids[s.over] << "/" << slices[s.over][i].id << "]";
    };
    if (s.mult[star[s.over]] > 0) term(star[s.over]);
    for (int i = 0; i < static_cast<int>(s.mult.size()); ++i)
        if (i != star[s.over] && s.mult[i] > 0) term(i);
    if (first) os << "0";
    return os.str();
}

bool ValidationReport::ok() const {
    return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& a) { return a.pass; });
}

const AxiomResult* ValidationReport::find(std::string_view name) const {
    for (const auto& a : axioms)
        if (a.name == name) return &a;
    return nullptr;
}

ValidationReport validate_presentation(const Presentation& p) {
    ValidationReport rep;
    AxiomResult ident{"identity restriction"}, count{"point count"}, paste{"pasting"},
        atom{"atomicity"}, fixed{"fixed point"};
    auto fail = [](AxiomResult& a, const std::string& w) {
        if (a.pass) a.witness = w;
        a.pass = false;
    };
    const int m = p.orbit_count();
    for (int v = 0; v < m; ++v) {
        const int ns = p.slice_count(v);
        const int st = p.star[v];
        if (p.slices[v][st].orbit != v) fail(ident, "star slice of " + p.orbit_ids[v] + " is not over itself");
        for (int w = 0; w < ns; ++w) {
            if (p.res[v][st][w] != p.orbit(v, w).mult)
                fail(ident, "Res along id of " + p.str(p.orbit(v, w)));
        }
        for (int f = 0; f < ns; ++f) {
            const int u = p.slices[v][f].orbit;
            for (int w = 0; w < ns; ++w) {
                VSet r{u, p.res[v][f][w]};
                if (p.points(r) != p.slices[v][w].points)
                    fail(count, "Res to " + p.slices[v][f].id + " of " + p.str(p.orbit(v, w)) + " = " + p.str(r));
            }
            for (int x = 0; x < p.slice_count(u); ++x) {
                const int y = p.ind[v][f][x];
                if (p.slices[v][y].points != p.slices[v][f].points * p.slices[u][x].points)
                    fail(count, "Ind of slice " + p.slices[u][x].id + " along " + p.slices[v][f].id);
                if (y == st && (f != st || x != p.star[u]))
                    fail(atom, "Ind along " + p.slices[v][f].id + " of " + p.slices[u][x].id + " is terminal over " +
                                   p.orbit_ids[v]);
                if (p.slices[v][y].orbit != p.slices[u][x].orbit) {
                    fail(paste, "Ind along " + p.slices[v][f].id + " changes the orbit of " + p.slices[u][x].id);
                    continue;
                }
                // Res_g Res_f = Res_{f o g}
                for (int w = 0; w < ns; ++w) {
                    VSet lhs = restrict_vset(p, x, VSet{u, p.res[v][f][w]});
                    VSet rhs{p.slices[u][x].orbit, p.res[v][y][w]};
                    bool same = lhs == rhs;
                    for (const auto& perm : p.auts[rhs.over])
                        same = same || twist(rhs, perm) == lhs;
                    if (!same)
                        fail(paste, "Res along " + p.slices[u][x].id + " after " + p.slices[v][f].id + " of " +
                                        p.str(p.orbit(v, w)) + ": " + p.str(lhs) + " vs " + p.str(rhs));
                }
            }
            if (p.res[v][f][f][p.star[u]] < 1)
                fail(fixed, "Res Ind of " + p.slices[v][f].id + " over " + p.orbit_ids[v] + " has no fixed point");
        }
        for (int u = 0; u < m; ++u)
            if (u != v && p.hom[u][v] && p.hom[v][u])
                fail(atom, "maps both ways between " + p.orbit_ids[u] + " and " + p.orbit_ids[v]);
    }
    rep.axioms = {ident, count, paste, atom, fixed};
    return rep;
}

VSet restrict_vset(const Presentation& p, int f, const VSet& s) {
    const int v = s.over;
    if (f < 0 || f >= p.slice_count(v)) throw no_such_map("no slice " + std::to_string(f) + " over " + p.orbit_ids[v]);
    const int u = p.slices[v][f].orbit;
    VSet out = p.empty(u);
    for (int w = 0; w < p.slice_count(v); ++w) {
        if (!s.mult[w]) continue;
        const auto& r = p.res[v][f][w];
        for (std::size_t x = 0; x < r.size(); ++x) out.mult[x] += s.mult[w] * r[x];
    }
    return out;
}

VSet restrict_to(const Presentation& p, int l, const VSet& s) {
    const int f = p.slice_over(s.over, l);
    if (f < 0) throw no_such_map("no map " + p.orbit_ids[l] + " -> " + p.orbit_ids[s.over]);
    return restrict_vset(p, f, s);
}

VSet twist(const VSet& s, const std::vector<int>& perm) {
    VSet out{s.over, std::vector<int>(s.mult.size(), 0)};
    for (std::size_t i = 0; i < s.mult.size(); ++i) out.mult[perm[i]] += s.mult[i];
    return out;
}

VSet induce(const Presentation& p, int v, int u, const VSet& t) {
    if (t.over != p.slices[v][u].orbit)
        throw mismatched_index("Ind along " + p.slices[v][u].id + " needs a set over " +
                               p.orbit_ids[p.slices[v][u].orbit]);
    VSet out = p.empty(v);
    for (std::size_t x = 0; x < t.mult.size(); ++x) out.mult[p.ind[v][u][x]] += t.mult[x];
    return out;
}

std::vector<int> expand_orbits(const VSet& s) {
    std::vector<int> out;
    for (std::size_t i = 0; i < s.mult.size(); ++i)
        for (int k = 0; k < s.mult[i]; ++k) out.push_back(static_cast<int>(i));
    return out;
}

VSet indexed_coproduct(const Presentation& p, const VSet& s, const std::vector<VSet>& t) {
    const auto orbs = expand_orbits(s);
    if (orbs.size() != t.size())
        throw mismatched_index("indexing set has " + std::to_string(orbs.size()) + " orbits, got " +
                               std::to_string(t.size()) + " components");
    VSet out = p.empty(s.over);
    for (std::size_t i = 0; i < orbs.size(); ++i) out = vset_sum(out, induce(p, s.over, orbs[i], t[i]));
    return out;
}

bool sset_leq(const VSet& a, const VSet& b) {
    if (a.over != b.over) return false;
    for (std::size_t i = 0; i < a.mult.size(); ++i)
        if (a.mult[i] > b.mult[i]) return false;
    return true;
}

VSet vset_sum(const VSet& a, const VSet& b) {
    if (a.over != b.over) throw mismatched_index("sum of sets over different orbits");
    VSet out = a;
    for (std::size_t i = 0; i < b.mult.size(); ++i) out.mult[i] += b.mult[i];
    return out;
}

std::vector<VSet> vsets_within(const Presentation& p, int v, int max_points) {
    std::vector<VSet> out;
    VSet cur = p.empty(v);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == p.slice_count(v)) {
            out.push_back(cur);
            return;
        }
        const int pts = p.slices[v][i].points;
        for (int k = 0; k * pts <= left; ++k) {
            cur.mult[i] = k;
            rec(i + 1, left - k * pts);
        }
        cur.mult[i] = 0;
    };
    rec(0, max_points);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace windex
