#include "windex/io.hpp"

#include <fstream>
#include <map>

#include "windex/error.hpp"

namespace windex::io {

namespace {

int orbit_of(const Presentation& p, const std::string& id) {
    int v = p.orbit_index(id);
    if (v < 0) throw invalid_spec("unknown orbit '" + id + "'");
    return v;
}

int slice_of(const Presentation& p, int v, const std::string& id) {
    int s = p.slice_index(v, id);
    if (s < 0) throw invalid_spec("unknown slice '" + id + "' over " + p.orbit_ids[v]);
    return s;
}

template <class T>
T get(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw invalid_spec(std::string("missing key '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw invalid_spec(std::string("bad value for '") + key + "': " + e.what());
    }
}

}  // namespace

BackendSpec backend_from_json(const json& j) {
    const auto kind = get<std::string>(j, "kind");
    if (kind == "cpn" || kind == "chain") return ChainGroup{get<int>(j, "p"), get<int>(j, "n")};
    if (kind == "group") {
        FiniteGroupSpec s{get<std::vector<std::vector<int>>>(j, "cayley_table")};
        if (j.contains("max_order")) s.max_order = get<int>(j, "max_order");
        return s;
    }
    if (kind == "semilattice")
        return MeetSemilattice{get<std::vector<std::string>>(j, "elements"),
                               get<std::vector<std::vector<int>>>(j, "meet_table")};
    if (kind == "BG") return OneObjectGroupoid{j.contains("order") ? get<int>(j, "order") : 1};
    if (kind == "point") return TrivialPoint{};
    throw invalid_spec("unknown backend kind '" + kind + "'");
}

json backend_to_json(const BackendSpec& s) {
    return std::visit(
        [](const auto& x) -> json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, ChainGroup>)
                return {{"kind", "cpn"}, {"p", x.p}, {"n", x.n}};
            else if constexpr (std::is_same_v<T, FiniteGroupSpec>)
                return {{"kind", "group"}, {"cayley_table", x.cayley_table}, {"max_order", x.max_order}};
            else if constexpr (std::is_same_v<T, MeetSemilattice>)
                return {{"kind", "semilattice"}, {"elements", x.elements}, {"meet_table", x.meet_table}};
            else if constexpr (std::is_same_v<T, OneObjectGroupoid>)
                return {{"kind", "BG"}, {"order", x.group_order}};
            else
                return {{"kind", "point"}};
        },
        s);
}

BackendSpec backend_of(const Presentation& p) {
    switch (p.backend) {
        case Backend::chain: return *p.chain;
        case Backend::group: return FiniteGroupSpec{p.group->group.table()};
        case Backend::semilattice: {
            // meet = greatest common lower bound in the hom order
            const int m = p.orbit_count();
            MeetSemilattice s{p.orbit_ids, std::vector<std::vector<int>>(m, std::vector<int>(m, -1))};
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b)
                    for (int c = 0; c < m; ++c) {
                        if (!p.hom[c][a] || !p.hom[c][b]) continue;
                        int& cur = s.meet_table[a][b];
                        if (cur < 0 || p.hom[cur][c]) cur = c;
                    }
            return s;
        }
        case Backend::groupoid: return OneObjectGroupoid{1};
        case Backend::point: return TrivialPoint{};
        case Backend::custom: break;
    }
    throw unsupported_backend("presentation '" + p.name + "' has no backend spec");
}

json presentation_to_json(const Presentation& p) {
    json j;
    j["name"] = p.name;
    j["orbits"] = p.orbit_ids;
    json slices = json::object(), star = json::object(), res = json::object(), ind = json::object(),
         auts = json::object();
    for (int v = 0; v < p.orbit_count(); ++v) {
        const auto& V = p.orbit_ids[v];
        slices[V] = json::array();
        for (const auto& s : p.slices[v])
            slices[V].push_back({{"id", s.id}, {"orbit", p.orbit_ids[s.orbit]}, {"points", s.points}});
        star[V] = p.slices[v][p.star[v]].id;
        res[V] = json::object();
        ind[V] = json::object();
        for (int f = 0; f < p.slice_count(v); ++f) {
            const int u = p.slices[v][f].orbit;
            json row = json::object();
            for (int w = 0; w < p.slice_count(v); ++w) {
                json terms = json::array();
                for (int x = 0; x < p.slice_count(u); ++x)
                    if (p.res[v][f][w][x]) terms.push_back({p.slices[u][x].id, p.res[v][f][w][x]});
                row[p.slices[v][w].id] = terms;
            }
            res[V][p.slices[v][f].id] = row;
            json targets = json::array();
            for (int t : p.ind[v][f]) targets.push_back(p.slices[v][t].id);
            ind[V][p.slices[v][f].id] = targets;
        }
        auts[V] = json::array();
        for (const auto& perm : p.auts[v]) {
            json a = json::array();
            for (int t : perm) a.push_back(p.slices[v][t].id);
            auts[V].push_back(a);
        }
    }
    j["slices"] = slices;
    j["star"] = star;
    j["res"] = res;
    j["ind"] = ind;
    j["auts"] = auts;
    return j;
}

PresPtr presentation_from_json(const json& j) {
    auto pr = std::make_shared<Presentation>();
    auto& p = *pr;
    p.backend = Backend::custom;
    p.name = j.contains("name") ? get<std::string>(j, "name") : "custom";
    p.orbit_ids = get<std::vector<std::string>>(j, "orbits");
    const int m = p.orbit_count();
    if (m == 0) throw invalid_spec("no orbits");
    const json& slices = j.at("slices");
    p.slices.resize(m);
    for (int v = 0; v < m; ++v) {
        const auto& V = p.orbit_ids[v];
        if (!slices.contains(V)) throw invalid_spec("no slices for " + V);
        for (const auto& s : slices.at(V))
            p.slices[v].push_back({get<std::string>(s, "id"), orbit_of(p, get<std::string>(s, "orbit")),
                                   get<int>(s, "points")});
    }
    p.hom.assign(m, std::vector<char>(m, 0));
    for (int v = 0; v < m; ++v)
        for (const auto& s : p.slices[v]) p.hom[s.orbit][v] = 1;
    p.res.resize(m);
    p.ind.resize(m);
    p.auts.resize(m);
    for (int v = 0; v < m; ++v) {
        const auto& V = p.orbit_ids[v];
        p.star.push_back(slice_of(p, v, j.at("star").at(V).get<std::string>()));
        const int ns = p.slice_count(v);
        p.res[v].resize(ns);
        p.ind[v].resize(ns);
        for (int f = 0; f < ns; ++f) {
            const int u = p.slices[v][f].orbit;
            const json& row = j.at("res").at(V).at(p.slices[v][f].id);
            for (int w = 0; w < ns; ++w) {
                std::vector<int> out(p.slice_count(u), 0);
                for (const auto& t : row.at(p.slices[v][w].id))
                    out[slice_of(p, u, t.at(0).get<std::string>())] += t.at(1).get<int>();
                p.res[v][f].push_back(std::move(out));
            }
            for (const auto& t : j.at("ind").at(V).at(p.slices[v][f].id))
                p.ind[v][f].push_back(slice_of(p, v, t.get<std::string>()));
            if (static_cast<int>(p.ind[v][f].size()) != p.slice_count(u))
                throw invalid_spec("induction row has the wrong length");
        }
        if (j.contains("auts") && j.at("auts").contains(V))
            for (const auto& a : j.at("auts").at(V)) {
                std::vector<int> perm;
                for (const auto& t : a) perm.push_back(slice_of(p, v, t.get<std::string>()));
                if (static_cast<int>(perm.size()) != ns) throw invalid_spec("automorphism has the wrong length");
                p.auts[v].push_back(std::move(perm));
            }
    }
    p.finalize();
    const auto rep = validate_presentation(p);
    if (!rep.ok())
        for (const auto& a : rep.axioms)
            if (!a.pass) throw invalid_spec("presentation fails " + a.name + ": " + a.witness);
    return pr;
}

json presentation_ref(const Presentation& p) {
    if (p.backend == Backend::custom) return {{"presentation", presentation_to_json(p)}};
    return {{"backend", backend_to_json(backend_of(p))}};
}

PresPtr presentation_of(const json& j) {
    try {
        if (j.contains("backend")) return build_presentation(backend_from_json(j.at("backend")));
        if (j.contains("presentation")) return presentation_from_json(j.at("presentation"));
    } catch (const json::exception& e) {
        throw invalid_spec(std::string("malformed presentation: ") + e.what());
    }
    throw invalid_spec("no 'backend' or 'presentation' key");
}

json vset_to_json(const Presentation& p, const VSet& s) {
    // canonical order: by slice id, then multiplicity
    std::vector<std::pair<std::string, int>> terms;
    for (int i = 0; i < p.slice_count(s.over); ++i)
        if (s.mult[i]) terms.push_back({p.slices[s.over][i].id, s.mult[i]});
    std::sort(terms.begin(), terms.end());
    json orbits = json::array();
    for (const auto& [id, m] : terms) orbits.push_back({id, m});
    return {{"over", p.orbit_ids[s.over]}, {"orbits", orbits}};
}

VSet vset_from_json(const Presentation& p, const json& j) {
    const int v = orbit_of(p, get<std::string>(j, "over"));
    VSet s = p.empty(v);
    for (const auto& t : j.at("orbits")) {
        if (!t.is_array() || t.size() != 2) throw invalid_spec("orbit entries are [slice, multiplicity]");
        const int m = t.at(1).get<int>();
        if (m < 0) throw invalid_spec("negative multiplicity");
        s.mult[slice_of(p, v, t.at(0).get<std::string>())] += m;
    }
    return s;
}

namespace {

json level_json(const Presentation& p, const std::vector<VSet>& level) {
    json out = json::array();
    for (const auto& s : level) out.push_back(vset_to_json(p, s).at("orbits"));
    return out;
}

}  // namespace

json wis_to_json(const Wis& w) {
    const auto& p = w.pres();
    json j = presentation_ref(p);
    json data = json::object();
    if (w.is_sparse_form()) {
        j["class"] = "sparse";
        for (int v = 0; v < p.orbit_count(); ++v) data[p.orbit_ids[v]] = level_json(p, w.sparse()[v]);
        j["data"] = data;
        return j;
    }
    j["class"] = "generated";
    json gens = json::array();
    for (const auto& g : w.generators()) gens.push_back(vset_to_json(p, g));
    j["generators"] = gens;
    j["bound"] = w.bound();
    // sparse members of the table, for reading convenience
    const auto sp = sparse_part(w);
    for (int v = 0; v < p.orbit_count(); ++v) data[p.orbit_ids[v]] = level_json(p, sp[v]);
    j["data"] = data;
    return j;
}

Wis wis_from_json(const json& j) {
    PresPtr pp = presentation_of(j);
    const auto& p = *pp;
    try {
        const auto cls = get<std::string>(j, "class");
        if (cls == "generated") {
            std::vector<VSet> gens;
            for (const auto& g : j.at("generators")) gens.push_back(vset_from_json(p, g));
            return Wis::generated(pp, gens, j.contains("bound") ? get<int>(j, "bound") : 0);
        }
        if (cls != "sparse") throw invalid_spec("class must be 'sparse' or 'generated'");
        Collection c(p.orbit_count());
        const json& data = j.at("data");
        for (auto it = data.begin(); it != data.end(); ++it) {
            const int v = orbit_of(p, it.key());
            for (const auto& orbits : it.value())
                c[v].push_back(vset_from_json(p, {{"over", it.key()}, {"orbits", orbits}}));
        }
        return sparse_generate(pp, c);
    } catch (const json::exception& e) {
        throw invalid_spec(std::string("malformed system: ") + e.what());
    }
}

json transfer_to_json(const Presentation& p, const TransferSystem& r) {
    json pairs = json::array();
    for (auto [v, s] : r.pairs) pairs.push_back({p.slices[v][s].id, p.orbit_ids[v]});
    return {{"pairs", pairs}};
}

TransferSystem transfer_from_json(const Presentation& p, const json& j) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& t : j.at("pairs")) {
        const int v = orbit_of(p, t.at(1).get<std::string>());
        pairs.push_back({v, slice_of(p, v, t.at(0).get<std::string>())});
    }
    TransferSystem r;
    for (auto pr : pairs)
        if (pr.second != p.star[pr.first]) r.pairs.push_back(pr);
    std::sort(r.pairs.begin(), r.pairs.end());
    r.pairs.erase(std::unique(r.pairs.begin(), r.pairs.end()), r.pairs.end());
    std::string why;
    if (!is_transfer_system(p, r, &why)) throw invalid_spec("not a transfer system: " + why);
    return r;
}

json family_to_json(const Presentation& p, Family f) { return {{"members", family_ids(p, f)}}; }

Family family_from_json(const Presentation& p, const json& j) {
    Family f = family_of(p, get<std::vector<std::string>>(j, "members"));
    require_family(p, f);
    return f;
}

json sieve_to_json(const Presentation& p, const Sieve& s) {
    json pairs = json::array();
    for (auto [k, h] : s.pairs) pairs.push_back({p.orbit_ids[k], p.orbit_ids[h]});
    return {{"R", transfer_to_json(p, s.base)}, {"scope", family_ids(p, s.scope)}, {"pairs", pairs}};
}

Sieve sieve_from_json(const Presentation& p, const json& j) {
    Sieve s;
    s.base = transfer_from_json(p, j.at("R"));
    s.scope = family_of(p, get<std::vector<std::string>>(j, "scope"));
    for (const auto& t : j.at("pairs"))
        s.pairs.push_back({orbit_of(p, t.at(0).get<std::string>()), orbit_of(p, t.at(1).get<std::string>())});
    std::sort(s.pairs.begin(), s.pairs.end());
    std::string why;
    if (!is_sieve(p, s, &why)) throw invalid_spec("not a sieve: " + why);
    return s;
}

json rep_to_json(const RepDescriptor& v) {
    const auto& p = *v.group;
    json dims = json::object();
    for (int o = 0; o < p.orbit_count(); ++o) dims[p.orbit_ids[o]] = v.fixed_dims[o];
    json j = presentation_ref(p);
    j["group"] = p.name;
    j["fixed_dims"] = dims;
    return j;
}

RepDescriptor rep_from_json(const PresPtr& pp, const json& j) {
    RepDescriptor v{pp, std::vector<int>(pp->orbit_count(), -1)};
    const json& dims = j.at("fixed_dims");
    for (auto it = dims.begin(); it != dims.end(); ++it) v.fixed_dims[orbit_of(*pp, it.key())] = it.value().get<int>();
    for (int o = 0; o < pp->orbit_count(); ++o)
        if (v.fixed_dims[o] < 0) throw invalid_spec("no fixed dimension for " + pp->orbit_ids[o]);
    check_rep(v);
    return v;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_spec("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw invalid_spec(path + ": " + e.what());
    }
}

}  // namespace windex::io
