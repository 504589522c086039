#include "windex/family.hpp"

#include <algorithm>
#include <bit>

#include "windex/error.hpp"

namespace windex {

void check_orbit_cap(const Presentation& p) {
    if (p.orbit_count() > 64) throw too_large("more than 64 orbit classes");
}

Family all_orbits(const Presentation& p) {
    check_orbit_cap(p);
    Family f;
    for (int v = 0; v < p.orbit_count(); ++v) f.insert(v);
    return f;
}

Family family_of(const Presentation& p, const std::vector<std::string>& ids) {
    check_orbit_cap(p);
    Family f;
    for (const auto& id : ids) f.insert(p.orbit_index(id));
    return f;
}

bool is_family(const Presentation& p, const Family& f) {
    for (int w = 0; w < p.orbit_count(); ++w)
        if (f.contains(w))
            for (int v = 0; v < p.orbit_count(); ++v)
                if (p.hom[v][w] && !f.contains(v)) return false;
    return true;
}

Family generated_family(const Presentation& p, const Family& gens) {
    Family f;
    for (int w = 0; w < p.orbit_count(); ++w)
        if (gens.contains(w))
            for (int v = 0; v < p.orbit_count(); ++v)
                if (p.hom[v][w]) f.insert(v);
    return f;
}

void require_family(const Presentation& p, const Family& f) {
    if (!is_family(p, f)) throw invalid_family("{" + family_str(p, f) + "} is not downward closed");
}

std::vector<std::string> family_ids(const Presentation& p, const Family& f) {
    std::vector<std::string> out;
    for (int v = 0; v < p.orbit_count(); ++v)
        if (f.contains(v)) out.push_back(p.orbit_ids[v]);
    return out;
}

std::string family_str(const Presentation& p, const Family& f) {
    std::string s;
    for (const auto& id : family_ids(p, f)) s += (s.empty() ? "" : ",") + id;
    return s;
}

std::vector<Family> enumerate_families(const Presentation& p) {
    check_orbit_cap(p);
    // grow by adding orbits whose predecessors are all present
    std::vector<Family> out{Family{}};
    for (std::size_t i = 0; i < out.size(); ++i)
        for (int v = 0; v < p.orbit_count(); ++v) {
            if (out[i].contains(v)) continue;
            Family g = out[i];
            g.insert(v);
            if (is_family(p, g) && std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
        }
    std::sort(out.begin(), out.end(), [](const Family& a, const Family& b) {
        const int ca = std::popcount(a.bits), cb = std::popcount(b.bits);
        return ca != cb ? ca < cb : a.bits < b.bits;
    });
    return out;
}

}  // namespace windex
