#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "windex/presentation.hpp"

namespace windex {

// A set of orbit classes as a bitmask; presentations are capped at 64 orbits.
struct Family {
    std::uint64_t bits = 0;

    bool contains(int v) const { return (bits >> v) & 1u; }
    void insert(int v) { bits |= std::uint64_t{1} << v; }
    bool empty() const { return bits == 0; }
    bool subset_of(const Family& o) const { return (bits & ~o.bits) == 0; }
    Family operator|(const Family& o) const { return {bits | o.bits}; }
    Family operator&(const Family& o) const { return {bits & o.bits}; }
    Family operator-(const Family& o) const { return {bits & ~o.bits}; }
    friend bool operator==(const Family&, const Family&) = default;
    friend auto operator<=>(const Family&, const Family&) = default;
};

void check_orbit_cap(const Presentation& p);
Family all_orbits(const Presentation& p);
Family family_of(const Presentation& p, const std::vector<std::string>& ids);
bool is_family(const Presentation& p, const Family& f);
// downward closure
Family generated_family(const Presentation& p, const Family& gens);
void require_family(const Presentation& p, const Family& f);
std::vector<std::string> family_ids(const Presentation& p, const Family& f);
std::string family_str(const Presentation& p, const Family& f);
// all families, ordered by (size, bits)
std::vector<Family> enumerate_families(const Presentation& p);

}  // namespace windex
