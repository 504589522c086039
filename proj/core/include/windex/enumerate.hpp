#pragma once

#include <string>
#include <vector>

#include "windex/family.hpp"
#include "windex/poset.hpp"
#include "windex/sieve.hpp"
#include "windex/transfer.hpp"
#include "windex/wis.hpp"

namespace windex {

enum class WisClass { ae_unital, almost_unital, unital, one_color_ae, indexing };

WisClass parse_wis_class(const std::string& name);
std::string wis_class_name(WisClass c);
bool in_class(const Classification& c, WisClass k);

struct Enumeration {
    PresPtr pres;
    std::vector<Wis> systems;  // sorted by (member count, contents)
    Poset poset;               // containment; labels from label_system
};

struct EnumerationOptions {
    std::size_t level_cap = 1u << 16;     // candidate levels per orbit
    std::size_t candidate_cap = 1u << 22; // candidate collections overall
    unsigned threads = 0;                 // 0: hardware concurrency
    bool labels = true;
};

Enumeration enumerate_wis_bruteforce(const PresPtr& p, WisClass k, const EnumerationOptions& opt = {});

struct FiberPoint {
    TransferSystem transfer;
    Family family;
    Sieve sieve;
};

struct FiberwiseEnumeration {
    Enumeration result;
    std::vector<FiberPoint> points;  // parallel to result.systems
};

// unital systems over a chain, assembled from (fR, fold) fibers and sieves
FiberwiseEnumeration enumerate_wis_fiberwise(const PresPtr& p, bool labels = true);

Poset transfer_poset(const Presentation& p, const std::vector<TransferSystem>& rs);
Poset family_poset(const Presentation& p, const std::vector<Family>& fs);

// a constructor name when one matches, else a content hash
std::string label_system(const Wis& w);
std::vector<std::string> label_systems(const std::vector<Wis>& ws);
std::string content_hash(const Wis& w);
// classification flags and (c, unit, fold, essence, fR)
std::string annotate(const Wis& w);

HasseDiagram hasse(const Enumeration& e);

}  // namespace windex
