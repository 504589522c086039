#pragma once

#include <string>
#include <utility>
#include <vector>

#include "windex/family.hpp"
#include "windex/presentation.hpp"
#include "windex/wis.hpp"

namespace windex {

// Non-identity transfers (V, slice u of V); identities are implicit.
struct TransferSystem {
    std::vector<std::pair<int, int>> pairs;  // sorted

    bool contains(const Presentation& p, int v, int slice) const;
    bool subset_of(const TransferSystem& o) const;
    friend bool operator==(const TransferSystem&, const TransferSystem&) = default;
    friend auto operator<=>(const TransferSystem&, const TransferSystem&) = default;
};

std::vector<std::pair<int, int>> transfer_universe(const Presentation& p);
bool is_transfer_system(const Presentation& p, const TransferSystem& r, std::string* why = nullptr);
// smallest transfer system containing the given pairs
TransferSystem transfer_closure(const Presentation& p, std::vector<std::pair<int, int>> pairs);
TransferSystem trivial_transfer();
TransferSystem complete_transfer(const Presentation& p);
TransferSystem transfer_join(const Presentation& p, const TransferSystem& a, const TransferSystem& b);
TransferSystem transfer_meet(const TransferSystem& a, const TransferSystem& b);
// all transfer systems, ordered by (size, pairs)
std::vector<TransferSystem> enumerate_transfer_systems(const Presentation& p);
std::string transfer_str(const Presentation& p, const TransferSystem& r);

TransferSystem fR(const Wis& w);
Wis transfer_to_indexing(const PresPtr& p, const TransferSystem& r);
Wis overline_F(const PresPtr& p, const TransferSystem& r);

struct DomainCodomain {
    Family domain;
    Family codomain;
};
Family domain_by_span(const Presentation& p, const TransferSystem& r);
Family domain_by_fold(const PresPtr& p, const TransferSystem& r);
Family codomain(const Presentation& p, const TransferSystem& r);
// both routes for the domain; throws if they disagree
DomainCodomain domain_codomain(const PresPtr& p, const TransferSystem& r);
bool admissible(const PresPtr& p, const TransferSystem& r, Family f);

}  // namespace windex
