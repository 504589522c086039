#pragma once

#include <utility>
#include <vector>

#include "windex/family.hpp"
#include "windex/transfer.hpp"
#include "windex/wis.hpp"

namespace windex {

// Over C_{p^n} orbits are the subgroups 0..n; a pair (k, h) means C_{p^k} < C_{p^h}.
struct Sieve {
    TransferSystem base;
    Family scope;
    std::vector<std::pair<int, int>> pairs;  // sorted

    bool contains(int k, int h) const;
    bool subset_of(const Sieve& o) const;
    friend bool operator==(const Sieve&, const Sieve&) = default;
};

void require_chain(const Presentation& p);
bool is_sieve(const Presentation& p, const Sieve& s, std::string* why = nullptr);
// all sieves of r on the scope, ordered by (size, pairs)
std::vector<Sieve> enumerate_sieves(const PresPtr& p, const TransferSystem& r, Family scope);
Sieve sv(const Wis& w);
Wis fiber_from_sieve(const PresPtr& p, const TransferSystem& r, Family f, const Sieve& s);
Sieve transport_sieve(const PresPtr& p, const Sieve& s, const TransferSystem& r2, Family f, Family f2);
std::string sieve_str(const Presentation& p, const Sieve& s);

}  // namespace windex
