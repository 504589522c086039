#pragma once

#include <vector>

namespace windex {

// Finite group given by its Cayley table. Elements are 0..order-1.
class FiniteGroup {
public:
    using Subgroup = std::vector<int>;  // sorted element list

    FiniteGroup() = default;
    // throws invalid_spec unless the table is a group
    explicit FiniteGroup(const std::vector<std::vector<int>>& table);
    static FiniteGroup cyclic(int n);

    int order() const { return n_; }
    int identity() const { return id_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    // g x g^-1
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
    bool is_abelian() const;
    std::vector<std::vector<int>> table() const;

    Subgroup generated(const std::vector<int>& gens) const;
    Subgroup conjugate(int g, const Subgroup& k) const;
    Subgroup whole() const;
    Subgroup trivial() const { return {id_}; }
    // every subgroup, ordered by (size, elements)
    std::vector<Subgroup> subgroups() const;
    bool is_subgroup(const Subgroup& s) const;

    static bool contains(const Subgroup& h, int x);
    static bool subset(const Subgroup& a, const Subgroup& b);
    static Subgroup intersect(const Subgroup& a, const Subgroup& b);

private:
    int n_ = 0;
    int id_ = 0;
    std::vector<int> table_;
    std::vector<int> inv_;
};

}  // namespace windex
