#include "windex/group.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "windex/error.hpp"

namespace windex {

FiniteGroup::FiniteGroup(const std::vector<std::vector<int>>& table) {
    n_ = static_cast<int>(table.size());
    if (n_ == 0) throw invalid_spec("empty Cayley table");
    table_.reserve(static_cast<std::size_t>(n_) * n_);
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n_) throw invalid_spec("Cayley table is not square");
        for (int x : row) {
            if (x < 0 || x >= n_) throw invalid_spec("Cayley table entry out of range");
            table_.push_back(x);
        }
    }
    id_ = -1;
    for (int e = 0; e < n_ && id_ < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < n_ && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
        if (ok) id_ = e;
    }
    if (id_ < 0) throw invalid_spec("Cayley table has no identity");
    inv_.assign(n_, -1);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (mul(a, b) == id_ && mul(b, a) == id_) inv_[a] = b;
    for (int a = 0; a < n_; ++a)
        if (inv_[a] < 0) throw invalid_spec("element " + std::to_string(a) + " has no inverse");
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw invalid_spec("Cayley table is not associative");
}

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n <= 0) throw invalid_spec("cyclic group of non-positive order");
    FiniteGroup g;
    g.n_ = n;
    g.id_ = 0;
    g.table_.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.table_[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    g.inv_.resize(n);
    for (int a = 0; a < n; ++a) g.inv_[a] = (n - a) % n;
    return g;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
    std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) t[a][b] = mul(a, b);
    return t;
}

FiniteGroup::Subgroup FiniteGroup::generated(const std::vector<int>& gens) const {
    std::vector<char> in(n_, 0);
    std::vector<int> elems{id_};
    in[id_] = 1;
    // closure under right multiplication by generators suffices in a finite group
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (int g : gens) {
            int x = mul(elems[i], g);
            if (!in[x]) {
                in[x] = 1;
                elems.push_back(x);
            }
        }
    std::sort(elems.begin(), elems.end());
    return elems;
}

FiniteGroup::Subgroup FiniteGroup::conjugate(int g, const Subgroup& k) const {
    Subgroup out;
    out.reserve(k.size());
    for (int x : k) out.push_back(conj(g, x));
    std::sort(out.begin(), out.end());
    return out;
}

FiniteGroup::Subgroup FiniteGroup::whole() const {
    Subgroup s(n_);
    for (int i = 0; i < n_; ++i) s[i] = i;
    return s;
}

std::vector<FiniteGroup::Subgroup> FiniteGroup::subgroups() const {
    std::set<Subgroup> seen{trivial()};
    std::vector<Subgroup> queue{trivial()};
    for (std::size_t i = 0; i < queue.size(); ++i) {
        Subgroup cur = queue[i];
        for (int g = 0; g < n_; ++g) {
            if (contains(cur, g)) continue;
            std::vector<int> gens = cur;
            gens.push_back(g);
            Subgroup s = generated(gens);
            if (seen.insert(s).second) queue.push_back(std::move(s));
        }
    }
    std::vector<Subgroup> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

bool FiniteGroup::is_subgroup(const Subgroup& s) const {
    if (s.empty() || !contains(s, id_)) return false;
    for (int a : s)
        for (int b : s)
            if (!contains(s, mul(a, inv(b)))) return false;
    return true;
}

bool FiniteGroup::contains(const Subgroup& h, int x) {
    return std::binary_search(h.begin(), h.end(), x);
}

bool FiniteGroup::subset(const Subgroup& a, const Subgroup& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

FiniteGroup::Subgroup FiniteGroup::intersect(const Subgroup& a, const Subgroup& b) {
    Subgroup out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace windex
