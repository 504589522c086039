#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace windex {

struct Poset {
    std::vector<std::string> labels;
    std::vector<std::vector<char>> le;  // le[i][j]: i <= j

    int size() const { return static_cast<int>(le.size()); }
    bool is_partial_order() const;
    std::vector<std::pair<int, int>> covers() const;
};

Poset poset_from_leq(int n, const std::function<bool(int, int)>& leq, std::vector<std::string> labels = {});
// reflexive-transitive closure of the given edges
Poset poset_from_edges(int n, const std::vector<std::pair<int, int>>& edges, std::vector<std::string> labels = {});
std::optional<std::vector<int>> find_isomorphism(const Poset& a, const Poset& b);
bool isomorphic(const Poset& a, const Poset& b);

struct HasseDiagram {
    std::vector<std::string> nodes;
    std::vector<std::string> notes;
    std::vector<std::pair<int, int>> edges;  // covers, lower -> upper
};

HasseDiagram hasse(const Poset& p, std::vector<std::string> notes = {});
std::string export_dot(const HasseDiagram& d, const std::string& name = "hasse");
std::string export_json(const HasseDiagram& d);

}  // namespace windex
