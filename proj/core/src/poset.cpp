#include "windex/poset.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace windex {

bool Poset::is_partial_order() const {
    const int n = size();
    for (int i = 0; i < n; ++i) {
        if (!le[i][i]) return false;
        for (int j = 0; j < n; ++j) {
            if (i != j && le[i][j] && le[j][i]) return false;
            if (!le[i][j]) continue;
            for (int k = 0; k < n; ++k)
                if (le[j][k] && !le[i][k]) return false;
        }
    }
    return true;
}

std::vector<std::pair<int, int>> Poset::covers() const {
    const int n = size();
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || !le[i][j]) continue;
            bool cover = true;
            for (int k = 0; k < n && cover; ++k)
                if (k != i && k != j && le[i][k] && le[k][j]) cover = false;
            if (cover) out.push_back({i, j});
        }
    return out;
}

Poset poset_from_leq(int n, const std::function<bool(int, int)>& leq, std::vector<std::string> labels) {
    Poset p;
    p.le.assign(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p.le[i][j] = i == j || leq(i, j);
    if (labels.empty())
        for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    p.labels = std::move(labels);
    return p;
}

Poset poset_from_edges(int n, const std::vector<std::pair<int, int>>& edges, std::vector<std::string> labels) {
    Poset p;
    p.le.assign(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) p.le[i][i] = 1;
    for (auto [a, b] : edges) p.le[a][b] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (p.le[i][k])
                for (int j = 0; j < n; ++j)
                    if (p.le[k][j]) p.le[i][j] = 1;
    if (labels.empty())
        for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    p.labels = std::move(labels);
    return p;
}

namespace {

using Sig = std::tuple<int, int, int, int>;

std::vector<Sig> signatures(const Poset& p) {
    const int n = p.size();
    std::vector<Sig> s(n, {0, 0, 0, 0});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p.le[j][i]) std::get<0>(s[i])++;
            else if (p.le[i][j]) std::get<1>(s[i])++;
    for (auto [a, b] : p.covers()) {
        std::get<2>(s[a])++;
        std::get<3>(s[b])++;
    }
    return s;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Poset& a, const Poset& b) {
    const int n = a.size();
    if (n != b.size()) return std::nullopt;
    auto sa = signatures(a), sb = signatures(b);
    {
        auto x = sa, y = sb;
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        if (x != y) return std::nullopt;
    }
    // most constrained nodes first
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        int cx = 0, cy = 0;
        for (int j = 0; j < n; ++j) {
            cx += sa[j] == sa[x];
            cy += sa[j] == sa[y];
        }
        return cx != cy ? cx < cy : x < y;
    });
    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(int)> rec = [&](int depth) {
        if (depth == n) return true;
        const int x = order[depth];
        for (int y = 0; y < n; ++y) {
            if (used[y] || sb[y] != sa[x]) continue;
            bool ok = true;
            for (int d = 0; d < depth && ok; ++d) {
                const int x2 = order[d];
                const int y2 = map[x2];
                ok = a.le[x][x2] == b.le[y][y2] && a.le[x2][x] == b.le[y2][y];
            }
            if (!ok) continue;
            map[x] = y;
            used[y] = 1;
            if (rec(depth + 1)) return true;
            used[y] = 0;
            map[x] = -1;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    return map;
}

bool isomorphic(const Poset& a, const Poset& b) { return find_isomorphism(a, b).has_value(); }

HasseDiagram hasse(const Poset& p, std::vector<std::string> notes) {
    HasseDiagram d;
    d.nodes = p.labels;
    d.notes = std::move(notes);
    d.notes.resize(d.nodes.size());
    d.edges = p.covers();
    return d;
}

namespace {
std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}
}  // namespace

std::string export_dot(const HasseDiagram& d, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << quote(name) << " {\n  rankdir=BT;\n  node [shape=box, fontsize=10];\n";
    for (std::size_t i = 0; i < d.nodes.size(); ++i) {
        std::string label = quote(d.nodes[i]);
        // the note goes on a second line; DOT wants a literal \n inside the quotes
        if (i < d.notes.size() && !d.notes[i].empty())
            label = label.substr(0, label.size() - 1) + "\\n" + quote(d.notes[i]).substr(1);
        os << "  n" << i << " [label=" << label << "];\n";
    }
    for (auto [a, b] : d.edges) os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

std::string export_json(const HasseDiagram& d) {
    nlohmann::json j;
    j["nodes"] = nlohmann::json::array();
    for (std::size_t i = 0; i < d.nodes.size(); ++i)
        j["nodes"].push_back({{"id", i}, {"label", d.nodes[i]}, {"note", i < d.notes.size() ? d.notes[i] : ""}});
    j["edges"] = nlohmann::json::array();
    for (auto [a, b] : d.edges) j["edges"].push_back({a, b});
    return j.dump(2) + "\n";
}

}  // namespace windex
