#include "pdcrystal/crystal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace pdcrystal {

RowPairing pair_row(const PipeDream& d, int i) {
    if (i < 1 || i >= d.n()) throw std::invalid_argument("row index out of range");
    RowPairing p;
    p.row = i;
    const std::vector<Cross> upper = d.crosses_in_row(i);       // right to left
    std::vector<Cross> lower = d.crosses_in_row(i + 1);         // right to left
    std::sort(lower.begin(), lower.end(),
              [](const Cross& a, const Cross& b) { return a.col < b.col; });
    std::vector<char> taken(lower.size(), 0);
    for (const Cross& c : upper) {
        bool paired = false;
        for (size_t k = 0; k < lower.size(); ++k) {
            if (taken[k] || lower[k].col < c.col) continue;
            taken[k] = 1;
            p.pairs.emplace_back(c, lower[k]);
            paired = true;
            break;
        }
        if (!paired) p.unpaired_upper.push_back(c);
    }
    for (size_t k = 0; k < lower.size(); ++k)
        if (!taken[k]) p.unpaired_lower.push_back(lower[k]);
    return p;
}

std::optional<PipeDream> lower(const PipeDream& d, int i) {
    const RowPairing p = pair_row(d, i);
    if (p.unpaired_upper.empty()) return std::nullopt;
    // Leftmost unpaired cross of row i; scan order is right to left.
    const Cross c = p.unpaired_upper.back();
    const int j = c.col;
    bool wall = true;
    for (int k = 1; k <= j; ++k)
        if (!d.has_cross(i, k)) { wall = false; break; }
    if (wall) return std::nullopt;
    // Smallest offset with both tiles free; every column in between must be a
    // full column of crosses, which reducedness guarantees.
    int m = 1;
    while (true) {
        const bool up = d.has_cross(i, j - m);
        const bool down = d.has_cross(i + 1, j - m);
        if (!up && !down) break;
        if (up != down)
            throw std::logic_error("lowering hit a half-filled column; input not reduced");
        ++m;
    }
    std::vector<Cross> crosses = d.crosses();
    std::erase(crosses, c);
    crosses.push_back({i + 1, j - m});
    return PipeDream(d.n(), std::move(crosses));
}

std::optional<PipeDream> raise(const PipeDream& d, int i) {
    const RowPairing p = pair_row(d, i);
    if (p.unpaired_lower.empty()) return std::nullopt;
    const Cross c = p.unpaired_lower.back();   // rightmost unpaired in row i+1
    int col = c.col + 1;
    while (d.has_cross(i + 1, col)) ++col;
    std::vector<Cross> crosses = d.crosses();
    std::erase(crosses, c);
    crosses.push_back({i, col});
    return PipeDream(d.n(), std::move(crosses));
}

bool is_highest_weight(const PipeDream& d) {
    for (int i = 1; i < d.n(); ++i)
        if (raise(d, i)) return false;
    return true;
}

bool is_lowest_weight(const PipeDream& d) {
    for (int i = 1; i < d.n(); ++i)
        if (lower(d, i)) return false;
    return true;
}

CrystalGraph crystal_graph(const Permutation& w) {
    CrystalGraph g{w, reduced_pipe_dreams(w), {}};
    std::map<PipeDream, int> index;
    for (size_t k = 0; k < g.vertices.size(); ++k)
        index.emplace(g.vertices[k], static_cast<int>(k));
    for (size_t k = 0; k < g.vertices.size(); ++k) {
        for (int i = 1; i < w.size(); ++i) {
            if (auto next = lower(g.vertices[k], i)) {
                auto it = index.find(*next);
                if (it == index.end())
                    throw std::logic_error("lowering left the set of reduced pipe dreams");
                g.edges.push_back({static_cast<int>(k), i, it->second});
            }
        }
    }
    return g;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        if (ch == '\n') { out += "\\l"; continue; }
        out += ch;
    }
    return out;
}

}  // namespace

std::string CrystalGraph::to_dot() const {
    std::string s = "digraph crystal {\n";
    s += "  rankdir=TB;\n  node [shape=box, fontname=\"monospace\"];\n";
    for (const auto& v : vertices) {
        s += "  \"" + v.id_string() + "\" [label=\"" + dot_escape(v.to_ascii()) +
             "\\lwt=" + to_string(v.weight()) + "\"];\n";
    }
    for (const auto& e : edges) {
        s += "  \"" + vertices[e.source].id_string() + "\" -> \"" +
             vertices[e.target].id_string() + "\" [label=\"" + std::to_string(e.op) + "\"];\n";
    }
    s += "}\n";
    return s;
}

std::string CrystalGraph::to_json() const {
    nlohmann::ordered_json j;
    j["w"] = w.window();
    j["n"] = w.size();
    auto verts = nlohmann::ordered_json::array();
    for (const auto& v : vertices) {
        nlohmann::ordered_json vj;
        auto arr = nlohmann::ordered_json::array();
        for (const auto& c : v.crosses()) arr.push_back({c.row, c.col});
        vj["crosses"] = std::move(arr);
        vj["weight"] = v.weight();
        verts.push_back(std::move(vj));
    }
    j["vertices"] = std::move(verts);
    auto edgearr = nlohmann::ordered_json::array();
    for (const auto& e : edges)
        edgearr.push_back({{"source", e.source}, {"op", e.op}, {"target", e.target}});
    j["edges"] = std::move(edgearr);
    return j.dump();
}

std::vector<Component> crystal_components(const CrystalGraph& g) {
    const int m = static_cast<int>(g.vertices.size());
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : g.edges) parent[find(e.source)] = find(e.target);

    std::map<int, std::vector<PipeDream>> groups;
    for (int k = 0; k < m; ++k) groups[find(k)].push_back(g.vertices[k]);
    std::vector<Component> out;
    for (auto& [root, members] : groups) {
        std::vector<const PipeDream*> highs;
        for (const auto& d : members)
            if (is_highest_weight(d)) highs.push_back(&d);
        if (highs.size() != 1)
            throw std::logic_error("component does not have a unique highest weight vertex");
        PipeDream highest = *highs.front();
        Composition lambda = highest.weight();
        out.push_back(Component{std::move(members), std::move(highest), std::move(lambda)});
    }
    std::sort(out.begin(), out.end(),
              [](const Component& a, const Component& b) { return a.highest < b.highest; });
    return out;
}

std::vector<Component> crystal_components(const Permutation& w) {
    return crystal_components(crystal_graph(w));
}

}  // namespace pdcrystal
