#include "septree/tree.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include <json.hpp>

#include "septree/errors.hpp"

namespace septree {

SimplicialTree::SimplicialTree(Space space, std::vector<PretreeElement> nodes,
                               std::vector<std::pair<std::size_t, std::size_t>> edges)
    : space_(std::move(space)), nodes_(std::move(nodes)), edges_(std::move(edges)), adjacency_(nodes_.size()) {
    for (auto& [i, j] : edges_) {
        if (i >= nodes_.size() || j >= nodes_.size() || i == j) {
            throw InputError("tree edge refers to an invalid node");
        }
        if (i > j) std::swap(i, j);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw InputError("duplicate tree edge");
    }
    for (const auto& [i, j] : edges_) {
        adjacency_[i].push_back(j);
        adjacency_[j].push_back(i);
    }
    for (auto& a : adjacency_) std::sort(a.begin(), a.end());
}

bool SimplicialTree::is_tree() const {
    if (nodes_.empty() || edges_.size() + 1 != nodes_.size()) return false;
    std::vector<char> seen(nodes_.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        for (auto w : adjacency_[u]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == nodes_.size();
}

std::vector<std::size_t> tree_path(const SimplicialTree& t, std::size_t from, std::size_t to) {
    const auto n = t.nodes().size();
    if (from >= n || to >= n) throw InputError("tree node out of range");
    std::vector<std::size_t> parent(n, n);
    parent[to] = to;
    std::queue<std::size_t> frontier;
    frontier.push(to);
    while (!frontier.empty()) {
        auto u = frontier.front();
        frontier.pop();
        for (auto w : t.neighbors(u)) {
            if (parent[w] == n) {
                parent[w] = u;
                frontier.push(w);
            }
        }
    }
    if (parent[from] == n) throw ConsistencyError("tree nodes are not connected");
    std::vector<std::size_t> path{from};
    while (path.back() != to) path.push_back(parent[path.back()]);
    return path;
}

SimplicialTree realize(const Pretree& p) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            if (adjacent(p, {i}, {j})) edges.emplace_back(i, j);
        }
    }
    SimplicialTree t(p.space(), p.elements(), std::move(edges));
    if (!t.is_tree()) {
        throw ConsistencyError("adjacency graph of the pretree is not a tree (" + std::to_string(t.nodes().size()) +
                               " nodes, " + std::to_string(t.edges().size()) + " edges)");
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < p.size(); ++j) {
            const auto iv = interval(p, {i}, {j});
            const auto path = tree_path(t, i, j);
            const bool same = std::equal(path.begin(), path.end(), iv.members.begin(), iv.members.end(),
                                         [](std::size_t node, ElementId e) { return node == e.index; });
            if (!same) {
                throw ConsistencyError("tree path between nodes " + std::to_string(i) + " and " + std::to_string(j) +
                                       " differs from the interval");
            }
        }
    }
    return t;
}

TreeFormat parse_tree_format(std::string_view name) {
    if (name == "dot") return TreeFormat::dot;
    if (name == "json") return TreeFormat::json;
    throw InputError("unknown tree format '" + std::string(name) + "' (expected dot or json)");
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}

}  // namespace

std::string export_tree(const SimplicialTree& t, TreeFormat format) {
    if (format == TreeFormat::json) {
        nlohmann::ordered_json doc;
        doc["nodes"] = nlohmann::ordered_json::array();
        for (const auto& node : t.nodes()) {
            nlohmann::ordered_json support = nlohmann::ordered_json::array();
            for (Vertex v : node.support) support.push_back(t.space().name(v));
            doc["nodes"].push_back({{"kind", to_string(node.kind)}, {"support", std::move(support)}});
        }
        doc["edges"] = nlohmann::ordered_json::array();
        for (const auto& [i, j] : t.edges()) doc["edges"].push_back({i, j});
        return doc.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "graph pretree {\n";
    for (std::size_t i = 0; i < t.nodes().size(); ++i) {
        const auto& node = t.nodes()[i];
        out << "  n" << i << " [label=\"" << to_string(node.kind) << ':'
            << dot_escape(t.space().format(node.support)) << "\", shape="
            << (node.kind == ElementKind::cut ? "box" : "ellipse") << "];\n";
    }
    for (const auto& [i, j] : t.edges()) out << "  n" << i << " -- n" << j << ";\n";
    out << "}\n";
    return out.str();
}

SimplicialTree tree_from_json(const Space& space, std::string_view text) {
    try {
        const auto doc = nlohmann::json::parse(text);
        std::vector<PretreeElement> nodes;
        for (const auto& node : doc.at("nodes")) {
            const auto kind = node.at("kind").get<std::string>();
            if (kind != "cut" && kind != "blob") throw InputError("unknown node kind '" + kind + "'");
            nodes.push_back({kind == "cut" ? ElementKind::cut : ElementKind::blob,
                             space.set_of(node.at("support").get<std::vector<std::string>>())});
        }
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (const auto& e : doc.at("edges")) {
            edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
        }
        return SimplicialTree(space, std::move(nodes), std::move(edges));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed tree JSON: ") + e.what());
    }
}

}  // namespace septree
