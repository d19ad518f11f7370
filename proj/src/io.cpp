#include "septree/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "septree/errors.hpp"

namespace septree {

using nlohmann::json;
using nlohmann::ordered_json;

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

namespace {

Space parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::set<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string u;
        std::string v;
        std::string extra;
        if (!(fields >> u) || u.front() == '#') continue;
        if (!(fields >> v) || (fields >> extra)) {
            throw InputError("line " + std::to_string(line_no) + ": expected exactly two vertex names");
        }
        vertices.insert(u);
        vertices.insert(v);
        edges.emplace_back(std::move(u), std::move(v));
    }
    return Space({vertices.begin(), vertices.end()}, edges);
}

}  // namespace

Space parse_graph(std::string_view text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw InputError("empty graph input");
    if (text[first] != '{') return parse_edge_list(text);
    try {
        const auto doc = json::parse(text);
        auto vertices = doc.at("vertices").get<std::vector<std::string>>();
        std::vector<std::pair<std::string, std::string>> edges;
        for (const auto& e : doc.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw InputError("each edge must be a pair of vertex names");
            edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
        return Space(std::move(vertices), edges);
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed graph JSON: ") + e.what());
    }
}

Space load_graph(const std::filesystem::path& path) {
    return parse_graph(read_file(path));
}

std::vector<VertexSet> parse_cuts(const Space& space, std::string_view text) {
    try {
        const auto doc = json::parse(text);
        if (!doc.is_array()) throw InputError("cut family must be a JSON list of vertex lists");
        std::vector<VertexSet> cuts;
        for (const auto& c : doc) cuts.push_back(space.set_of(c.get<std::vector<std::string>>()));
        return cuts;
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed cut family JSON: ") + e.what());
    }
}

std::vector<VertexSet> load_cuts(const Space& space, const std::filesystem::path& path) {
    return parse_cuts(space, read_file(path));
}

std::map<std::string, std::string> parse_permutation(std::string_view text) {
    try {
        const auto doc = json::parse(text);
        if (!doc.is_object()) throw InputError("permutation must be a JSON object");
        return doc.get<std::map<std::string, std::string>>();
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed permutation JSON: ") + e.what());
    }
}

VertexSet parse_selector(const Space& space, std::string_view selector) {
    std::vector<std::string> names;
    std::size_t start = 0;
    while (start <= selector.size()) {
        auto comma = selector.find(',', start);
        if (comma == std::string_view::npos) comma = selector.size();
        auto name = selector.substr(start, comma - start);
        if (name.empty()) throw InputError("empty vertex name in selector '" + std::string(selector) + "'");
        names.emplace_back(name);
        start = comma + 1;
    }
    return space.set_of(names);
}

namespace {

ordered_json names_of(const Space& space, const VertexSet& s) {
    ordered_json out = ordered_json::array();
    for (Vertex v : s) out.push_back(space.name(v));
    return out;
}

}  // namespace

std::string graph_to_json(const Space& space) {
    ordered_json doc;
    doc["vertices"] = space.names();
    doc["edges"] = ordered_json::array();
    for (const auto& [u, v] : space.edges()) doc["edges"].push_back({space.name(u), space.name(v)});
    return doc.dump(2) + "\n";
}

std::string cuts_to_json(const Space& space, const std::vector<VertexSet>& cuts) {
    ordered_json doc = ordered_json::array();
    for (const auto& c : cuts) doc.push_back(names_of(space, c));
    return doc.dump() + "\n";
}

std::string pretree_to_json(const Pretree& p, bool with_betweenness) {
    ordered_json doc;
    doc["elements"] = ordered_json::array();
    for (const auto& e : p.elements()) {
        doc["elements"].push_back({{"kind", to_string(e.kind)}, {"support", names_of(p.space(), e.support)}});
    }
    if (with_betweenness) {
        doc["betweenness"] = ordered_json::array();
        for (auto x : p.ids()) {
            for (auto b : p.ids()) {
                for (auto c : p.ids()) {
                    if (p.between(x, b, c)) doc["betweenness"].push_back({x.index, b.index, c.index});
                }
            }
        }
    }
    return doc.dump(2) + "\n";
}

}  // namespace septree
