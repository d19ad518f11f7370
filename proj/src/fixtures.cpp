#include "septree/fixtures.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

#include "septree/cut_system.hpp"
#include "septree/errors.hpp"
#include "septree/io.hpp"

namespace septree {

std::vector<Fixture> load_fixtures(const std::filesystem::path& dir) {
    nlohmann::json manifest;
    try {
        manifest = nlohmann::json::parse(read_file(dir / "manifest.json"));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed fixture manifest: ") + e.what());
    }
    std::vector<Fixture> out;
    for (const auto& entry : manifest.at("fixtures")) {
        auto space = load_graph(dir / entry.at("graph").get<std::string>());
        std::vector<VertexSet> cuts;
        if (entry.contains("generator")) {
            if (entry["generator"] != "articulation") throw InputError("unknown cut generator");
            cuts = articulation_cuts(space);
        } else {
            cuts = load_cuts(space, dir / entry.at("cuts").get<std::string>());
        }
        FixtureExpectation expect;
        const auto& e = entry.at("expect");
        expect.valid = e.at("valid").get<bool>();
        if (e.contains("failing")) expect.failing = e["failing"].get<std::vector<int>>();
        if (e.contains("elements")) expect.elements = e["elements"].get<std::size_t>();
        if (e.contains("blobs")) expect.blobs = e["blobs"].get<std::size_t>();
        expect.has_union_of_cuts_blob = e.value("union_of_cuts_blob", false);
        out.push_back(Fixture{entry.at("name").get<std::string>(), entry.value("description", ""), std::move(space),
                              std::move(cuts), std::move(expect)});
    }
    return out;
}

namespace {

std::string vertex_name(std::size_t i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "v%02zu", i);
    return buf;
}

// Uniform in [0, bound) without relying on implementation-defined distributions.
std::size_t below(std::mt19937_64& rng, std::size_t bound) {
    return static_cast<std::size_t>(rng() % bound);
}

double unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Space random_connected_graph(std::mt19937_64& rng, std::size_t n, double extra_edge_probability) {
    if (n < 2) throw PreconditionError("random graphs need at least two vertices");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(vertex_name(i));
    std::vector<std::vector<char>> joined(n, std::vector<char>(n, 0));
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 1; i < n; ++i) {
        auto parent = below(rng, i);
        joined[i][parent] = joined[parent][i] = 1;
        edges.emplace_back(names[parent], names[i]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!joined[i][j] && unit(rng) < extra_edge_probability) edges.emplace_back(names[i], names[j]);
        }
    }
    return Space(std::move(names), edges);
}

std::vector<VertexSet> random_cut_family(const Space& space, std::mt19937_64& rng, std::size_t candidates,
                                         std::size_t max_cut_size) {
    const auto n = space.vertex_count();
    std::vector<VertexSet> pool;
    for (std::size_t i = 0; i < candidates; ++i) {
        const auto size = 1 + below(rng, std::min(max_cut_size, n - 1));
        std::vector<Vertex> members;
        while (members.size() < size) {
            auto v = static_cast<Vertex>(below(rng, n));
            if (std::find(members.begin(), members.end(), v) == members.end()) members.push_back(v);
        }
        pool.emplace_back(std::move(members));
    }
    return filter_admissible(space, pool);
}

}  // namespace septree
