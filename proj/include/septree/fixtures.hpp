#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "septree/space.hpp"

namespace septree {

/// Recorded outcome for a corpus entry; re-verified by the test suites.
struct FixtureExpectation {
    bool valid = true;
    std::vector<int> failing;  // failing admissibility conditions when !valid
    std::optional<std::size_t> elements;
    std::optional<std::size_t> blobs;
    bool has_union_of_cuts_blob = false;
};

struct Fixture {
    std::string name;
    std::string description;
    Space space;
    std::vector<VertexSet> cuts;
    FixtureExpectation expect;
};

/// Reads <dir>/manifest.json and every graph and cut file it names. An entry
/// may use "generator": "articulation" instead of a cut file.
[[nodiscard]] std::vector<Fixture> load_fixtures(const std::filesystem::path& dir);

/// Random connected graph on n ≥ 2 vertices named v00, v01, ...: a random
/// recursive tree plus each remaining pair with probability `extra_edge_probability`.
[[nodiscard]] Space random_connected_graph(std::mt19937_64& rng, std::size_t n, double extra_edge_probability);

/// Admissible family obtained by filtering random vertex subsets of size
/// 1..max_cut_size.
[[nodiscard]] std::vector<VertexSet> random_cut_family(const Space& space, std::mt19937_64& rng,
                                                       std::size_t candidates, std::size_t max_cut_size);

}  // namespace septree
