#pragma once

// File formats.
//
// Graph: either a JSON object
//     {"vertices": ["a", "b", ...], "edges": [["a", "b"], ...]}
// or a plain edge list with one "u v" pair per line (vertices inferred,
// blank lines and lines starting with '#' ignored).
//
// Cut family: JSON list of vertex-name lists, e.g. [["b"], ["c", "d"]].
//
// Permutation: JSON object mapping vertex name to image name; vertices not
// mentioned are fixed.
//
// Pretree: {"elements": [{"kind": "cut"|"blob", "support": [...]}, ...],
//           "betweenness": [[x, b, c], ...]}   (optional; x ∈ (b, c), indices)

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "septree/pretree.hpp"

namespace septree {

[[nodiscard]] std::string read_file(const std::filesystem::path& path);

[[nodiscard]] Space parse_graph(std::string_view text);
[[nodiscard]] Space load_graph(const std::filesystem::path& path);

[[nodiscard]] std::vector<VertexSet> parse_cuts(const Space& space, std::string_view text);
[[nodiscard]] std::vector<VertexSet> load_cuts(const Space& space, const std::filesystem::path& path);

[[nodiscard]] std::map<std::string, std::string> parse_permutation(std::string_view text);

/// Element selector: comma-joined vertex names, e.g. "a,b".
[[nodiscard]] VertexSet parse_selector(const Space& space, std::string_view selector);

[[nodiscard]] std::string graph_to_json(const Space& space);
[[nodiscard]] std::string cuts_to_json(const Space& space, const std::vector<VertexSet>& cuts);
[[nodiscard]] std::string pretree_to_json(const Pretree& p, bool with_betweenness);

}  // namespace septree
