#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "septree/pretree.hpp"

namespace septree {

/// Simplicial tree on the pretree elements with an edge (of length 1) between
/// every adjacent pair. Node i corresponds to element i of the pretree.
class SimplicialTree {
public:
    SimplicialTree(Space space, std::vector<PretreeElement> nodes, std::vector<std::pair<std::size_t, std::size_t>> edges);

    [[nodiscard]] const Space& space() const noexcept { return space_; }
    [[nodiscard]] const std::vector<PretreeElement>& nodes() const noexcept { return nodes_; }
    /// (i, j) with i < j, sorted.
    [[nodiscard]] const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
    [[nodiscard]] const std::vector<std::size_t>& neighbors(std::size_t node) const { return adjacency_.at(node); }
    [[nodiscard]] std::size_t degree(std::size_t node) const { return neighbors(node).size(); }
    [[nodiscard]] bool is_tree() const;

    friend bool operator==(const SimplicialTree& a, const SimplicialTree& b) {
        return a.space_ == b.space_ && a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
    }

private:
    Space space_;
    std::vector<PretreeElement> nodes_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::vector<std::size_t>> adjacency_;
};

/// Builds the tree and checks that it is connected and acyclic and that every
/// tree path matches the corresponding closed interval, in order.
/// Throws ConsistencyError otherwise.
[[nodiscard]] SimplicialTree realize(const Pretree& p);

/// Unique simple path from `from` to `to`, both ends included.
[[nodiscard]] std::vector<std::size_t> tree_path(const SimplicialTree& t, std::size_t from, std::size_t to);

enum class TreeFormat { dot, json };

/// Throws InputError for anything but "dot" or "json".
[[nodiscard]] TreeFormat parse_tree_format(std::string_view name);

[[nodiscard]] std::string export_tree(const SimplicialTree& t, TreeFormat format);

/// Inverse of export_tree(t, TreeFormat::json) given the same space.
[[nodiscard]] SimplicialTree tree_from_json(const Space& space, std::string_view text);

}  // namespace septree
