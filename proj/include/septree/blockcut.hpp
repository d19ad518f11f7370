#pragma once

// Classical block-cut tree, computed with the Hopcroft–Tarjan low-link DFS.
// It shares no code with the pretree pipeline and serves as its oracle when
// the cut family is the set of articulation singletons.

#include <cstddef>
#include <string>
#include <vector>

#include "septree/tree.hpp"

namespace septree {

/// Vertex-labelled unrooted tree.
struct LabeledTree {
    std::vector<std::string> labels;
    std::vector<std::vector<std::size_t>> adjacency;
};

struct BlockCutDecomposition {
    std::vector<VertexSet> blocks;          // sorted
    std::vector<Vertex> articulation;       // ascending
    LabeledTree tree;                       // "cut" nodes then "blob" nodes
};

[[nodiscard]] BlockCutDecomposition block_cut_tree(const Space& space);

/// Labels nodes by element kind.
[[nodiscard]] LabeledTree to_labeled(const SimplicialTree& t);

/// Canonical string of a labelled unrooted tree (AHU encoding rooted at the
/// centre, minimized over the two centres when there are two). Equal strings
/// iff the trees are isomorphic as labelled trees.
[[nodiscard]] std::string canonical_encoding(const LabeledTree& t);

struct BlockCutComparison {
    bool blobs_match = false;
    bool tree_match = false;
    std::vector<std::string> only_in_pipeline;  // blob supports
    std::vector<std::string> only_in_blocks;
    std::string pipeline_encoding;
    std::string oracle_encoding;

    [[nodiscard]] bool ok() const noexcept { return blobs_match && tree_match; }
};

/// Runs the pretree pipeline with the articulation cut family and compares
/// the blobs with the blocks and the realized tree with the block-cut tree.
[[nodiscard]] BlockCutComparison compare_with_block_cut_tree(const Space& space);

}  // namespace septree
