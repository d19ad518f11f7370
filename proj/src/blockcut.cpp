#include "septree/blockcut.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace septree {

namespace {

class LowLink {
public:
    explicit LowLink(const Space& space)
        : space_(space), disc_(space.vertex_count(), -1), low_(space.vertex_count(), 0),
          is_articulation_(space.vertex_count(), 0) {}

    void run() {
        // The space is connected, so one root reaches everything.
        visit(0, -1);
    }

    std::vector<VertexSet> blocks;
    std::vector<char> const& articulation() const { return is_articulation_; }

private:
    void visit(Vertex u, long parent) {
        disc_[u] = low_[u] = clock_++;
        int children = 0;
        for (Vertex w : space_.neighbors(u)) {
            if (disc_[w] < 0) {
                ++children;
                edges_.emplace_back(u, w);
                visit(w, u);
                low_[u] = std::min(low_[u], low_[w]);
                if (low_[w] >= disc_[u]) {
                    if (parent >= 0 || children > 1) is_articulation_[u] = 1;
                    std::vector<Vertex> block;
                    while (true) {
                        auto [a, b] = edges_.back();
                        edges_.pop_back();
                        block.push_back(a);
                        block.push_back(b);
                        if (a == u && b == w) break;
                    }
                    blocks.emplace_back(std::move(block));
                }
            } else if (static_cast<long>(w) != parent && disc_[w] < disc_[u]) {
                edges_.emplace_back(u, w);
                low_[u] = std::min(low_[u], disc_[w]);
            }
        }
    }

    const Space& space_;
    std::vector<int> disc_;
    std::vector<int> low_;
    std::vector<char> is_articulation_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    int clock_ = 0;
};

}  // namespace

BlockCutDecomposition block_cut_tree(const Space& space) {
    LowLink dfs(space);
    dfs.run();
    BlockCutDecomposition out;
    out.blocks = std::move(dfs.blocks);
    std::sort(out.blocks.begin(), out.blocks.end());
    for (Vertex v = 0; v < space.vertex_count(); ++v) {
        if (dfs.articulation()[v]) out.articulation.push_back(v);
    }
    const auto cuts = out.articulation.size();
    out.tree.labels.assign(cuts, "cut");
    out.tree.labels.resize(cuts + out.blocks.size(), "blob");
    out.tree.adjacency.resize(out.tree.labels.size());
    for (std::size_t c = 0; c < cuts; ++c) {
        for (std::size_t b = 0; b < out.blocks.size(); ++b) {
            if (out.blocks[b].contains(out.articulation[c])) {
                out.tree.adjacency[c].push_back(cuts + b);
                out.tree.adjacency[cuts + b].push_back(c);
            }
        }
    }
    return out;
}

LabeledTree to_labeled(const SimplicialTree& t) {
    LabeledTree out;
    for (std::size_t i = 0; i < t.nodes().size(); ++i) {
        out.labels.emplace_back(to_string(t.nodes()[i].kind));
        out.adjacency.push_back(t.neighbors(i));
    }
    return out;
}

std::string canonical_encoding(const LabeledTree& t) {
    const auto n = t.labels.size();
    if (n == 0) return "()";
    // Peel leaves layer by layer; the last one or two nodes are the centres.
    std::vector<std::size_t> degree(n);
    std::vector<std::size_t> layer;
    for (std::size_t v = 0; v < n; ++v) {
        degree[v] = t.adjacency[v].size();
        if (degree[v] <= 1) layer.push_back(v);
    }
    std::size_t remaining = n;
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<std::size_t> next;
        for (auto v : layer) {
            for (auto w : t.adjacency[v]) {
                if (--degree[w] == 1) next.push_back(w);
            }
        }
        layer = std::move(next);
    }

    std::function<std::string(std::size_t, std::size_t)> encode = [&](std::size_t v, std::size_t parent) {
        std::vector<std::string> children;
        for (auto w : t.adjacency[v]) {
            if (w != parent) children.push_back(encode(w, v));
        }
        std::sort(children.begin(), children.end());
        std::string out = "(" + t.labels[v];
        for (auto& c : children) out += c;
        return out + ")";
    };
    std::string best;
    for (auto centre : layer) {
        auto enc = encode(centre, n);
        if (best.empty() || enc < best) best = std::move(enc);
    }
    return best;
}

BlockCutComparison compare_with_block_cut_tree(const Space& space) {
    const auto oracle = block_cut_tree(space);
    const auto p = Pretree::build(CutSystem::create(space, articulation_cuts(space)));
    const auto tree = realize(p);

    BlockCutComparison out;
    std::vector<VertexSet> blobs;
    for (const auto& e : p.elements()) {
        if (e.kind == ElementKind::blob) blobs.push_back(e.support);
    }
    std::sort(blobs.begin(), blobs.end());
    for (const auto& b : blobs) {
        if (!std::binary_search(oracle.blocks.begin(), oracle.blocks.end(), b)) {
            out.only_in_pipeline.push_back(space.format(b));
        }
    }
    for (const auto& b : oracle.blocks) {
        if (!std::binary_search(blobs.begin(), blobs.end(), b)) out.only_in_blocks.push_back(space.format(b));
    }
    out.blobs_match = out.only_in_pipeline.empty() && out.only_in_blocks.empty();
    out.pipeline_encoding = canonical_encoding(to_labeled(tree));
    out.oracle_encoding = canonical_encoding(oracle.tree);
    out.tree_match = out.pipeline_encoding == out.oracle_encoding;
    return out;
}

}  // namespace septree
