#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "septree/tree.hpp"

namespace septree {

/// Vertex permutation preserving the edge set and the cut family.
class Automorphism {
public:
    /// `image[v]` is the image of vertex v. Throws InputError if it is not a
    /// permutation, moves an edge to a non-edge, or does not map the cut
    /// family onto itself.
    static Automorphism create(const CutSystem& cs, std::vector<Vertex> image);
    static Automorphism from_names(const CutSystem& cs, const std::map<std::string, std::string>& mapping);
    static Automorphism identity(const CutSystem& cs);

    [[nodiscard]] Vertex operator()(Vertex v) const { return image_.at(v); }
    [[nodiscard]] VertexSet operator()(const VertexSet& s) const;
    [[nodiscard]] const std::vector<Vertex>& image() const noexcept { return image_; }

    /// (g ∘ h)(v) = g(h(v)).
    friend Automorphism compose(const Automorphism& g, const Automorphism& h);
    friend bool operator==(const Automorphism&, const Automorphism&) = default;

private:
    explicit Automorphism(std::vector<Vertex> image) : image_(std::move(image)) {}
    std::vector<Vertex> image_;
};

/// All automorphisms of the space that preserve the cut family, by brute
/// force over vertex permutations. Spaces above `max_vertices` are rejected
/// with PreconditionError.
[[nodiscard]] std::vector<Automorphism> enumerate_automorphisms(const CutSystem& cs, std::size_t max_vertices = 8);

/// Element permutation: result[i] is the image of element i.
using ElementPermutation = std::vector<ElementId>;

/// Maps each element to the element of the same kind supported on the image
/// set. ConsistencyError if some image is missing or the map is not bijective.
[[nodiscard]] ElementPermutation induce(const Pretree& p, const Automorphism& g);

struct EquivarianceReport {
    std::vector<std::array<ElementId, 3>> betweenness_violations;  // (X, B, C)
    std::vector<std::pair<std::size_t, std::size_t>> edge_violations;

    [[nodiscard]] bool ok() const noexcept { return betweenness_violations.empty() && edge_violations.empty(); }
};

/// Checks X ∈ (B, C) ⇔ gX ∈ (gB, gC) for all triples, and that g maps tree
/// edges onto tree edges.
[[nodiscard]] EquivarianceReport verify_equivariance(const Pretree& p, const Automorphism& g);
[[nodiscard]] EquivarianceReport verify_equivariance(const Pretree& p, const SimplicialTree& t, const Automorphism& g);

}  // namespace septree
