#pragma once

// Finite model of a connected space: a connected simple graph whose vertex
// subsets play the role of closed sets. Removing a vertex set drops every
// edge touching it; quasicomponents of the remainder are the connected
// components of the induced subgraph.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace septree {

using Vertex = std::uint32_t;

/// Canonical (sorted, duplicate-free) set of vertex indices.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<Vertex> members);
    VertexSet(std::initializer_list<Vertex> members);

    [[nodiscard]] std::span<const Vertex> members() const noexcept { return members_; }
    [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
    [[nodiscard]] bool empty() const noexcept { return members_.empty(); }
    [[nodiscard]] bool contains(Vertex v) const noexcept;
    [[nodiscard]] bool is_subset_of(const VertexSet& other) const noexcept;
    [[nodiscard]] bool intersects(const VertexSet& other) const noexcept;

    [[nodiscard]] VertexSet united(const VertexSet& other) const;
    [[nodiscard]] VertexSet intersected(const VertexSet& other) const;
    [[nodiscard]] VertexSet minus(const VertexSet& other) const;

    [[nodiscard]] auto begin() const noexcept { return members_.begin(); }
    [[nodiscard]] auto end() const noexcept { return members_.end(); }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<Vertex> members_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const noexcept;
};

/// Finite connected simple graph with at least two vertices.
/// Vertex indices follow the lexicographic order of the vertex names.
class Space {
public:
    /// Throws InputError on duplicate vertices or edges, self-loops,
    /// unknown endpoints, fewer than two vertices, or a disconnected graph.
    Space(std::vector<std::string> vertex_names,
          const std::vector<std::pair<std::string, std::string>>& edges);

    [[nodiscard]] std::size_t vertex_count() const noexcept { return names_.size(); }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
    [[nodiscard]] const std::string& name(Vertex v) const { return names_.at(v); }
    [[nodiscard]] const std::vector<std::string>& names() const noexcept { return names_; }
    [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    /// Edges as (u, v) with u < v, sorted.
    [[nodiscard]] const std::vector<std::pair<Vertex, Vertex>>& edges() const noexcept { return edges_; }
    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const;

    [[nodiscard]] std::optional<Vertex> find(std::string_view name) const;
    /// Throws InputError for an unknown name.
    [[nodiscard]] Vertex vertex(std::string_view name) const;
    [[nodiscard]] VertexSet set_of(const std::vector<std::string>& names) const;
    [[nodiscard]] VertexSet all() const;

    /// Throws InputError if `s` mentions a vertex outside the space.
    void check_subset(const VertexSet& s) const;

    /// Comma-joined vertex names, e.g. "a,b".
    [[nodiscard]] std::string format(const VertexSet& s) const;

    friend bool operator==(const Space& a, const Space& b) {
        return a.names_ == b.names_ && a.edges_ == b.edges_;
    }

private:
    std::vector<std::string> names_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
};

/// Component label of every vertex of Z∖removed; removed vertices get -1.
/// Labels are numbered in order of least contained vertex.
struct ComponentLabels {
    std::vector<int> label;
    int count = 0;

    [[nodiscard]] bool same(Vertex x, Vertex y) const { return label[x] >= 0 && label[x] == label[y]; }
};

[[nodiscard]] ComponentLabels label_components(const Space& space, const VertexSet& removed);

/// Connected components of the subgraph induced on `within`.
[[nodiscard]] std::vector<VertexSet> induced_components(const Space& space, const VertexSet& within);

/// Components of Z∖removed, sorted by least vertex.
[[nodiscard]] std::vector<VertexSet> components(const Space& space, const VertexSet& removed);

/// True iff Z∖a has at least two components.
[[nodiscard]] bool separates(const Space& space, const VertexSet& a);

/// True iff two points of p∖a lie in different components of Z∖a.
[[nodiscard]] bool separates_set(const Space& space, const VertexSet& a, const VertexSet& p);

/// True iff some x in b∖a and y in c∖a lie in different components of Z∖a.
[[nodiscard]] bool separates_from(const Space& space, const VertexSet& a, const VertexSet& b,
                                  const VertexSet& c);

// Label-based forms of the predicates above, for callers that reuse one labelling.
[[nodiscard]] bool separates_set(const ComponentLabels& labels, const VertexSet& p);
[[nodiscard]] bool separates_from(const ComponentLabels& labels, const VertexSet& b, const VertexSet& c);

/// A separation (U, V) of Z∖removed: nonempty, disjoint, covering, and with
/// no edge between the sides.
class Separation {
public:
    /// Throws PreconditionError if the sides do not form a separation.
    Separation(const Space& space, VertexSet removed, VertexSet side_u, VertexSet side_v);

    [[nodiscard]] const VertexSet& removed() const noexcept { return removed_; }
    [[nodiscard]] const VertexSet& side_u() const noexcept { return side_u_; }
    [[nodiscard]] const VertexSet& side_v() const noexcept { return side_v_; }

    friend bool operator==(const Separation&, const Separation&) = default;

private:
    VertexSet removed_;
    VertexSet side_u_;
    VertexSet side_v_;
};

/// (U1 ∩ U2, V1 ∪ V2). Both inputs must separate the same removed set and
/// U1 ∩ U2 must be nonempty, else PreconditionError.
[[nodiscard]] Separation refine_separations(const Space& space, const Separation& s1, const Separation& s2);

/// Canonical witness that `a` separates `b` from `c`: side U collects every
/// component meeting b∖a, side V the rest. Absent when `a` does not separate
/// them or when c∖a meets U.
[[nodiscard]] std::optional<Separation> separation_between(const Space& space, const VertexSet& a,
                                                           const VertexSet& b, const VertexSet& c);

}  // namespace septree
