#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "septree/cut_system.hpp"

namespace septree {

inline constexpr std::size_t kDefaultElementLimit = 10'000;

/// x ~ y iff no cut has x and y outside it and in different components of
/// its complement. Reflexive and symmetric, not transitive in general.
class InseparabilityRelation {
public:
    explicit InseparabilityRelation(const CutSystem& cs);

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] bool related(Vertex x, Vertex y) const { return related_[x * n_ + y] != 0; }

private:
    std::size_t n_;
    std::vector<char> related_;
};

[[nodiscard]] bool inseparable(const CutSystem& cs, Vertex x, Vertex y);
[[nodiscard]] bool is_inseparable_set(const CutSystem& cs, const VertexSet& p);

/// Inclusion-maximal inseparable sets, sorted. Throws ResourceError when
/// more than `limit` sets are found.
[[nodiscard]] std::vector<VertexSet> maximal_inseparable_sets(const CutSystem& cs,
                                                              std::size_t limit = kDefaultElementLimit);

enum class ElementKind { cut, blob };

[[nodiscard]] std::string_view to_string(ElementKind kind) noexcept;

struct PretreeElement {
    ElementKind kind;
    VertexSet support;

    friend bool operator==(const PretreeElement&, const PretreeElement&) = default;
    friend auto operator<=>(const PretreeElement&, const PretreeElement&) = default;
};

/// The cuts (in family order) followed by the blobs: maximal inseparable sets
/// that are not themselves a cut, sorted by support.
[[nodiscard]] std::vector<PretreeElement> pretree_elements(const CutSystem& cs,
                                                           std::size_t limit = kDefaultElementLimit);

/// Classes of ~ restricted to the vertices outside every cut, sorted.
[[nodiscard]] std::vector<VertexSet> quotient_blobs(const CutSystem& cs);

}  // namespace septree
