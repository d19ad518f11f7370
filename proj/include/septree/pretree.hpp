#pragma once

// Betweenness on 𝒫 = cuts ⊔ blobs, defined in two stages:
//   * a cut X lies in (B, C) iff X separates B from C;
//   * a blob X lies in (B, C) iff B ≠ C and [B, X) ∩ (X, C] is empty, where
//     both half-open intervals are taken in the cut stage, i.e. they hold the
//     closed endpoint plus the cuts separating the two sets.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "septree/blobs.hpp"

namespace septree {

struct ElementId {
    std::size_t index = 0;

    friend bool operator==(ElementId, ElementId) = default;
    friend auto operator<=>(ElementId, ElementId) = default;
};

enum class IntervalKind { open, closed, half_open };

/// Members of an interval in its natural linear order, `from` first.
/// `half_open` means [from, to).
struct Interval {
    ElementId from;
    ElementId to;
    IntervalKind kind = IntervalKind::closed;
    std::vector<ElementId> members;
};

struct PretreeOptions {
    /// Recompute every triple from the definitions, compare with the cache,
    /// and verify the pretree axioms. Failures raise ConsistencyError.
    bool checked = false;
    std::size_t element_limit = kDefaultElementLimit;
};

class Pretree {
public:
    static Pretree build(CutSystem cs, PretreeOptions options = {});

    [[nodiscard]] const CutSystem& system() const noexcept { return system_; }
    [[nodiscard]] const Space& space() const noexcept { return system_.space(); }
    [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
    [[nodiscard]] const std::vector<PretreeElement>& elements() const noexcept { return elements_; }
    [[nodiscard]] const PretreeElement& element(ElementId id) const;
    [[nodiscard]] std::vector<ElementId> ids() const;
    [[nodiscard]] bool is_cut(ElementId id) const { return element(id).kind == ElementKind::cut; }

    [[nodiscard]] std::optional<ElementId> find(const VertexSet& support) const;
    /// Throws InputError when no element has this support.
    [[nodiscard]] ElementId id_of(const VertexSet& support) const;

    /// X ∈ (B, C), from the cache.
    [[nodiscard]] bool between(ElementId x, ElementId b, ElementId c) const;
    /// X ∈ [A, B].
    [[nodiscard]] bool in_closed(ElementId x, ElementId a, ElementId b) const;
    /// X ∈ (B, C) recomputed from the separation predicates, bypassing all caches.
    [[nodiscard]] bool between_from_definition(ElementId x, ElementId b, ElementId c) const;
    /// Compares every cached triple with the definition; throws ConsistencyError.
    void verify_cache() const;

private:
    explicit Pretree(CutSystem cs, std::vector<PretreeElement> elements);
    void check(ElementId id) const;
    [[nodiscard]] std::size_t triple(ElementId x, ElementId b, ElementId c) const {
        return (x.index * size() + b.index) * size() + c.index;
    }

    CutSystem system_;
    std::vector<PretreeElement> elements_;
    std::vector<bool> between_;
};

[[nodiscard]] Interval interval(const Pretree& p, ElementId a, ElementId b, IntervalKind kind = IntervalKind::closed);

struct PretreeAxiomReport {
    struct Violation {
        int axiom;
        /// axiom 1: (X, B) with X ∈ (B, B)
        /// axiom 2: (X, A, B) with X in exactly one of (A, B), (B, A)
        /// axiom 3: (A, B, C) with A ∈ (B, C) and B ∈ (A, C)
        /// axiom 4: (A, B, C, D) with D ∈ (A, C) but D ∉ (A, B] ∪ [B, C)
        std::vector<ElementId> witness;
    };

    std::array<std::size_t, 4> counts{};
    std::vector<Violation> violations;  // the first few per axiom

    [[nodiscard]] bool ok() const noexcept { return counts == std::array<std::size_t, 4>{}; }
    [[nodiscard]] std::size_t count(int axiom) const { return counts.at(static_cast<std::size_t>(axiom - 1)); }
};

[[nodiscard]] PretreeAxiomReport verify_pretree_axioms(const Pretree& p, std::size_t witnesses_per_axiom = 8);

/// (A, B) is empty. Throws InputError when A = B.
[[nodiscard]] bool adjacent(const Pretree& p, ElementId a, ElementId b);

/// The single element of [A,B] ∩ [B,C] ∩ [A,C]; ConsistencyError otherwise.
[[nodiscard]] ElementId median(const Pretree& p, ElementId a, ElementId b, ElementId c);

/// Least upper bound of `subset` in the natural order of `iv`.
[[nodiscard]] ElementId supremum(const Interval& iv, const std::vector<ElementId>& subset);

struct PreseparabilityWitness {
    std::vector<ElementId> chain;          // in natural order
    std::vector<ElementId> countable_set;  // cuts of the convex hull of the chain, in order
    std::size_t pairs_checked = 0;
};

/// Validates that `chain` is linearly ordered (InputError otherwise), then
/// checks that every closed interval between two distinct chain members meets
/// the cuts of the chain's convex hull (ConsistencyError otherwise).
[[nodiscard]] PreseparabilityWitness preseparability_witness(const Pretree& p, const std::vector<ElementId>& chain);

}  // namespace septree
