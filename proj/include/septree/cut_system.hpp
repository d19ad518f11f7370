#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "septree/space.hpp"

namespace septree {

/// Outcome of checking a cut family against the three admissibility conditions:
///   (1) every cut separates the space,
///   (2) no cut separates another cut (or itself),
///   (3) the intersection of two distinct cuts does not separate the space.
/// Each failing condition carries the first witness in lexicographic scan
/// order over the canonically sorted family.
struct AxiomReport {
    struct NonSeparatingCut {
        VertexSet cut;
    };
    struct SeparatedCut {
        VertexSet separator;  // A
        VertexSet separated;  // B
        Vertex x;             // x, y ∈ B∖A in different components of Z∖A
        Vertex y;
    };
    struct SeparatingIntersection {
        VertexSet first;
        VertexSet second;
        Vertex x;  // x, y in different components of Z∖(first ∩ second)
        Vertex y;
    };

    std::optional<NonSeparatingCut> condition1;
    std::optional<SeparatedCut> condition2;
    std::optional<SeparatingIntersection> condition3;
    bool empty_family = false;  // vacuously valid, flagged for the caller

    [[nodiscard]] bool passes(int condition) const;
    [[nodiscard]] bool all_pass() const noexcept { return !condition1 && !condition2 && !condition3; }
    /// Numbers of the failing conditions, ascending.
    [[nodiscard]] std::vector<int> failing() const;
};

/// Canonicalizes a cut family: sorts it and rejects duplicates, empty sets,
/// the whole vertex set, and vertices outside the space (InputError).
[[nodiscard]] std::vector<VertexSet> canonical_cuts(const Space& space, std::vector<VertexSet> cuts);

[[nodiscard]] AxiomReport validate(const Space& space, std::vector<VertexSet> cuts);

/// Thrown when a cut family is rejected by validation.
class AxiomError : public std::runtime_error {
public:
    explicit AxiomError(AxiomReport report);
    [[nodiscard]] const AxiomReport& report() const noexcept { return report_; }

private:
    AxiomReport report_;
};

/// A space with an admissible cut family. Cuts are stored sorted.
class CutSystem {
public:
    /// Validates and throws AxiomError on any failing condition.
    static CutSystem create(Space space, std::vector<VertexSet> cuts);
    /// Canonicalizes only; the admissibility conditions are not checked.
    /// Used to study what breaks when a condition fails.
    static CutSystem assume_valid(Space space, std::vector<VertexSet> cuts);

    [[nodiscard]] const Space& space() const noexcept { return space_; }
    [[nodiscard]] const std::vector<VertexSet>& cuts() const noexcept { return cuts_; }
    [[nodiscard]] const ComponentLabels& labels(std::size_t cut_index) const { return labels_.at(cut_index); }
    [[nodiscard]] std::optional<std::size_t> index_of(const VertexSet& cut) const;
    [[nodiscard]] VertexSet cut_union() const;

private:
    CutSystem(Space space, std::vector<VertexSet> cuts);

    Space space_;
    std::vector<VertexSet> cuts_;
    std::vector<ComponentLabels> labels_;
};

/// Singletons of the articulation vertices, in vertex order.
[[nodiscard]] std::vector<VertexSet> articulation_cuts(const Space& space);

/// Greedy scan keeping each candidate iff the kept family stays admissible.
[[nodiscard]] std::vector<VertexSet> filter_admissible(const Space& space, const std::vector<VertexSet>& candidates);

[[nodiscard]] std::string describe(const Space& space, const AxiomReport& report);

}  // namespace septree
