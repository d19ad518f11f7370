#include "septree/cut_system.hpp"

#include <algorithm>
#include <sstream>

#include "septree/errors.hpp"

namespace septree {

bool AxiomReport::passes(int condition) const {
    switch (condition) {
        case 1: return !condition1;
        case 2: return !condition2;
        case 3: return !condition3;
        default: throw PreconditionError("there are only conditions 1, 2 and 3");
    }
}

std::vector<int> AxiomReport::failing() const {
    std::vector<int> out;
    for (int c = 1; c <= 3; ++c) {
        if (!passes(c)) out.push_back(c);
    }
    return out;
}

std::vector<VertexSet> canonical_cuts(const Space& space, std::vector<VertexSet> cuts) {
    for (const auto& c : cuts) {
        space.check_subset(c);
        if (c.empty()) throw InputError("a cut must be nonempty");
        if (c.size() == space.vertex_count()) throw InputError("a cut must be a proper subset of the vertices");
    }
    std::sort(cuts.begin(), cuts.end());
    if (auto dup = std::adjacent_find(cuts.begin(), cuts.end()); dup != cuts.end()) {
        throw InputError("duplicate cut {" + space.format(*dup) + "}");
    }
    return cuts;
}

namespace {

// First two vertices of `p` found in different components, if any.
std::optional<std::pair<Vertex, Vertex>> split_pair(const ComponentLabels& labels, const VertexSet& p) {
    std::optional<Vertex> first;
    for (Vertex v : p) {
        if (labels.label[v] < 0) continue;
        if (!first) first = v;
        else if (labels.label[v] != labels.label[*first]) return std::pair{*first, v};
    }
    return std::nullopt;
}

}  // namespace

AxiomReport validate(const Space& space, std::vector<VertexSet> cuts) {
    cuts = canonical_cuts(space, std::move(cuts));
    AxiomReport report;
    report.empty_family = cuts.empty();

    std::vector<ComponentLabels> labels;
    labels.reserve(cuts.size());
    for (const auto& c : cuts) labels.push_back(label_components(space, c));

    for (std::size_t i = 0; i < cuts.size() && !report.condition1; ++i) {
        if (labels[i].count < 2) report.condition1 = AxiomReport::NonSeparatingCut{cuts[i]};
    }
    for (std::size_t i = 0; i < cuts.size() && !report.condition2; ++i) {
        for (std::size_t j = 0; j < cuts.size(); ++j) {
            if (auto pair = split_pair(labels[i], cuts[j])) {
                report.condition2 = AxiomReport::SeparatedCut{cuts[i], cuts[j], pair->first, pair->second};
                break;
            }
        }
    }
    for (std::size_t i = 0; i < cuts.size() && !report.condition3; ++i) {
        for (std::size_t j = i + 1; j < cuts.size(); ++j) {
            auto meet = label_components(space, cuts[i].intersected(cuts[j]));
            if (meet.count >= 2) {
                auto pair = split_pair(meet, space.all());
                report.condition3 = AxiomReport::SeparatingIntersection{cuts[i], cuts[j], pair->first, pair->second};
                break;
            }
        }
    }
    return report;
}

namespace {

std::string summarize(const AxiomReport& report) {
    std::string msg = "cut family violates condition";
    for (int c : report.failing()) msg += " " + std::to_string(c);
    return msg;
}

}  // namespace

AxiomError::AxiomError(AxiomReport report) : std::runtime_error(summarize(report)), report_(std::move(report)) {}

CutSystem::CutSystem(Space space, std::vector<VertexSet> cuts)
    : space_(std::move(space)), cuts_(canonical_cuts(space_, std::move(cuts))) {
    labels_.reserve(cuts_.size());
    for (const auto& c : cuts_) labels_.push_back(label_components(space_, c));
}

CutSystem CutSystem::create(Space space, std::vector<VertexSet> cuts) {
    auto report = validate(space, cuts);
    if (!report.all_pass()) throw AxiomError(std::move(report));
    return CutSystem(std::move(space), std::move(cuts));
}

CutSystem CutSystem::assume_valid(Space space, std::vector<VertexSet> cuts) {
    return CutSystem(std::move(space), std::move(cuts));
}

std::optional<std::size_t> CutSystem::index_of(const VertexSet& cut) const {
    auto it = std::lower_bound(cuts_.begin(), cuts_.end(), cut);
    if (it == cuts_.end() || *it != cut) return std::nullopt;
    return static_cast<std::size_t>(it - cuts_.begin());
}

VertexSet CutSystem::cut_union() const {
    VertexSet out;
    for (const auto& c : cuts_) out = out.united(c);
    return out;
}

std::vector<VertexSet> articulation_cuts(const Space& space) {
    std::vector<VertexSet> out;
    for (Vertex v = 0; v < space.vertex_count(); ++v) {
        VertexSet single{v};
        if (separates(space, single)) out.push_back(std::move(single));
    }
    return out;
}

std::vector<VertexSet> filter_admissible(const Space& space, const std::vector<VertexSet>& candidates) {
    std::vector<VertexSet> kept;
    for (const auto& cand : candidates) {
        if (cand.empty() || cand.size() >= space.vertex_count()) continue;
        if (std::find(kept.begin(), kept.end(), cand) != kept.end()) continue;
        kept.push_back(cand);
        if (!validate(space, kept).all_pass()) kept.pop_back();
    }
    return kept;
}

std::string describe(const Space& space, const AxiomReport& report) {
    std::ostringstream out;
    const auto set = [&](const VertexSet& s) { return "{" + space.format(s) + "}"; };
    out << "condition 1: ";
    if (report.condition1) out << "fail: " << set(report.condition1->cut) << " does not separate the space\n";
    else out << "pass\n";
    out << "condition 2: ";
    if (const auto& w = report.condition2) {
        out << "fail: " << set(w->separator) << " separates " << set(w->separated) << " (" << space.name(w->x)
            << " | " << space.name(w->y) << ")\n";
    } else {
        out << "pass\n";
    }
    out << "condition 3: ";
    if (const auto& w = report.condition3) {
        out << "fail: " << set(w->first) << " ∩ " << set(w->second) << " = " << set(w->first.intersected(w->second))
            << " separates the space (" << space.name(w->x) << " | " << space.name(w->y) << ")\n";
    } else {
        out << "pass\n";
    }
    if (report.empty_family) out << "warning: empty cut family\n";
    return out.str();
}

}  // namespace septree
