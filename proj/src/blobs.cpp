#include "septree/blobs.hpp"

#include <algorithm>

#include "septree/errors.hpp"

namespace septree {

InseparabilityRelation::InseparabilityRelation(const CutSystem& cs)
    : n_(cs.space().vertex_count()), related_(n_ * n_, 1) {
    for (std::size_t k = 0; k < cs.cuts().size(); ++k) {
        const auto& labels = cs.labels(k);
        for (Vertex x = 0; x < n_; ++x) {
            if (labels.label[x] < 0) continue;
            for (Vertex y = x + 1; y < n_; ++y) {
                if (labels.label[y] >= 0 && labels.label[y] != labels.label[x]) {
                    related_[x * n_ + y] = 0;
                    related_[y * n_ + x] = 0;
                }
            }
        }
    }
}

bool inseparable(const CutSystem& cs, Vertex x, Vertex y) {
    const auto n = cs.space().vertex_count();
    if (x >= n || y >= n) throw InputError("vertex index outside the space");
    for (std::size_t k = 0; k < cs.cuts().size(); ++k) {
        const auto& labels = cs.labels(k);
        if (labels.label[x] >= 0 && labels.label[y] >= 0 && labels.label[x] != labels.label[y]) return false;
    }
    return true;
}

bool is_inseparable_set(const CutSystem& cs, const VertexSet& p) {
    cs.space().check_subset(p);
    for (std::size_t k = 0; k < cs.cuts().size(); ++k) {
        if (separates_set(cs.labels(k), p)) return false;
    }
    return true;
}

namespace {

// Bron–Kerbosch with Tomita pivoting over sorted vertex vectors.
class CliqueEnumerator {
public:
    CliqueEnumerator(const InseparabilityRelation& rel, std::size_t limit) : rel_(rel), limit_(limit) {}

    std::vector<VertexSet> run() {
        std::vector<Vertex> candidates(rel_.size());
        for (std::size_t v = 0; v < candidates.size(); ++v) candidates[v] = static_cast<Vertex>(v);
        std::vector<Vertex> clique;
        expand(clique, candidates, {});
        std::sort(found_.begin(), found_.end());
        return std::move(found_);
    }

private:
    std::vector<Vertex> neighbours_in(Vertex v, const std::vector<Vertex>& set) const {
        std::vector<Vertex> out;
        for (Vertex w : set) {
            if (w != v && rel_.related(v, w)) out.push_back(w);
        }
        return out;
    }

    void expand(std::vector<Vertex>& clique, std::vector<Vertex> candidates, std::vector<Vertex> excluded) {
        if (candidates.empty()) {
            if (excluded.empty()) {
                if (found_.size() == limit_) {
                    throw ResourceError("more than " + std::to_string(limit_) + " maximal inseparable sets");
                }
                found_.emplace_back(clique);
            }
            return;
        }
        Vertex pivot = candidates.front();
        long best = -1;
        for (const auto* pool : {&candidates, &excluded}) {
            for (Vertex u : *pool) {
                long hits = 0;
                for (Vertex w : candidates) hits += (w != u && rel_.related(u, w)) ? 1 : 0;
                if (hits > best) {
                    best = hits;
                    pivot = u;
                }
            }
        }
        std::vector<Vertex> branch;
        for (Vertex v : candidates) {
            if (v == pivot || !rel_.related(pivot, v)) branch.push_back(v);
        }
        for (Vertex v : branch) {
            clique.push_back(v);
            expand(clique, neighbours_in(v, candidates), neighbours_in(v, excluded));
            clique.pop_back();
            candidates.erase(std::find(candidates.begin(), candidates.end(), v));
            excluded.insert(std::upper_bound(excluded.begin(), excluded.end(), v), v);
        }
    }

    const InseparabilityRelation& rel_;
    std::size_t limit_;
    std::vector<VertexSet> found_;
};

}  // namespace

std::vector<VertexSet> maximal_inseparable_sets(const CutSystem& cs, std::size_t limit) {
    InseparabilityRelation rel(cs);
    return CliqueEnumerator(rel, limit).run();
}

std::string_view to_string(ElementKind kind) noexcept {
    return kind == ElementKind::cut ? "cut" : "blob";
}

std::vector<PretreeElement> pretree_elements(const CutSystem& cs, std::size_t limit) {
    std::vector<PretreeElement> out;
    for (const auto& c : cs.cuts()) out.push_back({ElementKind::cut, c});
    for (auto& m : maximal_inseparable_sets(cs, limit)) {
        if (!cs.index_of(m)) out.push_back({ElementKind::blob, std::move(m)});
    }
    if (out.size() > limit) {
        throw ResourceError("more than " + std::to_string(limit) + " pretree elements");
    }
    return out;
}

std::vector<VertexSet> quotient_blobs(const CutSystem& cs) {
    const auto outside = cs.space().all().minus(cs.cut_union());
    std::vector<char> assigned(cs.space().vertex_count(), 0);
    std::vector<VertexSet> out;
    for (Vertex x : outside) {
        if (assigned[x]) continue;
        std::vector<Vertex> cls;
        for (Vertex y : outside) {
            if (!assigned[y] && inseparable(cs, x, y)) {
                assigned[y] = 1;
                cls.push_back(y);
            }
        }
        out.emplace_back(std::move(cls));
    }
    return out;
}

}  // namespace septree
