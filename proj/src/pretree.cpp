#include "septree/pretree.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "septree/errors.hpp"

namespace septree {

namespace {

constexpr std::size_t kMaxCachedElements = 1024;

std::string label(const Pretree& p, ElementId id) {
    const auto& e = p.element(id);
    return std::string(to_string(e.kind)) + ":{" + p.space().format(e.support) + "}";
}

}  // namespace

Pretree::Pretree(CutSystem cs, std::vector<PretreeElement> elements)
    : system_(std::move(cs)), elements_(std::move(elements)) {}

Pretree Pretree::build(CutSystem cs, PretreeOptions options) {
    auto elements = pretree_elements(cs, options.element_limit);
    if (elements.size() > kMaxCachedElements) {
        throw ResourceError("betweenness cache supports at most " + std::to_string(kMaxCachedElements) +
                            " elements, got " + std::to_string(elements.size()));
    }
    Pretree p(std::move(cs), std::move(elements));
    const std::size_t n = p.size();
    const std::size_t k = p.system_.cuts().size();
    const std::size_t words = (k + 63) / 64;

    // separating[(y * n + z) * words + w]: bit set of cuts separating element y from z.
    std::vector<std::uint64_t> separating(n * n * words, 0);
    for (std::size_t c = 0; c < k; ++c) {
        const auto& labels = p.system_.labels(c);
        for (std::size_t y = 0; y < n; ++y) {
            for (std::size_t z = 0; z < n; ++z) {
                if (separates_from(labels, p.elements_[y].support, p.elements_[z].support)) {
                    separating[(y * n + z) * words + c / 64] |= std::uint64_t{1} << (c % 64);
                }
            }
        }
    }
    const auto separates_pair = [&](std::size_t c, std::size_t y, std::size_t z) {
        return (separating[(y * n + z) * words + c / 64] >> (c % 64)) & 1U;
    };

    // Cuts occupy element indices [0, k) in family order.
    p.between_.assign(n * n * n, false);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t b = 0; b < n; ++b) {
            if (b == x) continue;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == x) continue;
                bool inside = false;
                if (x < k) {
                    inside = separates_pair(x, b, c);
                } else if (b != c) {
                    // [B, X) ∩ (X, C] = ∅ in the cut stage.
                    bool meet = (b < k && separates_pair(b, x, c)) || (c < k && separates_pair(c, b, x));
                    for (std::size_t w = 0; w < words && !meet; ++w) {
                        meet = (separating[(b * n + x) * words + w] & separating[(x * n + c) * words + w]) != 0;
                    }
                    inside = !meet;
                }
                p.between_[p.triple({x}, {b}, {c})] = inside;
            }
        }
    }

    if (options.checked) {
        p.verify_cache();
        auto report = verify_pretree_axioms(p, 1);
        if (!report.ok()) {
            throw ConsistencyError("pretree axioms fail on an admissible cut family (axiom counts " +
                                   std::to_string(report.counts[0]) + "/" + std::to_string(report.counts[1]) + "/" +
                                   std::to_string(report.counts[2]) + "/" + std::to_string(report.counts[3]) + ")");
        }
    }
    return p;
}

void Pretree::check(ElementId id) const {
    if (id.index >= elements_.size()) {
        throw InputError("element index " + std::to_string(id.index) + " is out of range");
    }
}

const PretreeElement& Pretree::element(ElementId id) const {
    check(id);
    return elements_[id.index];
}

std::vector<ElementId> Pretree::ids() const {
    std::vector<ElementId> out(size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = {i};
    return out;
}

std::optional<ElementId> Pretree::find(const VertexSet& support) const {
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (elements_[i].support == support) return ElementId{i};
    }
    return std::nullopt;
}

ElementId Pretree::id_of(const VertexSet& support) const {
    if (auto id = find(support)) return *id;
    throw InputError("no pretree element has support {" + space().format(support) + "}");
}

bool Pretree::between(ElementId x, ElementId b, ElementId c) const {
    check(x);
    check(b);
    check(c);
    return between_[triple(x, b, c)];
}

bool Pretree::in_closed(ElementId x, ElementId a, ElementId b) const {
    return x == a || x == b || between(x, a, b);
}

bool Pretree::between_from_definition(ElementId x, ElementId b, ElementId c) const {
    check(x);
    check(b);
    check(c);
    if (x == b || x == c) return false;
    const Space& z = space();
    const auto& xe = elements_[x.index];
    const auto& be = elements_[b.index];
    const auto& ce = elements_[c.index];
    if (xe.kind == ElementKind::cut) return separates_from(z, xe.support, be.support, ce.support);
    if (b == c) return false;

    // Cut-stage [B, X) and (X, C], as element indices.
    std::vector<std::size_t> left{b.index};
    std::vector<std::size_t> right{c.index};
    for (std::size_t d = 0; d < elements_.size(); ++d) {
        if (elements_[d].kind != ElementKind::cut) continue;
        if (separates_from(z, elements_[d].support, be.support, xe.support)) left.push_back(d);
        if (separates_from(z, elements_[d].support, xe.support, ce.support)) right.push_back(d);
    }
    for (auto d : left) {
        if (std::find(right.begin(), right.end(), d) != right.end()) return false;
    }
    return true;
}

void Pretree::verify_cache() const {
    for (auto x : ids()) {
        for (auto b : ids()) {
            for (auto c : ids()) {
                if (between(x, b, c) != between_from_definition(x, b, c)) {
                    throw ConsistencyError("cached betweenness disagrees with the definition at " + label(*this, x) +
                                           " in (" + label(*this, b) + ", " + label(*this, c) + ")");
                }
            }
        }
    }
}

Interval interval(const Pretree& p, ElementId a, ElementId b, IntervalKind kind) {
    Interval out{a, b, kind, {}};
    std::vector<ElementId> closed;
    if (a == b) {
        (void)p.element(a);
        closed.push_back(a);
    } else {
        for (auto x : p.ids()) {
            if (p.in_closed(x, a, b)) closed.push_back(x);
        }
        // Natural order: X ≤ Y iff X ∈ [A, Y]; the rank of X counts its predecessors.
        std::vector<std::size_t> rank(closed.size(), 0);
        for (std::size_t i = 0; i < closed.size(); ++i) {
            for (std::size_t j = 0; j < closed.size(); ++j) {
                if (i != j && p.in_closed(closed[j], a, closed[i])) ++rank[i];
            }
        }
        std::vector<ElementId> ordered(closed.size(), ElementId{p.size()});
        for (std::size_t i = 0; i < closed.size(); ++i) {
            if (rank[i] >= ordered.size() || ordered[rank[i]].index != p.size()) {
                throw ConsistencyError("interval [" + label(p, a) + ", " + label(p, b) + "] is not totally ordered");
            }
            ordered[rank[i]] = closed[i];
        }
        for (std::size_t i = 0; i < ordered.size(); ++i) {
            for (std::size_t j = i + 1; j < ordered.size(); ++j) {
                if (!p.in_closed(ordered[i], a, ordered[j]) || p.in_closed(ordered[j], a, ordered[i])) {
                    throw ConsistencyError("interval [" + label(p, a) + ", " + label(p, b) +
                                           "] has no consistent natural order");
                }
            }
        }
        if (ordered.front() != a || ordered.back() != b) {
            throw ConsistencyError("interval [" + label(p, a) + ", " + label(p, b) + "] has misplaced endpoints");
        }
        closed = std::move(ordered);
    }
    for (auto x : closed) {
        const bool is_from = x == a;
        const bool is_to = x == b;
        switch (kind) {
            case IntervalKind::closed: out.members.push_back(x); break;
            case IntervalKind::open:
                if (!is_from && !is_to) out.members.push_back(x);
                break;
            case IntervalKind::half_open:
                if (is_from || !is_to) out.members.push_back(x);
                break;
        }
    }
    return out;
}

PretreeAxiomReport verify_pretree_axioms(const Pretree& p, std::size_t witnesses_per_axiom) {
    PretreeAxiomReport report;
    const auto record = [&](int axiom, std::vector<ElementId> witness) {
        auto& count = report.counts[static_cast<std::size_t>(axiom - 1)];
        if (count++ < witnesses_per_axiom) report.violations.push_back({axiom, std::move(witness)});
    };
    const auto ids = p.ids();
    for (auto x : ids) {
        for (auto b : ids) {
            if (p.between(x, b, b)) record(1, {x, b});
        }
    }
    for (auto x : ids) {
        for (auto a : ids) {
            for (auto b : ids) {
                if (a < b && p.between(x, a, b) != p.between(x, b, a)) record(2, {x, a, b});
            }
        }
    }
    for (auto a : ids) {
        for (auto b : ids) {
            for (auto c : ids) {
                if (p.between(a, b, c) && p.between(b, a, c)) record(3, {a, b, c});
            }
        }
    }
    for (auto a : ids) {
        for (auto c : ids) {
            for (auto d : ids) {
                if (!p.between(d, a, c)) continue;
                for (auto b : ids) {
                    // (A, B] ∪ [B, C)
                    const bool covered = d == b || p.between(d, a, b) || p.between(d, b, c);
                    if (!covered) record(4, {a, b, c, d});
                }
            }
        }
    }
    return report;
}

bool adjacent(const Pretree& p, ElementId a, ElementId b) {
    if (a == b) throw InputError("adjacency needs two distinct elements");
    for (auto x : p.ids()) {
        if (p.between(x, a, b)) return false;
    }
    return true;
}

ElementId median(const Pretree& p, ElementId a, ElementId b, ElementId c) {
    std::vector<ElementId> hits;
    for (auto x : p.ids()) {
        if (p.in_closed(x, a, b) && p.in_closed(x, b, c) && p.in_closed(x, a, c)) hits.push_back(x);
    }
    if (hits.size() != 1) {
        throw ConsistencyError("median of " + label(p, a) + ", " + label(p, b) + ", " + label(p, c) + " has " +
                               std::to_string(hits.size()) + " elements");
    }
    return hits.front();
}

ElementId supremum(const Interval& iv, const std::vector<ElementId>& subset) {
    if (subset.empty()) throw InputError("supremum of an empty subset");
    std::size_t best = 0;
    for (auto s : subset) {
        auto it = std::find(iv.members.begin(), iv.members.end(), s);
        if (it == iv.members.end()) throw InputError("supremum subset leaves the interval");
        best = std::max(best, static_cast<std::size_t>(it - iv.members.begin()));
    }
    return iv.members[best];
}

namespace {

// Natural order of a linearly ordered subset, or nullopt.
std::optional<std::vector<ElementId>> natural_order(const Pretree& p, const std::vector<ElementId>& chain) {
    if (chain.size() <= 2) return chain;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        for (std::size_t j = i + 1; j < chain.size(); ++j) {
            const bool spans = std::all_of(chain.begin(), chain.end(),
                                           [&](ElementId x) { return p.in_closed(x, chain[i], chain[j]); });
            if (!spans) continue;
            const auto hull = interval(p, chain[i], chain[j]);
            std::vector<ElementId> ordered;
            for (auto x : hull.members) {
                if (std::find(chain.begin(), chain.end(), x) != chain.end()) ordered.push_back(x);
            }
            // Intervals of the induced order must match the pretree's.
            for (std::size_t lo = 0; lo < ordered.size(); ++lo) {
                for (std::size_t hi = lo + 1; hi < ordered.size(); ++hi) {
                    for (std::size_t m = 0; m < ordered.size(); ++m) {
                        const bool inside = lo < m && m < hi;
                        if (p.between(ordered[m], ordered[lo], ordered[hi]) != inside) return std::nullopt;
                    }
                }
            }
            return ordered;
        }
    }
    return std::nullopt;
}

}  // namespace

PreseparabilityWitness preseparability_witness(const Pretree& p, const std::vector<ElementId>& chain) {
    for (std::size_t i = 0; i < chain.size(); ++i) {
        (void)p.element(chain[i]);
        if (std::find(chain.begin() + static_cast<std::ptrdiff_t>(i) + 1, chain.end(), chain[i]) != chain.end()) {
            throw InputError("chain repeats " + label(p, chain[i]));
        }
    }
    auto ordered = natural_order(p, chain);
    if (!ordered) throw InputError("chain is not linearly ordered");

    PreseparabilityWitness out;
    out.chain = std::move(*ordered);
    if (out.chain.empty()) return out;
    for (auto x : interval(p, out.chain.front(), out.chain.back()).members) {
        if (p.is_cut(x)) out.countable_set.push_back(x);
    }
    for (std::size_t i = 0; i < out.chain.size(); ++i) {
        for (std::size_t j = i + 1; j < out.chain.size(); ++j) {
            const auto a = out.chain[i];
            const auto b = out.chain[j];
            const bool met = std::any_of(out.countable_set.begin(), out.countable_set.end(),
                                         [&](ElementId q) { return p.in_closed(q, a, b); });
            if (!met) {
                throw ConsistencyError("no cut of the chain hull lies in [" + label(p, a) + ", " + label(p, b) + "]");
            }
            ++out.pairs_checked;
        }
    }
    return out;
}

}  // namespace septree
