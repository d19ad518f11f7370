#include "septree/actions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "septree/errors.hpp"

namespace septree {

VertexSet Automorphism::operator()(const VertexSet& s) const {
    std::vector<Vertex> out;
    out.reserve(s.size());
    for (Vertex v : s) out.push_back(image_.at(v));
    return VertexSet(std::move(out));
}

namespace {

bool preserves_structure(const CutSystem& cs, const std::vector<Vertex>& image) {
    const Space& z = cs.space();
    for (const auto& [u, v] : z.edges()) {
        if (!z.adjacent(image[u], image[v])) return false;
    }
    for (const auto& c : cs.cuts()) {
        std::vector<Vertex> mapped;
        for (Vertex v : c) mapped.push_back(image[v]);
        if (!cs.index_of(VertexSet(std::move(mapped)))) return false;
    }
    return true;
}

}  // namespace

Automorphism Automorphism::create(const CutSystem& cs, std::vector<Vertex> image) {
    const auto n = cs.space().vertex_count();
    if (image.size() != n) throw InputError("permutation must map every vertex");
    std::vector<Vertex> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i) {
        if (sorted[i] != i) throw InputError("vertex map is not a permutation");
    }
    // Edge and cut counts are finite, so injective preservation is enough for bijectivity.
    if (!preserves_structure(cs, image)) {
        throw InputError("vertex permutation does not preserve the edges and the cut family");
    }
    return Automorphism(std::move(image));
}

Automorphism Automorphism::from_names(const CutSystem& cs, const std::map<std::string, std::string>& mapping) {
    const Space& z = cs.space();
    std::vector<Vertex> image(z.vertex_count());
    std::iota(image.begin(), image.end(), Vertex{0});
    for (const auto& [from, to] : mapping) image[z.vertex(from)] = z.vertex(to);
    return create(cs, std::move(image));
}

Automorphism Automorphism::identity(const CutSystem& cs) {
    std::vector<Vertex> image(cs.space().vertex_count());
    std::iota(image.begin(), image.end(), Vertex{0});
    return Automorphism(std::move(image));
}

Automorphism compose(const Automorphism& g, const Automorphism& h) {
    std::vector<Vertex> image(h.image_.size());
    for (std::size_t v = 0; v < image.size(); ++v) image[v] = g.image_.at(h.image_[v]);
    return Automorphism(std::move(image));
}

std::vector<Automorphism> enumerate_automorphisms(const CutSystem& cs, std::size_t max_vertices) {
    const auto n = cs.space().vertex_count();
    if (n > max_vertices) {
        throw PreconditionError("brute-force automorphism search is limited to " + std::to_string(max_vertices) +
                                " vertices");
    }
    std::vector<Vertex> image(n);
    std::iota(image.begin(), image.end(), Vertex{0});
    std::vector<Automorphism> out;
    do {
        if (preserves_structure(cs, image)) out.push_back(Automorphism::create(cs, image));
    } while (std::next_permutation(image.begin(), image.end()));
    return out;
}

ElementPermutation induce(const Pretree& p, const Automorphism& g) {
    ElementPermutation out;
    out.reserve(p.size());
    std::set<std::size_t> hit;
    for (auto id : p.ids()) {
        const auto& e = p.element(id);
        auto target = p.find(g(e.support));
        if (!target || p.element(*target).kind != e.kind) {
            throw ConsistencyError("automorphism image of {" + p.space().format(e.support) +
                                   "} is not an element of the same kind");
        }
        hit.insert(target->index);
        out.push_back(*target);
    }
    if (hit.size() != p.size()) throw ConsistencyError("induced element map is not a bijection");
    return out;
}

EquivarianceReport verify_equivariance(const Pretree& p, const Automorphism& g) {
    return verify_equivariance(p, realize(p), g);
}

EquivarianceReport verify_equivariance(const Pretree& p, const SimplicialTree& t, const Automorphism& g) {
    EquivarianceReport report;
    const auto map = induce(p, g);
    for (auto x : p.ids()) {
        for (auto b : p.ids()) {
            for (auto c : p.ids()) {
                if (p.between(x, b, c) != p.between(map[x.index], map[b.index], map[c.index])) {
                    report.betweenness_violations.push_back({x, b, c});
                }
            }
        }
    }
    std::set<std::pair<std::size_t, std::size_t>> edges(t.edges().begin(), t.edges().end());
    for (const auto& [i, j] : t.edges()) {
        auto gi = map[i].index;
        auto gj = map[j].index;
        if (!edges.contains(std::minmax(gi, gj))) report.edge_violations.emplace_back(i, j);
    }
    return report;
}

}  // namespace septree
