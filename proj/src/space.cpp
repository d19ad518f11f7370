#include "septree/space.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <queue>
#include <set>

#include "septree/errors.hpp"

namespace septree {

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet::VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

bool VertexSet::contains(Vertex v) const noexcept {
    return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
    auto a = members_.begin();
    auto b = other.members_.begin();
    while (a != members_.end() && b != other.members_.end()) {
        if (*a == *b) return true;
        if (*a < *b) ++a;
        else ++b;
    }
    return false;
}

VertexSet VertexSet::united(const VertexSet& other) const {
    VertexSet out;
    std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                   std::back_inserter(out.members_));
    return out;
}

VertexSet VertexSet::intersected(const VertexSet& other) const {
    VertexSet out;
    std::set_intersection(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                          std::back_inserter(out.members_));
    return out;
}

VertexSet VertexSet::minus(const VertexSet& other) const {
    VertexSet out;
    std::set_difference(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                        std::back_inserter(out.members_));
    return out;
}

std::size_t VertexSetHash::operator()(const VertexSet& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Vertex v : s) {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

Space::Space(std::vector<std::string> vertex_names,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(std::move(vertex_names)) {
    std::sort(names_.begin(), names_.end());
    if (auto dup = std::adjacent_find(names_.begin(), names_.end()); dup != names_.end()) {
        throw InputError("duplicate vertex '" + *dup + "'");
    }
    if (names_.size() < 2) {
        throw InputError("a space needs at least two vertices");
    }
    adjacency_.resize(names_.size());
    std::set<std::pair<Vertex, Vertex>> seen;
    for (const auto& [u_name, v_name] : edges) {
        auto u = find(u_name);
        auto v = find(v_name);
        if (!u || !v) {
            throw InputError("edge {" + u_name + ", " + v_name + "} references an unknown vertex");
        }
        if (*u == *v) {
            throw InputError("self-loop at '" + u_name + "'");
        }
        auto key = std::minmax(*u, *v);
        if (!seen.insert(key).second) {
            throw InputError("duplicate edge {" + u_name + ", " + v_name + "}");
        }
        adjacency_[*u].push_back(*v);
        adjacency_[*v].push_back(*u);
    }
    edges_.assign(seen.begin(), seen.end());
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());

    if (label_components(*this, {}).count != 1) {
        throw InputError("the graph is not connected");
    }
}

bool Space::adjacent(Vertex u, Vertex v) const {
    const auto& nbrs = adjacency_.at(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::optional<Vertex> Space::find(std::string_view name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return std::nullopt;
    return static_cast<Vertex>(it - names_.begin());
}

Vertex Space::vertex(std::string_view name) const {
    if (auto v = find(name)) return *v;
    throw InputError("unknown vertex '" + std::string(name) + "'");
}

VertexSet Space::set_of(const std::vector<std::string>& names) const {
    std::vector<Vertex> members;
    members.reserve(names.size());
    for (const auto& n : names) members.push_back(vertex(n));
    return VertexSet(std::move(members));
}

VertexSet Space::all() const {
    std::vector<Vertex> members(names_.size());
    for (std::size_t i = 0; i < members.size(); ++i) members[i] = static_cast<Vertex>(i);
    return VertexSet(std::move(members));
}

void Space::check_subset(const VertexSet& s) const {
    if (!s.empty() && s.members().back() >= names_.size()) {
        throw InputError("vertex index " + std::to_string(s.members().back()) + " is outside the space");
    }
}

std::string Space::format(const VertexSet& s) const {
    std::string out;
    for (Vertex v : s) {
        if (!out.empty()) out += ',';
        out += name(v);
    }
    return out;
}

ComponentLabels label_components(const Space& space, const VertexSet& removed) {
    space.check_subset(removed);
    const auto n = space.vertex_count();
    ComponentLabels out;
    out.label.assign(n, -2);
    for (Vertex v : removed) out.label[v] = -1;
    std::queue<Vertex> frontier;
    for (Vertex start = 0; start < n; ++start) {
        if (out.label[start] != -2) continue;
        const int id = out.count++;
        out.label[start] = id;
        frontier.push(start);
        while (!frontier.empty()) {
            Vertex u = frontier.front();
            frontier.pop();
            for (Vertex w : space.neighbors(u)) {
                if (out.label[w] == -2) {
                    out.label[w] = id;
                    frontier.push(w);
                }
            }
        }
    }
    return out;
}

std::vector<VertexSet> induced_components(const Space& space, const VertexSet& within) {
    return components(space, space.all().minus(within));
}

std::vector<VertexSet> components(const Space& space, const VertexSet& removed) {
    auto labels = label_components(space, removed);
    std::vector<std::vector<Vertex>> groups(labels.count);
    for (Vertex v = 0; v < labels.label.size(); ++v) {
        if (labels.label[v] >= 0) groups[labels.label[v]].push_back(v);
    }
    std::vector<VertexSet> out;
    out.reserve(groups.size());
    for (auto& g : groups) out.emplace_back(std::move(g));
    return out;
}

bool separates(const Space& space, const VertexSet& a) {
    return label_components(space, a).count >= 2;
}

bool separates_set(const ComponentLabels& labels, const VertexSet& p) {
    int seen = -1;
    for (Vertex v : p) {
        const int l = labels.label[v];
        if (l < 0) continue;
        if (seen < 0) seen = l;
        else if (l != seen) return true;
    }
    return false;
}

bool separates_set(const Space& space, const VertexSet& a, const VertexSet& p) {
    space.check_subset(p);
    return separates_set(label_components(space, a), p);
}

bool separates_from(const ComponentLabels& labels, const VertexSet& b, const VertexSet& c) {
    // Some pair differs unless both sides are nonempty and sit in one common component.
    int b_label = -1;
    bool b_multi = false;
    for (Vertex v : b) {
        const int l = labels.label[v];
        if (l < 0) continue;
        if (b_label < 0) b_label = l;
        else if (l != b_label) b_multi = true;
    }
    if (b_label < 0) return false;
    for (Vertex v : c) {
        const int l = labels.label[v];
        if (l < 0) continue;
        if (b_multi || l != b_label) return true;
    }
    return false;
}

bool separates_from(const Space& space, const VertexSet& a, const VertexSet& b, const VertexSet& c) {
    space.check_subset(b);
    space.check_subset(c);
    return separates_from(label_components(space, a), b, c);
}

Separation::Separation(const Space& space, VertexSet removed, VertexSet side_u, VertexSet side_v)
    : removed_(std::move(removed)), side_u_(std::move(side_u)), side_v_(std::move(side_v)) {
    space.check_subset(removed_);
    space.check_subset(side_u_);
    space.check_subset(side_v_);
    if (side_u_.empty() || side_v_.empty()) {
        throw PreconditionError("separation sides must be nonempty");
    }
    if (side_u_.intersects(side_v_) || side_u_.intersects(removed_) || side_v_.intersects(removed_)) {
        throw PreconditionError("separation sides must be disjoint from each other and from the removed set");
    }
    if (side_u_.size() + side_v_.size() + removed_.size() != space.vertex_count()) {
        throw PreconditionError("separation sides must cover the complement of the removed set");
    }
    for (const auto& [u, v] : space.edges()) {
        if ((side_u_.contains(u) && side_v_.contains(v)) || (side_u_.contains(v) && side_v_.contains(u))) {
            throw PreconditionError("edge {" + space.name(u) + ", " + space.name(v) + "} crosses the separation");
        }
    }
}

Separation refine_separations(const Space& space, const Separation& s1, const Separation& s2) {
    if (s1.removed() != s2.removed()) {
        throw PreconditionError("separations of different removed sets cannot be refined");
    }
    VertexSet u = s1.side_u().intersected(s2.side_u());
    if (u.empty()) {
        throw PreconditionError("refinement needs U1 ∩ U2 to be nonempty");
    }
    return Separation(space, s1.removed(), std::move(u), s1.side_v().united(s2.side_v()));
}

std::optional<Separation> separation_between(const Space& space, const VertexSet& a, const VertexSet& b,
                                             const VertexSet& c) {
    auto labels = label_components(space, a);
    if (!separates_from(labels, b, c)) return std::nullopt;
    std::vector<char> on_u(labels.count, 0);
    for (Vertex v : b) {
        if (labels.label[v] >= 0) on_u[labels.label[v]] = 1;
    }
    for (Vertex v : c) {
        if (labels.label[v] >= 0 && on_u[labels.label[v]]) return std::nullopt;
    }
    std::vector<Vertex> u;
    std::vector<Vertex> w;
    for (Vertex v = 0; v < labels.label.size(); ++v) {
        if (labels.label[v] < 0) continue;
        (on_u[labels.label[v]] ? u : w).push_back(v);
    }
    return Separation(space, a, VertexSet(std::move(u)), VertexSet(std::move(w)));
}

}  // namespace septree
