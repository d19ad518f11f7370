#pragma once

#include <string>
#include <vector>

#include "septree/fixtures.hpp"
#include "septree/io.hpp"
#include "septree/pretree.hpp"

namespace septree::test {

inline Space graph(const std::string& edge_list) { return parse_graph(edge_list); }

inline VertexSet set(const Space& z, std::vector<std::string> names) { return z.set_of(names); }

inline const std::vector<Fixture>& corpus() {
    static const auto fixtures = load_fixtures(SEPTREE_FIXTURE_DIR);
    return fixtures;
}

inline const Fixture& fixture(const std::string& name) {
    for (const auto& f : corpus()) {
        if (f.name == name) return f;
    }
    throw std::runtime_error("no fixture " + name);
}

inline Pretree pretree_of(const Fixture& f, bool checked = true) {
    return Pretree::build(CutSystem::create(f.space, f.cuts), PretreeOptions{.checked = checked});
}

inline ElementId id(const Pretree& p, std::vector<std::string> support) {
    return p.id_of(p.space().set_of(support));
}

}  // namespace septree::test
