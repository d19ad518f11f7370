#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "properties.hpp"
#include "septree/errors.hpp"
#include "support.hpp"

using namespace septree;
using septree::test::graph;
using septree::test::set;

namespace {

std::vector<oracle::Mask> masks(const std::vector<VertexSet>& sets) {
    std::vector<oracle::Mask> out;
    for (const auto& s : sets) out.push_back(oracle::mask_of(s));
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("blobs");

TEST_CASE("inseparable pairs") {
    const auto& f = test::fixture("path3");
    auto cs = CutSystem::create(f.space, f.cuts);
    const auto& z = f.space;
    CHECK(inseparable(cs, z.vertex("a"), z.vertex("b")));
    CHECK_FALSE(inseparable(cs, z.vertex("a"), z.vertex("c")));
    CHECK(inseparable(cs, z.vertex("a"), z.vertex("a")));
    CHECK(is_inseparable_set(cs, set(z, {"a", "b"})));
    CHECK_FALSE(is_inseparable_set(cs, z.all()));
    CHECK(is_inseparable_set(cs, {}));
}

TEST_CASE("pairwise and setwise inseparability agree on every subset of small fixtures") {
    for (const auto& f : test::corpus()) {
        if (!f.expect.valid || f.space.vertex_count() > 10) continue;
        CAPTURE(f.name);
        auto cs = CutSystem::create(f.space, f.cuts);
        InseparabilityRelation rel(cs);
        const auto cut_masks = masks(cs.cuts());
        const auto n = f.space.vertex_count();
        for (oracle::Mask p = 0; p < (oracle::Mask{1} << n); ++p) {
            bool pairwise = true;
            for (Vertex x = 0; x < n && pairwise; ++x) {
                for (Vertex y = x + 1; y < n && pairwise; ++y) {
                    if (oracle::has(p, x) && oracle::has(p, y) && !rel.related(x, y)) pairwise = false;
                }
            }
            const bool setwise = oracle::inseparable_set(f.space, cut_masks, p);
            REQUIRE(pairwise == setwise);
            REQUIRE(is_inseparable_set(cs, oracle::set_of(p)) == setwise);
        }
    }
}

TEST_CASE("maximal inseparable sets match exhaustive enumeration") {
    for (const auto& f : test::corpus()) {
        if (!f.expect.valid || f.space.vertex_count() > 16) continue;
        CAPTURE(f.name);
        auto cs = CutSystem::create(f.space, f.cuts);
        auto got = masks(maximal_inseparable_sets(cs));
        auto want = oracle::maximal_inseparable_sets(f.space, masks(cs.cuts()));
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        CHECK(got == want);
    }
}

TEST_CASE("pretree_elements lists cuts first, then blobs, and matches the fixture record") {
    for (const auto& f : test::corpus()) {
        if (!f.expect.valid) continue;
        CAPTURE(f.name);
        auto cs = CutSystem::create(f.space, f.cuts);
        auto els = pretree_elements(cs);
        std::size_t blobs = 0;
        VertexSet cover;
        for (std::size_t i = 0; i < els.size(); ++i) {
            if (i < cs.cuts().size()) {
                CHECK(els[i].kind == ElementKind::cut);
                CHECK(els[i].support == cs.cuts()[i]);
            } else {
                CHECK(els[i].kind == ElementKind::blob);
                CHECK_FALSE(cs.index_of(els[i].support).has_value());
                if (i > cs.cuts().size()) CHECK(els[i - 1].support < els[i].support);
                ++blobs;
            }
            cover = cover.united(els[i].support);
        }
        CHECK(cover == f.space.all());
        auto want = oracle::elements(f.space, masks(cs.cuts()));
        CHECK(els.size() == want.size());
        if (f.expect.elements) CHECK(els.size() == *f.expect.elements);
        if (f.expect.blobs) CHECK(blobs == *f.expect.blobs);
    }
}

TEST_CASE("path3 elements") {
    const auto& f = test::fixture("path3");
    auto els = pretree_elements(CutSystem::create(f.space, f.cuts));
    const auto& z = f.space;
    REQUIRE(els.size() == 3);
    CHECK(els[0] == PretreeElement{ElementKind::cut, set(z, {"b"})});
    CHECK(els[1] == PretreeElement{ElementKind::blob, set(z, {"a", "b"})});
    CHECK(els[2] == PretreeElement{ElementKind::blob, set(z, {"b", "c"})});
}

TEST_CASE("empty family gives the whole space as one blob") {
    auto z = graph("a b\nb c\n");
    auto els = pretree_elements(CutSystem::create(z, {}));
    REQUIRE(els.size() == 1);
    CHECK(els[0] == PretreeElement{ElementKind::blob, z.all()});
}

TEST_CASE("element limit raises ResourceError") {
    const auto& f = test::fixture("long_path");
    auto cs = CutSystem::create(f.space, f.cuts);
    CHECK_THROWS_AS((void)maximal_inseparable_sets(cs, 5), ResourceError);
    CHECK_THROWS_AS((void)pretree_elements(cs, 10), ResourceError);
    CHECK(pretree_elements(cs, 39).size() == 39);
}

TEST_CASE("quotient classes sit inside exactly one maximal inseparable set") {
    for (const auto& f : test::corpus()) {
        if (!f.expect.valid) continue;
        CAPTURE(f.name);
        auto cs = CutSystem::create(f.space, f.cuts);
        auto maximal = maximal_inseparable_sets(cs);
        for (const auto& q : quotient_blobs(cs)) {
            CHECK_FALSE(q.intersects(cs.cut_union()));
            auto hits = std::count_if(maximal.begin(), maximal.end(), [&](const VertexSet& m) { return q.is_subset_of(m); });
            CHECK(hits == 1);
        }
    }
}

TEST_CASE("path4 union-of-cuts blob") {
    const auto& f = test::fixture("path4_union");
    auto cs = CutSystem::create(f.space, f.cuts);
    const auto& z = f.space;
    auto maximal = maximal_inseparable_sets(cs);
    CHECK(std::find(maximal.begin(), maximal.end(), set(z, {"b", "c"})) != maximal.end());
    CHECK(quotient_blobs(cs) == std::vector<VertexSet>{set(z, {"a"}), set(z, {"d"})});
}

TEST_CASE("blobs missing from the quotient are unions of cuts") {
    for (const auto& f : test::corpus()) {
        if (!f.expect.valid) continue;
        CAPTURE(f.name);
        std::size_t missing = 0;
        auto t = props::remark(CutSystem::create(f.space, f.cuts), &missing);
        INFO(t.first);
        CHECK(t.failed == 0);
        CHECK((missing > 0) == f.expect.has_union_of_cuts_blob);
    }
}

TEST_SUITE_END();
