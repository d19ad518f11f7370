#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "septree/errors.hpp"
#include "support.hpp"

using namespace septree;
using septree::test::graph;
using septree::test::set;

namespace {

// Re-checks a witness straight against the oracle components.
void check_witness(const Space& z, const AxiomReport& r) {
    if (r.condition1) CHECK_FALSE(oracle::separates_set(z, oracle::mask_of(r.condition1->cut), oracle::mask_of(z.all())));
    if (r.condition2) {
        const auto& w = *r.condition2;
        CHECK(w.separated.contains(w.x));
        CHECK(w.separated.contains(w.y));
        CHECK_FALSE(w.separator.contains(w.x));
        CHECK_FALSE(w.separator.contains(w.y));
        auto rep = oracle::union_find_components(z, oracle::mask_of(w.separator));
        CHECK(rep[w.x] != rep[w.y]);
    }
    if (r.condition3) {
        const auto& w = *r.condition3;
        CHECK(w.first != w.second);
        auto rep = oracle::union_find_components(z, oracle::mask_of(w.first.intersected(w.second)));
        CHECK(rep[w.x] >= 0);
        CHECK(rep[w.y] >= 0);
        CHECK(rep[w.x] != rep[w.y]);
    }
}

// Direct evaluation of the three conditions on bitmasks.
std::vector<int> oracle_failing(const Space& z, const std::vector<VertexSet>& cuts) {
    const auto full = oracle::mask_of(z.all());
    std::vector<int> out;
    bool c1 = true, c2 = true, c3 = true;
    for (const auto& a : cuts) {
        if (!oracle::separates_set(z, oracle::mask_of(a), full)) c1 = false;
        for (const auto& b : cuts) {
            if (oracle::separates_set(z, oracle::mask_of(a), oracle::mask_of(b))) c2 = false;
            if (a != b && oracle::separates_set(z, oracle::mask_of(a) & oracle::mask_of(b), full)) c3 = false;
        }
    }
    if (!c1) out.push_back(1);
    if (!c2) out.push_back(2);
    if (!c3) out.push_back(3);
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("cut_system");

TEST_CASE("validate examples") {
    auto path = graph("a b\nb c\n");
    CHECK(validate(path, {set(path, {"b"})}).all_pass());

    auto r1 = validate(path, {set(path, {"a"})});
    CHECK(r1.failing() == std::vector<int>{1});
    REQUIRE(r1.condition1);
    CHECK(r1.condition1->cut == set(path, {"a"}));

    auto empty = validate(path, {});
    CHECK(empty.all_pass());
    CHECK(empty.empty_family);

    auto cycle = graph("1 2\n2 3\n3 4\n4 1\n");
    auto r2 = validate(cycle, {set(cycle, {"1", "3"}), set(cycle, {"2", "4"})});
    CHECK(r2.failing() == std::vector<int>{2});
    check_witness(cycle, r2);
}

TEST_CASE("canonical_cuts rejects malformed families") {
    auto path = graph("a b\nb c\n");
    CHECK_THROWS_AS((void)canonical_cuts(path, {VertexSet{}}), InputError);
    CHECK_THROWS_AS((void)canonical_cuts(path, {path.all()}), InputError);
    CHECK_THROWS_AS((void)canonical_cuts(path, {set(path, {"b"}), set(path, {"b"})}), InputError);
    CHECK_THROWS_AS((void)canonical_cuts(path, {VertexSet{5}}), InputError);
    CHECK(canonical_cuts(path, {set(path, {"c"}), set(path, {"b"})}) ==
          std::vector<VertexSet>{set(path, {"b"}), set(path, {"c"})});
}

TEST_CASE("CutSystem::create throws with the report attached") {
    const auto& f = test::fixture("corners");
    try {
        (void)CutSystem::create(f.space, f.cuts);
        FAIL("expected AxiomError");
    } catch (const AxiomError& e) {
        CHECK(e.report().failing() == std::vector<int>{3});
    }
    auto cs = CutSystem::assume_valid(f.space, f.cuts);
    CHECK(cs.cuts().size() == 2);
    CHECK(cs.index_of(f.cuts[0]).has_value());
    CHECK(cs.cut_union() == f.cuts[0].united(f.cuts[1]));
}

TEST_CASE("fixture verdicts agree with the condition oracle and witnesses re-verify") {
    for (const auto& f : test::corpus()) {
        CAPTURE(f.name);
        auto report = validate(f.space, f.cuts);
        CHECK(report.all_pass() == f.expect.valid);
        CHECK(report.failing() == oracle_failing(f.space, f.cuts));
        if (!f.expect.valid) CHECK(report.failing() == f.expect.failing);
        check_witness(f.space, report);
    }
}

TEST_CASE("verdict does not depend on input order") {
    std::mt19937_64 rng(7);
    for (const auto& f : test::corpus()) {
        auto cuts = f.cuts;
        const auto base = validate(f.space, cuts);
        for (int i = 0; i < 5; ++i) {
            std::shuffle(cuts.begin(), cuts.end(), rng);
            auto again = validate(f.space, cuts);
            CHECK(again.failing() == base.failing());
            CHECK(describe(f.space, again) == describe(f.space, base));
        }
    }
}

TEST_CASE("articulation_cuts matches the low-link oracle") {
    auto path = graph("a b\nb c\nc d\n");
    CHECK(articulation_cuts(path) == std::vector<VertexSet>{set(path, {"b"}), set(path, {"c"})});
    auto k4 = graph("a b\na c\na d\nb c\nb d\nc d\n");
    CHECK(articulation_cuts(k4).empty());
    const auto& tri = test::fixture("triangles").space;
    CHECK(articulation_cuts(tri) == std::vector<VertexSet>{set(tri, {"v"})});

    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        auto z = random_connected_graph(rng, 2 + rng() % 14, 0.2);
        std::vector<VertexSet> want;
        for (Vertex v : oracle::articulation_points(z)) want.push_back(VertexSet{v});
        CHECK(articulation_cuts(z) == want);
        CHECK(validate(z, want).all_pass());
    }
}

TEST_CASE("filter_admissible") {
    auto cycle = graph("1 2\n2 3\n3 4\n4 1\n");
    auto kept = filter_admissible(cycle, {set(cycle, {"1", "3"}), set(cycle, {"2", "4"})});
    CHECK(kept == std::vector<VertexSet>{set(cycle, {"1", "3"})});

    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        auto z = random_connected_graph(rng, 4 + rng() % 8, 0.25);
        auto family = random_cut_family(z, rng, 30, 3);
        CHECK(validate(z, family).all_pass());
    }
}

TEST_CASE("describe lists each condition") {
    const auto& f = test::fixture("cycle4_double");
    auto text = describe(f.space, validate(f.space, f.cuts));
    CHECK(text.find("condition 1: pass") != std::string::npos);
    CHECK(text.find("condition 2: fail") != std::string::npos);
    CHECK(text.find("condition 3: pass") != std::string::npos);
    auto path = graph("a b\nb c\n");
    CHECK(describe(path, validate(path, {})).find("warning: empty cut family") != std::string::npos);
}

TEST_SUITE_END();
