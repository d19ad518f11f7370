#include <doctest.h>

#include <random>

#include "properties.hpp"
#include "septree/errors.hpp"
#include "support.hpp"

using namespace septree;
using septree::test::id;

namespace {

std::vector<const Fixture*> valid_fixtures(std::size_t max_elements = 1000) {
    std::vector<const Fixture*> out;
    for (const auto& f : test::corpus()) {
        if (!f.expect.valid) continue;
        if (f.expect.elements && *f.expect.elements > max_elements) continue;
        out.push_back(&f);
    }
    return out;
}

void require_ok(const props::Tally& t) {
    INFO(t.first);
    CHECK(t.failed == 0);
}

}  // namespace

TEST_SUITE_BEGIN("pretree");

TEST_CASE("between examples") {
    auto p3 = test::pretree_of(test::fixture("path3"));
    const auto b = id(p3, {"b"});
    const auto ab = id(p3, {"a", "b"});
    const auto bc = id(p3, {"b", "c"});
    CHECK(p3.between(b, ab, bc));
    CHECK_FALSE(p3.between(ab, b, bc));
    for (auto x : p3.ids()) CHECK_FALSE(p3.between(x, ab, ab));

    auto p5 = test::pretree_of(test::fixture("path5"));
    CHECK(p5.between(id(p5, {"b", "c"}), id(p5, {"a", "b"}), id(p5, {"c", "d"})));
    CHECK_THROWS_AS((void)p5.between(ElementId{99}, ElementId{0}, ElementId{1}), InputError);
    CHECK_THROWS_AS((void)p5.id_of(p5.space().set_of({"a", "e"})), InputError);
}

TEST_CASE("cache agrees with the definition") {
    for (const auto* f : valid_fixtures()) {
        CAPTURE(f->name);
        auto p = test::pretree_of(*f, false);
        CHECK_NOTHROW(p.verify_cache());
        for (auto x : p.ids()) {
            for (auto b : p.ids()) {
                for (auto c : p.ids()) REQUIRE(p.between(x, b, c) == p.between_from_definition(x, b, c));
            }
        }
    }
}

TEST_CASE("interval examples") {
    auto p3 = test::pretree_of(test::fixture("path3"));
    const auto ab = id(p3, {"a", "b"});
    const auto bc = id(p3, {"b", "c"});
    CHECK(interval(p3, ab, ab).members == std::vector<ElementId>{ab});
    CHECK(interval(p3, ab, bc).members == std::vector<ElementId>{ab, id(p3, {"b"}), bc});
    CHECK(interval(p3, ab, bc, IntervalKind::open).members == std::vector<ElementId>{id(p3, {"b"})});
    CHECK(interval(p3, ab, bc, IntervalKind::half_open).members == std::vector<ElementId>{ab, id(p3, {"b"})});

    auto p5 = test::pretree_of(test::fixture("path5"));
    auto iv = interval(p5, id(p5, {"a", "b"}), id(p5, {"d", "e"}));
    REQUIRE(iv.members.size() == 7);
    const std::vector<std::vector<std::string>> want{{"a", "b"}, {"b"}, {"b", "c"}, {"c"}, {"c", "d"}, {"d"}, {"d", "e"}};
    for (std::size_t i = 0; i < want.size(); ++i) {
        CHECK(iv.members[i] == id(p5, want[i]));
        CHECK(p5.is_cut(iv.members[i]) == (i % 2 == 1));
        if (i > 0) CHECK(adjacent(p5, iv.members[i - 1], iv.members[i]));
    }
}

TEST_CASE("axioms hold on every admissible fixture") {
    for (const auto* f : valid_fixtures()) {
        CAPTURE(f->name);
        require_ok(props::axioms(test::pretree_of(*f, false)));
    }
    auto k4 = test::pretree_of(test::fixture("k4"));
    CHECK(k4.size() == 1);
    CHECK(verify_pretree_axioms(k4).ok());
}

TEST_CASE("forcing the corners family produces an axiom 4 violation") {
    const auto& f = test::fixture("corners");
    auto p = Pretree::build(CutSystem::assume_valid(f.space, f.cuts));
    auto report = verify_pretree_axioms(p);
    CHECK(report.count(4) > 0);
    REQUIRE_FALSE(report.violations.empty());
    for (const auto& v : report.violations) {
        if (v.axiom != 4) continue;
        const auto a = v.witness[0], b = v.witness[1], c = v.witness[2], d = v.witness[3];
        CHECK(p.between_from_definition(d, a, c));
        CHECK(d != b);
        CHECK_FALSE(p.between_from_definition(d, a, b));
        CHECK_FALSE(p.between_from_definition(d, b, c));
    }
    CHECK_THROWS_AS(Pretree::build(CutSystem::assume_valid(f.space, f.cuts), PretreeOptions{.checked = true}),
                    ConsistencyError);
}

TEST_CASE("adjacent") {
    auto p3 = test::pretree_of(test::fixture("path3"));
    const auto b = id(p3, {"b"});
    const auto ab = id(p3, {"a", "b"});
    CHECK(adjacent(p3, b, ab));
    CHECK(p3.element(b).support.is_subset_of(p3.element(ab).support));
    CHECK_THROWS_AS((void)adjacent(p3, b, b), InputError);

    auto pc = test::pretree_of(test::fixture("corners_single"));
    std::vector<ElementId> blobs;
    for (auto x : pc.ids()) {
        if (!pc.is_cut(x)) blobs.push_back(x);
    }
    REQUIRE(blobs.size() == 3);
    for (std::size_t i = 0; i < blobs.size(); ++i) {
        for (std::size_t j = i + 1; j < blobs.size(); ++j) CHECK_FALSE(adjacent(pc, blobs[i], blobs[j]));
    }
}

TEST_CASE("median examples") {
    auto star = test::pretree_of(test::fixture("star"));
    const auto v = id(star, {"v"});
    const auto vx = id(star, {"v", "x"});
    const auto vy = id(star, {"v", "y"});
    const auto vz = id(star, {"v", "z"});
    CHECK(median(star, vx, vy, vz) == v);
    CHECK(median(star, vx, vx, vy) == vx);

    auto p5 = test::pretree_of(test::fixture("path5"));
    CHECK(median(p5, id(p5, {"a", "b"}), id(p5, {"b", "c"}), id(p5, {"d", "e"})) == id(p5, {"b", "c"}));
}

TEST_CASE("median suite") {
    for (const auto* f : valid_fixtures(25)) {
        CAPTURE(f->name);
        require_ok(props::medians(test::pretree_of(*f, false)));
    }
}

TEST_CASE("median fails loudly on a forced non-admissible family") {
    const auto& f = test::fixture("corners");
    auto p = Pretree::build(CutSystem::assume_valid(f.space, f.cuts));
    bool threw = false;
    for (auto a : p.ids()) {
        for (auto b : p.ids()) {
            for (auto c : p.ids()) {
                try {
                    (void)median(p, a, b, c);
                } catch (const ConsistencyError&) {
                    threw = true;
                }
            }
        }
    }
    CHECK(threw);
}

TEST_CASE("supremum") {
    auto p5 = test::pretree_of(test::fixture("path5"));
    auto iv = interval(p5, id(p5, {"a", "b"}), id(p5, {"d", "e"}));
    CHECK(supremum(iv, {iv.members[0]}) == iv.members[0]);
    CHECK(supremum(iv, {id(p5, {"a", "b"}), id(p5, {"b", "c"})}) == id(p5, {"b", "c"}));
    CHECK(supremum(iv, iv.members) == id(p5, {"d", "e"}));
    CHECK_THROWS_AS((void)supremum(iv, {}), InputError);

    // Sort-and-scan oracle on every nonempty subset.
    const auto n = iv.members.size();
    for (unsigned mask = 1; mask < (1U << n); ++mask) {
        std::vector<ElementId> subset;
        std::size_t last = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if ((mask >> i) & 1U) {
                subset.push_back(iv.members[i]);
                last = i;
            }
        }
        std::reverse(subset.begin(), subset.end());
        CHECK(supremum(iv, subset) == iv.members[last]);
    }
}

TEST_CASE("preseparability") {
    auto p5 = test::pretree_of(test::fixture("path5"));
    auto iv = interval(p5, id(p5, {"a", "b"}), id(p5, {"d", "e"}));
    auto w = preseparability_witness(p5, iv.members);
    CHECK(w.countable_set == std::vector<ElementId>{id(p5, {"b"}), id(p5, {"c"}), id(p5, {"d"})});
    CHECK(w.pairs_checked == 21);
    CHECK(w.chain == iv.members);

    std::vector<ElementId> shuffled(iv.members.rbegin(), iv.members.rend());
    CHECK(preseparability_witness(p5, shuffled).chain.size() == 7);

    auto two = preseparability_witness(p5, {id(p5, {"a", "b"}), id(p5, {"c", "d"})});
    CHECK_FALSE(two.countable_set.empty());
    const auto common = p5.element(id(p5, {"a", "b"})).support.intersected(p5.element(id(p5, {"c", "d"})).support);
    for (auto q : two.countable_set) {
        CHECK(p5.is_cut(q));
        CHECK(common.is_subset_of(p5.element(q).support));
    }

    auto single = preseparability_witness(p5, {id(p5, {"c"})});
    CHECK(single.countable_set.size() == 1);
    CHECK(single.pairs_checked == 0);

    auto star = test::pretree_of(test::fixture("star"));
    CHECK_THROWS_AS((void)preseparability_witness(star, {id(star, {"v", "x"}), id(star, {"v", "y"}), id(star, {"v", "z"})}),
                    InputError);
}

TEST_CASE("preseparability holds on every maximal chain") {
    for (const auto* f : valid_fixtures(40)) {
        CAPTURE(f->name);
        auto p = test::pretree_of(*f, false);
        for (auto a : p.ids()) {
            for (auto b : p.ids()) {
                if (a >= b) continue;
                auto chain = interval(p, a, b).members;
                CHECK_NOTHROW((void)preseparability_witness(p, chain));
            }
        }
    }
}

TEST_CASE("order and separation properties on every admissible fixture") {
    for (const auto* f : valid_fixtures()) {
        CAPTURE(f->name);
        auto p = test::pretree_of(*f, false);
        if (p.size() <= 15) require_ok(props::bow(p));
        if (p.size() > 1) {
            require_ok(props::cutblob(p));
            require_ok(props::blob_separation(p));
        }
        if (!p.system().cuts().empty()) {
            require_ok(props::contain(p));
            require_ok(props::quasicomponents(p));
        }
        if (p.system().cuts().size() >= 2) require_ok(props::nesting(p));
        require_ok(props::cover_and_separation(p));
    }
}

TEST_CASE("properties hold for random admissible families") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 40; ++i) {
        auto z = random_connected_graph(rng, 4 + rng() % 7, 0.2);
        auto cuts = random_cut_family(z, rng, 25, 3);
        auto p = Pretree::build(CutSystem::create(z, cuts), PretreeOptions{.checked = true});
        CAPTURE(i);
        require_ok(props::axioms(p));
        require_ok(props::medians(p));
        require_ok(props::cover_and_separation(p));
        require_ok(props::realization(p));
        if (p.size() <= 12) require_ok(props::bow(p));
        if (!cuts.empty()) {
            require_ok(props::contain(p));
            require_ok(props::quasicomponents(p));
        }
    }
}

TEST_CASE("cut nodes have degree at least two") {
    // Measured across the corpus; the construction does not promise it.
    std::size_t cut_nodes = 0;
    std::size_t low_degree = 0;
    for (const auto* f : valid_fixtures()) {
        auto t = realize(test::pretree_of(*f, false));
        for (std::size_t i = 0; i < t.nodes().size(); ++i) {
            if (t.nodes()[i].kind != ElementKind::cut) continue;
            ++cut_nodes;
            if (t.degree(i) < 2) ++low_degree;
        }
    }
    MESSAGE("cut nodes: " << cut_nodes << ", with degree < 2: " << low_degree);
    CHECK(cut_nodes > 0);
}

TEST_CASE("element cache is bounded") {
    auto z = test::graph("a b\nb c\n");
    CHECK_THROWS_AS(Pretree::build(CutSystem::create(z, {z.set_of({"b"})}), PretreeOptions{.element_limit = 2}),
                    ResourceError);
}

TEST_SUITE_END();
