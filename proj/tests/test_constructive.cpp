#include <lpack/constructive.hpp>
#include <lpack/errors.hpp>
#include <lpack/generators.hpp>

#include <doctest.h>

using namespace lpack;

TEST_CASE("reductions present in each regime")
{
    auto dodeca = find_reduction(make_dodecahedron(), Regime::girth5_k4);
    CHECK(dodeca.kind == ReductionKind::path_3_3_3);
    CHECK(dodeca.vertices.size() == 3);
    CHECK(dodeca.removed.size() == 1);
    CHECK(dodeca.repair.size() == 2);

    auto g = make_icosahedron();
    auto ico = find_reduction(g, Regime::planar_k8);
    CHECK(ico.kind == ReductionKind::light_triangle);
    REQUIRE(ico.vertices.size() == 3);
    int sum = 0;
    for (int v : ico.vertices)
        sum += g.degree(v);
    CHECK(sum == 15);

    auto path = find_reduction(make_path(5), Regime::mad4_k5);
    CHECK(path.kind == ReductionKind::low_degree_vertex);
    CHECK(make_path(5).degree(path.vertices.at(0)) <= 2);

    auto grid = find_reduction(make_grid(4, 5), Regime::mad4_k5);
    CHECK(grid.kind == ReductionKind::low_degree_vertex);

    // cubic, so the first rule misses and an edge between 3-vertices is light
    auto cubic = find_reduction(make_complete(4), Regime::mad4_k5);
    CHECK(cubic.kind == ReductionKind::light_edge);

    CHECK_THROWS_AS(find_reduction(make_complete(6), Regime::mad4_k5), ClassViolation);
    CHECK_THROWS_AS(find_reduction(make_complete(8), Regime::planar_k8), ClassViolation);
}

TEST_CASE("regime names")
{
    for (auto r : {Regime::mad4_k5, Regime::girth5_k4, Regime::planar_k8})
        CHECK(parse_regime(to_string(r)) == r);
    CHECK(regime_colours(Regime::mad4_k5) == 5);
    CHECK(regime_colours(Regime::girth5_k4) == 4);
    CHECK(regime_colours(Regime::planar_k8) == 8);
    CHECK_THROWS_AS(parse_regime("girth6"), InputError);
}

TEST_CASE("input and class errors")
{
    Rng rng = trial_rng(21, 0);
    CHECK_THROWS_AS(pack_constructive(random_cover(make_dodecahedron(), 5, rng), Regime::girth5_k4), InputError);
    CHECK_THROWS_AS(pack_constructive(CorrespondenceCover::identity(make_complete(6), 5), Regime::mad4_k5),
            ClassViolation);

    auto k5 = CorrespondenceCover::identity(make_complete(5), 4);
    CHECK_THROWS_AS(pack_constructive(k5, Regime::girth5_k4), ClassViolation);
    PackOptions loose;
    loose.check_class = false;
    // K5 has no proper 4-colouring at all, so no repair can succeed
    try {
        pack_constructive(k5, Regime::girth5_k4, loose);
        FAIL("expected an extension failure");
    }
    catch (const ExtensionFailure & e) {
        CHECK_FALSE(e.trace.success);
        CHECK_FALSE(e.trace.extensions.empty());
    }
}

TEST_CASE("one release unblocks a path")
{
    // x - v - y, identity maps; x and y together forbid both colours of v in the first colouring
    auto cover = CorrespondenceCover::identity(make_path(3), 2);
    PartialPacking start(3, 2);
    start.assign[0] = {0, 1};
    start.assign[2] = {1, 0};

    auto stuck = extend_with_repair(cover, start, {1}, 0);
    CHECK_FALSE(stuck.success);
    CHECK(stuck.steps.size() == 1);

    auto fixed = extend_with_repair(cover, start, {1}, 1);
    REQUIRE(fixed.success);
    CHECK(fixed.budget_used == 1);
    CHECK(fixed.packing.complete());
    CHECK(validate_packing(cover, fixed.packing.to_packing()).ok);
    REQUIRE(fixed.steps.size() >= 2);
    CHECK(fixed.steps.back().success);
    CHECK(fixed.steps.back().unpacked.size() == 1);
}

TEST_CASE("direct extension needs no release")
{
    auto cover = CorrespondenceCover::identity(make_path(3), 2);
    PartialPacking start(3, 2);
    start.assign[0] = {0, 1};
    start.assign[2] = {0, 1};
    auto r = extend_with_repair(cover, start, {1}, 2);
    REQUIRE(r.success);
    CHECK(r.budget_used == 0);
    CHECK(r.packing.assign[1] == std::vector<int>{1, 0});
    CHECK(r.packing.assign[0] == start.assign[0]);
}

TEST_CASE("random covers in the three regimes")
{
    struct Case { Graph g; Regime regime; };
    Rng tri = trial_rng(22, 0);
    std::vector<Case> cases{
        {make_dodecahedron(), Regime::girth5_k4},
        {make_grid(4, 5), Regime::mad4_k5},
        {make_icosahedron(), Regime::planar_k8},
        {random_min5_triangulation(tri, 20), Regime::planar_k8},
    };
    int max_used = 0;
    for (auto & c : cases)
        for (std::uint64_t seed = 0 ; seed < 60 ; ++seed) {
            Rng rng = trial_rng(seed, 1);
            auto cover = random_cover(c.g, regime_colours(c.regime), rng);
            auto r = pack_constructive(cover, c.regime);
            CHECK(validate_packing(cover, r.packing).ok);
            CHECK(r.trace.success);
            CHECK(r.trace.max_budget_used <= 2);
            CHECK_FALSE(r.reductions.empty());
            max_used = std::max(max_used, r.trace.max_budget_used);
        }
    // the dodecahedron needs a release now and then
    CHECK(max_used >= 1);
}
