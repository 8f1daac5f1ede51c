#include "oracles.hpp"

#include <lpack/errors.hpp>
#include <lpack/generators.hpp>
#include <lpack/solver.hpp>

#include <doctest.h>

using namespace lpack;

namespace
{
    // Every cover of g with k colours, arcs u -> v for u < v.
    auto all_covers(const Graph & g, int k) -> std::vector<CorrespondenceCover>
    {
        auto perms = oracle::all_permutations(k);
        std::size_t m = g.size();
        std::vector<std::size_t> pick(m, 0);
        std::vector<CorrespondenceCover> out;
        while (true) {
            std::vector<Arc> arcs;
            for (std::size_t e = 0 ; e < m ; ++e)
                arcs.push_back({g.edges()[e].first, g.edges()[e].second, Permutation{perms[pick[e]]}});
            out.emplace_back(g, k, std::move(arcs));
            std::size_t e = 0;
            while (e < m && ++pick[e] == perms.size())
                pick[e++] = 0;
            if (e == m)
                return out;
        }
    }

    auto spanning_tree(const Graph & g) -> std::vector<Edge>
    {
        std::vector<Edge> tree;
        std::vector<int> comp(g.order());
        std::iota(comp.begin(), comp.end(), 0);
        for (auto [u, v] : g.edges())
            if (comp[u] != comp[v]) {
                int old = comp[v];
                for (auto & c : comp)
                    if (c == old)
                        c = comp[u];
                tree.emplace_back(u, v);
            }
        return tree;
    }
}

TEST_CASE("permutations")
{
    Permutation p{{1, 2, 0}}, q{{0, 2, 1}};
    CHECK((p * q)(1) == p(q(1)));
    CHECK((p * p.inverse()).is_identity());
    CHECK_THROWS_AS(Permutation({0, 0, 1}), InputError);
    CHECK_THROWS_AS(Permutation({0, 3, 1}), InputError);
}

TEST_CASE("arc queries against the stored orientation use the inverse")
{
    Graph g{2, {{0, 1}}};
    Permutation p{{1, 2, 0}};
    CorrespondenceCover c{g, 3, {{1, 0, p}}};
    CHECK(c.map(1, 0) == p);
    CHECK(c.map(0, 1) == p.inverse());
    CHECK_THROWS_AS(CorrespondenceCover(g, 3, {}), InputError);
    CHECK_THROWS_AS(CorrespondenceCover(g, 3, {{0, 1, p}, {1, 0, p}}), InputError);
}

TEST_CASE("straightening preserves packability on small graphs, exhaustively")
{
    std::vector<Graph> graphs{make_cycle(3), make_cycle(4), make_path(3)};
    for (auto & g : graphs)
        for (int k : {2, 3}) {
            auto tree = spanning_tree(g);
            int disagreements = 0, not_straight = 0, bad_transfer = 0;
            for (auto & c : all_covers(g, k)) {
                auto s = straighten(c, tree);
                for (auto [u, v] : tree)
                    not_straight += ! s.cover.map(u, v).is_identity();
                auto before = solve_packing(c), after = solve_packing(s.cover);
                disagreements += before.has_value() != after.has_value();
                if (before)
                    bad_transfer += ! validate_packing(s.cover, relabel_packing(*before, s.relabel)).ok;
                if (after)
                    bad_transfer += ! validate_packing(c, unrelabel_packing(*after, s.relabel)).ok;
            }
            CHECK(disagreements == 0);
            CHECK(not_straight == 0);
            CHECK(bad_transfer == 0);
        }
    std::vector<Edge> cycle_edges = make_cycle(3).edges();
    CHECK_THROWS_AS(straighten(CorrespondenceCover::identity(make_cycle(3), 2), cycle_edges), InputError);
}

TEST_CASE("list to cover, pulled back, gives list packings")
{
    Rng rng = trial_rng(8, 0);
    int packed = 0;
    for (int trial = 0 ; trial < 200 ; ++trial) {
        int n = 2 + static_cast<int>(below(rng, 4));
        auto g = random_gnp(n, 0.6, rng);
        int k = 2 + static_cast<int>(below(rng, 2));
        ListAssignment l{g, k, {}};
        for (int v = 0 ; v < n ; ++v) {
            std::vector<int> pool{0, 1, 2, 3, 4};
            shuffle(std::span{pool}, rng);
            l.lists.emplace_back(pool.begin(), pool.begin() + k);
        }
        l.normalise();
        auto lc = list_to_cover(l);
        if (auto p = solve_packing(lc.cover)) {
            ++packed;
            CHECK(validate_list_packing(l, pull_back(lc, *p)).ok);
        }
    }
    CHECK(packed > 0);
}

TEST_CASE("auxiliary bigraph degree bound")
{
    Rng rng = trial_rng(9, 0);
    for (int trial = 0 ; trial < 100 ; ++trial) {
        auto g = random_gnp(6, 0.5, rng);
        int k = 3 + static_cast<int>(below(rng, 3));
        auto c = random_cover(g, k, rng);
        auto p = solve_packing(c);
        if (! p)
            continue;
        PartialPacking partial(g.order(), k);
        for (int v = 1 ; v < g.order() ; ++v)
            if (coin(rng, 0.6))
                partial.assign[v] = p->assign[v];
        int packed_nbrs = 0;
        for (int w : g.neighbours(0))
            packed_nbrs += partial.packed(w);
        auto h = aux_bigraph(c, partial, 0);
        CHECK(min_degree(h) >= k - packed_nbrs);
        // the full packing restricted to vertex 0 is one of its 1-factors
        for (int j = 0 ; j < k ; ++j)
            CHECK(h.has_edge(p->assign[0][j], j));
    }
    PartialPacking full(2, 2);
    full.assign[0] = {0, 1};
    CHECK_THROWS_AS(aux_bigraph(CorrespondenceCover::identity(make_path(2), 2), full, 0), InputError);
}

TEST_CASE("renaming the colours at one vertex does not change packability")
{
    Rng rng = trial_rng(10, 0);
    for (int trial = 0 ; trial < 100 ; ++trial) {
        auto g = random_gnp(5, 0.6, rng);
        int k = 3;
        auto c = random_cover(g, k, rng);
        auto perms = oracle::all_permutations(k);
        Permutation rename{perms[below(rng, perms.size())]};
        int v = static_cast<int>(below(rng, 5));
        std::vector<Arc> arcs(c.arcs().begin(), c.arcs().end());
        for (auto & a : arcs) {
            if (a.tail == v)
                a.perm = a.perm * rename.inverse();
            if (a.head == v)
                a.perm = rename * a.perm;
        }
        CorrespondenceCover renamed{g, k, arcs};
        CHECK(solve_packing(c).has_value() == solve_packing(renamed).has_value());
    }
}

TEST_CASE("validators name the broken constraint")
{
    auto c = CorrespondenceCover::identity(make_path(2), 2);
    Packing good{2, {{0, 1}, {1, 0}}};
    CHECK(validate_packing(c, good).ok);

    Packing clash{2, {{0, 1}, {0, 1}}};
    auto r = validate_packing(c, clash);
    CHECK_FALSE(r.ok);
    REQUIRE_FALSE(r.violations.empty());
    CHECK(r.violations[0].kind == Violation::Kind::arc);

    CHECK(validate_packing(c, Packing{2, {{0, 0}, {1, 0}}}).violations[0].kind == Violation::Kind::repeat);
    CHECK(validate_packing(c, Packing{2, {{0, 2}, {1, 0}}}).violations[0].kind == Violation::Kind::range);
    CHECK(validate_packing(c, Packing{2, {{0, 1}}}).violations[0].kind == Violation::Kind::shape);

    ListAssignment l{make_path(2), 2, {{3, 7}, {7, 9}}};
    CHECK(validate_list_packing(l, Packing{2, {{3, 7}, {7, 9}}}).ok);
    CHECK_FALSE(validate_list_packing(l, Packing{2, {{7, 3}, {7, 9}}}).ok);
    CHECK_FALSE(validate_list_packing(l, Packing{2, {{3, 5}, {7, 9}}}).ok);

    ListAssignment bad{make_path(2), 2, {{3, 3}, {7, 9}}};
    CHECK_THROWS_AS(bad.normalise(), InputError);
}
