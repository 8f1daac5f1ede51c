#include "oracles.hpp"

#include <lpack/errors.hpp>
#include <lpack/generators.hpp>
#include <lpack/solver.hpp>

#include <doctest.h>

#include <functional>
#include <map>
#include <numeric>
#include <set>

using namespace lpack;

namespace
{
    // C_n, identity arcs i -> i+1 except the closing arc, which swaps colours 0 and 1.
    auto transposition_cycle(int n, int k) -> CorrespondenceCover
    {
        auto g = make_cycle(n);
        std::vector<Arc> arcs;
        for (auto [u, v] : g.edges()) {
            auto p = Permutation::identity(k);
            if (u == 0 && v == n - 1) {
                std::vector<int> image(k);
                std::iota(image.begin(), image.end(), 0);
                std::swap(image[0], image[1]);
                p = Permutation{image};
            }
            arcs.push_back({u, v, p});
        }
        return {g, k, arcs};
    }

    // L(v_1..v_{n-2}) = {1,2}, L(v_{n-1}) = {1,3}, L(v_n) = {2,3} on the cycle v_1..v_n.
    auto even_cycle_gadget(int n) -> ListAssignment
    {
        ListAssignment l{make_cycle(n), 2, std::vector<std::vector<int>>(n, {1, 2})};
        l.lists[n - 2] = {1, 3};
        l.lists[n - 1] = {2, 3};
        return l;
    }

    // Is a an image of b under some renaming of colours and some symmetry of the cycle?
    auto cycle_equivalent(const ListAssignment & a, const ListAssignment & b) -> bool
    {
        int n = a.graph.order();
        for (int shift = 0 ; shift < n ; ++shift)
            for (int dir : {1, -1}) {
                std::map<int, int> forward, backward;
                // search colour bijections consistent with every vertex
                std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
                for (int v = 0 ; v < n ; ++v)
                    pairs.emplace_back(b.lists[v], a.lists[((dir * v + shift) % n + n) % n]);
                std::function<bool (std::size_t)> extend = [&] (std::size_t i) -> bool {
                    if (i == pairs.size())
                        return true;
                    auto [from, to] = pairs[i];
                    std::sort(to.begin(), to.end());
                    do {
                        auto f = forward, bk = backward;
                        bool fits = true;
                        for (std::size_t j = 0 ; j < from.size() && fits ; ++j) {
                            auto it = forward.find(from[j]);
                            auto jt = backward.find(to[j]);
                            if (it != forward.end() && it->second != to[j])
                                fits = false;
                            else if (jt != backward.end() && jt->second != from[j])
                                fits = false;
                            else {
                                forward[from[j]] = to[j];
                                backward[to[j]] = from[j];
                            }
                        }
                        if (fits && extend(i + 1))
                            return true;
                        forward = f;
                        backward = bk;
                    } while (std::next_permutation(to.begin(), to.end()));
                    return false;
                };
                if (extend(0))
                    return true;
            }
        return false;
    }
}

TEST_CASE("cycle examples")
{
    CHECK_FALSE(solve_packing(transposition_cycle(5, 3)).has_value());
    auto p = solve_packing(transposition_cycle(5, 4));
    REQUIRE(p.has_value());
    CHECK(validate_packing(transposition_cycle(5, 4), *p).ok);

    auto single = solve_packing(CorrespondenceCover::identity(Graph{1}, 2));
    REQUIRE(single.has_value());
    CHECK(single->assign[0] == std::vector<int>{0, 1});
}

TEST_CASE("list packing examples")
{
    for (int n : {4, 6, 8})
        CHECK_FALSE(solve_list_packing(even_cycle_gadget(n)).has_value());

    Rng rng = trial_rng(12, 0);
    auto c6 = make_cycle(6);
    for (int trial = 0 ; trial < 300 ; ++trial) {
        ListAssignment l{c6, 3, {}};
        for (int v = 0 ; v < 6 ; ++v) {
            std::vector<int> pool(6);
            std::iota(pool.begin(), pool.end(), 0);
            shuffle(std::span{pool}, rng);
            l.lists.emplace_back(pool.begin(), pool.begin() + 3);
        }
        l.normalise();
        auto p = solve_list_packing(l);
        REQUIRE(p.has_value());
        CHECK(validate_list_packing(l, *p).ok);
    }

    ListAssignment edgeless{Graph{3}, 2, {{4, 9}, {0, 2}, {5, 6}}};
    auto p = solve_list_packing(edgeless);
    REQUIRE(p.has_value());
    CHECK(p->assign == edgeless.lists);
}

TEST_CASE("solvers agree with the brute-force oracle on random small instances")
{
    Rng rng = trial_rng(13, 0);
    for (int trial = 0 ; trial < 300 ; ++trial) {
        int n = 1 + static_cast<int>(below(rng, 5));
        auto g = random_gnp(n, 0.5, rng);
        int k = 1 + static_cast<int>(below(rng, 3));
        auto c = random_cover(g, k, rng);
        auto p = solve_packing(c);
        CHECK(p.has_value() == oracle::has_packing(c));
        if (p)
            CHECK(validate_packing(c, *p).ok);

        ListAssignment l{g, k, {}};
        for (int v = 0 ; v < n ; ++v) {
            std::vector<int> pool{0, 1, 2, 3};
            shuffle(std::span{pool}, rng);
            l.lists.emplace_back(pool.begin(), pool.begin() + k);
        }
        l.normalise();
        auto q = solve_list_packing(l);
        CHECK(q.has_value() == oracle::has_list_packing(l));
        if (q)
            CHECK(validate_list_packing(l, *q).ok);
    }
}

TEST_CASE("peeling")
{
    // forest, lists of size 3, every forest has list packing number 2
    Graph tree{5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}}};
    ListAssignment l{tree, 3, {{0, 1, 2}, {1, 2, 3}, {0, 2, 4}, {2, 3, 4}, {0, 3, 4}}};
    auto p = pack_by_peeling(l, 2);
    REQUIRE(p.has_value());
    CHECK(p->assign.size() == 5);
    CHECK(validate_list_packing(l, *p).ok);

    ListAssignment c4{make_cycle(4), 4, {{0, 1, 2, 3}, {1, 2, 3, 4}, {0, 2, 4, 5}, {0, 1, 3, 5}}};
    auto q = pack_by_peeling(c4, 3);
    REQUIRE(q.has_value());
    CHECK(validate_list_packing(c4, *q).ok);
    CHECK(solve_list_packing(c4).has_value());

    auto base = even_cycle_gadget(4);
    CHECK(pack_by_peeling(base, 2).has_value() == solve_list_packing(base).has_value());
    CHECK_THROWS_AS(pack_by_peeling(c4, 5), InputError);
}

TEST_CASE("adversarial cover search")
{
    auto w = adversarial_cover_search(make_cycle(5), 3);
    REQUIRE(w.has_value());
    int moved = 0;
    for (auto & a : w->arcs())
        if (! a.perm.is_identity()) {
            ++moved;
            int fixed = 0;
            for (int i = 0 ; i < 3 ; ++i)
                fixed += a.perm(i) == i;
            CHECK(fixed == 1);     // a transposition
        }
    CHECK(moved == 1);
    CHECK_FALSE(solve_packing(*w).has_value());

    CHECK_FALSE(adversarial_cover_search(make_cycle(5), 4).has_value());
    CHECK_FALSE(adversarial_cover_search(make_path(2), 2).has_value());
    CHECK_THROWS_AS(adversarial_cover_search(make_complete(4), 4, 100), ResourceError);
}

TEST_CASE("gauge reduction finds a bad cover exactly when one exists")
{
    for (auto g : {make_cycle(3), make_cycle(4)})
        for (int k : {2, 3}) {
            bool any_bad = false;
            auto perms = oracle::all_permutations(k);
            std::vector<std::size_t> pick(g.size(), 0);
            while (true) {
                std::vector<Arc> arcs;
                for (std::size_t e = 0 ; e < g.size() ; ++e)
                    arcs.push_back({g.edges()[e].first, g.edges()[e].second, Permutation{perms[pick[e]]}});
                any_bad |= ! oracle::has_packing(CorrespondenceCover{g, k, arcs});
                std::size_t e = 0;
                while (e < g.size() && ++pick[e] == perms.size())
                    pick[e++] = 0;
                if (e == g.size())
                    break;
            }
            CHECK(adversarial_cover_search(g, k).has_value() == any_bad);
        }
}

TEST_CASE("adversarial list search")
{
    auto w = adversarial_list_search(make_cycle(4), 2, 3);
    REQUIRE(w.has_value());
    CHECK_FALSE(solve_list_packing(*w).has_value());
    CHECK(cycle_equivalent(*w, even_cycle_gadget(4)));
    // longer even cycles have other bad assignments; the preferred one is still the gadget
    for (int n : {6, 8}) {
        auto longer = adversarial_list_search(make_cycle(n), 2, 3 * n);
        REQUIRE(longer.has_value());
        CHECK(cycle_equivalent(*longer, even_cycle_gadget(n)));
    }

    CHECK_FALSE(adversarial_list_search(make_cycle(4), 3, 6).has_value());
    CHECK_FALSE(adversarial_list_search(Graph{1}, 1, 1).has_value());
    CHECK_THROWS_AS(adversarial_list_search(make_cycle(6), 3, 18, 10), ResourceError);
}

TEST_CASE("packing numbers of tiny graphs")
{
    CHECK(packing_number(make_cycle(5), PackingMode::correspondence, 5) == 4);
    CHECK(packing_number(make_cycle(4), PackingMode::list, 4) == 3);
    CHECK(packing_number(make_complete(3), PackingMode::list, 4) == 3);
    CHECK(packing_number(make_path(3), PackingMode::correspondence, 3) == 2);
    CHECK_THROWS_AS(packing_number(make_cycle(5), PackingMode::correspondence, 3), ResourceError);
    CHECK_THROWS_AS(parse_mode("dp"), InputError);

    // list packing number never exceeds the correspondence one
    for (auto g : {make_path(3), make_cycle(3), make_cycle(4), make_complete_bipartite(1, 3), make_complete_bipartite(2, 2)}) {
        int list = packing_number(g, PackingMode::list, 5), corr = packing_number(g, PackingMode::correspondence, 5);
        CHECK(list <= corr);
    }
}

TEST_CASE("once no bad k-assignment exists, random (k+1)-assignments pack")
{
    REQUIRE_FALSE(adversarial_list_search(make_cycle(4), 3, 12).has_value());
    Rng rng = trial_rng(14, 0);
    for (int trial = 0 ; trial < 100 ; ++trial) {
        ListAssignment l{make_cycle(4), 4, {}};
        for (int v = 0 ; v < 4 ; ++v) {
            std::vector<int> pool(7);
            std::iota(pool.begin(), pool.end(), 0);
            shuffle(std::span{pool}, rng);
            l.lists.emplace_back(pool.begin(), pool.begin() + 4);
        }
        l.normalise();
        CHECK(solve_list_packing(l).has_value());
    }
}

TEST_CASE("list colouring")
{
    auto c = list_colouring(make_cycle(3), {{0, 1}, {0, 1}, {0, 1}});
    CHECK_FALSE(c.has_value());
    auto d = list_colouring(make_cycle(3), {{0, 1}, {0, 1}, {0, 2}});
    REQUIRE(d.has_value());
    CHECK((*d)[2] == 2);
}
