#pragma once

// Brute-force reference implementations. They share nothing with the library beyond its value
// types, so agreement is evidence rather than tautology.

#include <lpack/bigraph.hpp>
#include <lpack/cover.hpp>
#include <lpack/graph.hpp>
#include <lpack/rational.hpp>

#include <algorithm>
#include <numeric>
#include <vector>

namespace oracle
{
    using namespace lpack;

    inline auto bit(unsigned x, int i) -> bool { return (x >> i) & 1; }

    // Every 1-factor as a mate vector, by trying all permutations.
    inline auto one_factors(const Bigraph & h) -> std::vector<std::vector<int>>
    {
        std::vector<int> p(h.side());
        std::iota(p.begin(), p.end(), 0);
        std::vector<std::vector<int>> out;
        do {
            bool ok = true;
            for (int i = 0 ; i < h.side() && ok ; ++i)
                ok = h.has_edge(i, p[i]);
            if (ok)
                out.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        return out;
    }

    inline auto neighbourhood(const Bigraph & h, unsigned x) -> unsigned
    {
        unsigned n = 0;
        for (int i = 0 ; i < h.side() ; ++i)
            if (bit(x, i))
                for (int j = 0 ; j < h.side() ; ++j)
                    if (h.has_edge(i, j))
                        n |= 1u << j;
        return n;
    }

    // Largest matching via subsets of A: s minus the maximum deficiency (Konig-Ore).
    inline auto max_deficiency(const Bigraph & h) -> int
    {
        int best = 0;
        for (unsigned x = 0 ; x < (1u << h.side()) ; ++x)
            best = std::max(best, std::popcount(x) - std::popcount(neighbourhood(h, x)));
        return best;
    }

    inline auto mad(const Graph & g) -> Rational
    {
        Rational best{0};
        int n = g.order();
        for (unsigned s = 1 ; s < (1u << n) ; ++s) {
            int edges = 0;
            for (auto [u, v] : g.edges())
                edges += bit(s, u) && bit(s, v);
            best = std::max(best, Rational{2 * edges, std::popcount(s)});
        }
        return best;
    }

    inline auto all_permutations(int k) -> std::vector<std::vector<int>>
    {
        std::vector<int> p(k);
        std::iota(p.begin(), p.end(), 0);
        std::vector<std::vector<int>> out;
        do
            out.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        return out;
    }

    // Does any choice of one permutation per vertex (colour of v in each colouring) respect every arc?
    inline auto has_packing(const CorrespondenceCover & c) -> bool
    {
        int n = c.graph().order(), k = c.colours();
        auto perms = all_permutations(k);
        std::vector<std::size_t> pick(n, 0);
        while (true) {
            bool ok = true;
            for (auto & a : c.arcs()) {
                for (int i = 0 ; i < k && ok ; ++i)
                    ok = a.perm(perms[pick[a.tail]][i]) != perms[pick[a.head]][i];
                if (! ok)
                    break;
            }
            if (ok)
                return true;
            int v = 0;
            while (v < n && ++pick[v] == perms.size())
                pick[v++] = 0;
            if (v == n)
                return false;
        }
    }

    inline auto has_list_packing(const ListAssignment & l) -> bool
    {
        int n = l.graph.order(), k = l.k;
        auto perms = all_permutations(k);
        std::vector<std::size_t> pick(n, 0);
        while (true) {
            bool ok = true;
            for (auto [u, v] : l.graph.edges()) {
                for (int i = 0 ; i < k && ok ; ++i)
                    ok = l.lists[u][perms[pick[u]][i]] != l.lists[v][perms[pick[v]][i]];
                if (! ok)
                    break;
            }
            if (ok)
                return true;
            int v = 0;
            while (v < n && ++pick[v] == perms.size())
                pick[v++] = 0;
            if (v == n)
                return false;
        }
    }
}
