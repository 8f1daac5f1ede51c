#pragma once

#include <lpack/graph.hpp>
#include <lpack/rational.hpp>

#include <array>
#include <optional>
#include <vector>

namespace lpack
{
    // Length of a shortest cycle; nullopt for forests.
    auto girth(const Graph &) -> std::optional<int>;

    struct Degeneracy
    {
        int value = 0;
        std::vector<int> order;     // removal order, min degree first, ties by index
    };

    auto degeneracy(const Graph &) -> Degeneracy;

    // Maximum average degree max 2|E(H)|/|V(H)| over nonempty subgraphs, exact.
    auto mad(const Graph &) -> Rational;
    auto mad_exhaustive(const Graph &) -> Rational;     // n <= 20
    auto mad_flow(const Graph &) -> Rational;

    struct Triangle
    {
        std::array<int, 3> vertices;
        int degree_sum;
    };

    // Lexicographically first triangle with degree sum at most `bound`.
    auto find_light_triangle(const Graph &, int bound = 17) -> std::optional<Triangle>;

    auto count_triangles(const Graph &) -> long;

    // Configurations excluded by the reducibility lemmas; a graph passing these is what the
    // discharging arguments are run on.
    struct LightEdge { int low, other; };
    auto find_light_edge(const Graph &, int k) -> std::optional<LightEdge>;  // d(low) = k, d(other) <= k + 1
    auto find_five_with_four_threes(const Graph &) -> std::optional<std::array<int, 5>>;
    auto find_path_of_threes(const Graph &) -> std::optional<std::array<int, 3>>;

    auto passes_mad4_exclusions(const Graph &) -> bool;
    auto passes_girth5_exclusions(const Graph &) -> bool;
    auto passes_light_edge_exclusions(const Graph &, int k) -> bool;
}
