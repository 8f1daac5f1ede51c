#pragma once

#include <cstdint>
#include <span>

// Bit-parallel kernels over small bipartite adjacency matrices. Each kernel has a scalar
// reference and an AVX2 variant; the unqualified entry points pick one at runtime.
namespace lpack::kernels
{
    // table[X] = union of rows[i] over the bits i of X, for every X below 2^s (s = rows.size()).
    using NeighbourhoodTableFn = void (*)(std::span<const std::uint16_t> rows, std::span<std::uint16_t> table);

    // Summary of |X| - |N(X)| over all X in a neighbourhood table.
    struct DeficiencyScan
    {
        int max_deficiency = 0;     // over all X including the empty set, so >= 0
        int min_violator = 0;       // smallest |X| with |N(X)| < |X|, 0 if none
        int max_violator = 0;       // largest such |X|, 0 if none

        auto operator== (const DeficiencyScan &) const -> bool = default;
    };

    using DeficiencyScanFn = DeficiencyScan (*)(std::span<const std::uint16_t> table);

    // For 4x4 matrices packed as bit 4i+j (a_i ~ b_j): the set of edges lying in some 1-factor.
    using OneFactorEdges4x4Fn = void (*)(std::span<const std::uint16_t> mats, std::span<std::uint16_t> out);

    namespace scalar
    {
        auto neighbourhood_table(std::span<const std::uint16_t> rows, std::span<std::uint16_t> table) -> void;
        auto scan_deficiency(std::span<const std::uint16_t> table) -> DeficiencyScan;
        auto one_factor_edges_4x4(std::span<const std::uint16_t> mats, std::span<std::uint16_t> out) -> void;
    }

    namespace avx2
    {
        auto supported() -> bool;
        auto neighbourhood_table(std::span<const std::uint16_t> rows, std::span<std::uint16_t> table) -> void;
        auto scan_deficiency(std::span<const std::uint16_t> table) -> DeficiencyScan;
        auto one_factor_edges_4x4(std::span<const std::uint16_t> mats, std::span<std::uint16_t> out) -> void;
    }

    // "avx2" or "scalar". LPACK_FORCE_SCALAR=1 in the environment pins the scalar variants.
    auto active_variant() -> const char *;

    auto neighbourhood_table(std::span<const std::uint16_t> rows, std::span<std::uint16_t> table) -> void;
    auto scan_deficiency(std::span<const std::uint16_t> table) -> DeficiencyScan;
    auto one_factor_edges_4x4(std::span<const std::uint16_t> mats, std::span<std::uint16_t> out) -> void;
}
