#include <lpack/errors.hpp>
#include <lpack/kernels.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <cstring>

namespace lpack::kernels
{
    namespace
    {
        auto check_table(std::size_t rows, std::size_t table) -> void
        {
            if (rows > 16 || table != (std::size_t{1} << rows))
                throw InputError{"neighbourhood table must have 2^s entries, s <= 16"};
        }

        // Edge masks of the 24 perfect matchings of K_{4,4}, bit 4i+j.
        constexpr auto perfect_matchings_4x4 = [] {
            std::array<std::uint16_t, 24> masks{};
            std::array<int, 4> p{0, 1, 2, 3};
            int n = 0;
            do {
                std::uint16_t m = 0;
                for (int i = 0 ; i < 4 ; ++i)
                    m |= std::uint16_t(1u << (4 * i + p[i]));
                masks[n++] = m;
            } while (std::next_permutation(p.begin(), p.end()));
            return masks;
        }();
    }

    auto matching_masks_4x4() -> const std::array<std::uint16_t, 24> &
    {
        return perfect_matchings_4x4;
    }

    namespace scalar
    {
        auto neighbourhood_table(std::span<const std::uint16_t> rows, std::span<std::uint16_t> table) -> void
        {
            check_table(rows.size(), table.size());
            table[0] = 0;
            for (std::size_t j = 0 ; j < rows.size() ; ++j) {
                std::size_t half = std::size_t{1} << j;
                for (std::size_t x = 0 ; x < half ; ++x)
                    table[half + x] = table[x] | rows[j];
            }
        }

        auto scan_deficiency(std::span<const std::uint16_t> table) -> DeficiencyScan
        {
            DeficiencyScan scan;
            scan.min_violator = 99;
            for (std::size_t x = 0 ; x < table.size() ; ++x) {
                int size = std::popcount(static_cast<unsigned>(x));
                int deficiency = size - std::popcount(static_cast<unsigned>(table[x]));
                scan.max_deficiency = std::max(scan.max_deficiency, deficiency);
                if (deficiency > 0) {
                    scan.min_violator = std::min(scan.min_violator, size);
                    scan.max_violator = std::max(scan.max_violator, size);
                }
            }
            if (scan.min_violator == 99)
                scan.min_violator = 0;
            return scan;
        }

        auto one_factor_edges_4x4(std::span<const std::uint16_t> mats, std::span<std::uint16_t> out) -> void
        {
            if (out.size() < mats.size())
                throw InputError{"output span too short"};
            for (std::size_t i = 0 ; i < mats.size() ; ++i) {
                std::uint16_t result = 0;
                for (auto m : perfect_matchings_4x4)
                    if ((mats[i] & m) == m)
                        result |= m;
                out[i] = result;
            }
        }
    }

    namespace
    {
        struct Dispatch
        {
            NeighbourhoodTableFn table;
            DeficiencyScanFn scan;
            OneFactorEdges4x4Fn edges4;
            const char * name;
        };

        auto pick() -> Dispatch
        {
            const char * force = std::getenv("LPACK_FORCE_SCALAR");
            bool scalar_only = force && std::strcmp(force, "0") != 0 && *force;
            if (! scalar_only && avx2::supported())
                return {avx2::neighbourhood_table, avx2::scan_deficiency, avx2::one_factor_edges_4x4, "avx2"};
            return {scalar::neighbourhood_table, scalar::scan_deficiency, scalar::one_factor_edges_4x4, "scalar"};
        }

        auto dispatch() -> const Dispatch &
        {
            static const Dispatch chosen = pick();
            return chosen;
        }
    }

    auto active_variant() -> const char *
    {
        return dispatch().name;
    }

    auto neighbourhood_table(std::span<const std::uint16_t> rows, std::span<std::uint16_t> table) -> void
    {
        dispatch().table(rows, table);
    }

    auto scan_deficiency(std::span<const std::uint16_t> table) -> DeficiencyScan
    {
        return dispatch().scan(table);
    }

    auto one_factor_edges_4x4(std::span<const std::uint16_t> mats, std::span<std::uint16_t> out) -> void
    {
        dispatch().edges4(mats, out);
    }
}
