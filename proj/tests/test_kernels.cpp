#include "oracles.hpp"

#include <lpack/harness.hpp>
#include <lpack/kernels.hpp>
#include <lpack/rng.hpp>

#include <doctest.h>

#include <cstdlib>
#include <cstring>

using namespace lpack;

namespace
{
    auto random_rows(Rng & rng, int s) -> std::vector<std::uint16_t>
    {
        std::vector<std::uint16_t> rows(s);
        for (auto & r : rows)
            r = static_cast<std::uint16_t>(below(rng, 1u << s));
        return rows;
    }
}

TEST_CASE("scalar neighbourhood table and deficiency scan match the oracle")
{
    Rng rng = trial_rng(1, 0);
    for (int s = 1 ; s <= 10 ; ++s) {
        auto rows = random_rows(rng, s);
        std::vector<std::uint16_t> table(std::size_t{1} << s);
        kernels::scalar::neighbourhood_table(rows, table);
        Bigraph h{s, rows};
        int worst = 0, smallest = 0, largest = 0;
        for (unsigned x = 0 ; x < table.size() ; ++x) {
            CHECK(table[x] == oracle::neighbourhood(h, x));
            int def = std::popcount(x) - std::popcount(unsigned(table[x]));
            worst = std::max(worst, def);
            if (def > 0) {
                int size = std::popcount(x);
                smallest = smallest == 0 ? size : std::min(smallest, size);
                largest = std::max(largest, size);
            }
        }
        auto scan = kernels::scalar::scan_deficiency(table);
        CHECK(scan.max_deficiency == worst);
        CHECK(scan.min_violator == smallest);
        CHECK(scan.max_violator == largest);
    }
}

TEST_CASE("scalar 4x4 one-factor edges match the permutation oracle")
{
    std::vector<std::uint16_t> mats(1u << 16), out(1u << 16);
    for (std::uint32_t m = 0 ; m < mats.size() ; ++m)
        mats[m] = static_cast<std::uint16_t>(m);
    kernels::scalar::one_factor_edges_4x4(mats, out);
    int mismatches = 0;
    for (std::uint32_t m = 0 ; m < mats.size() ; ++m) {
        std::uint16_t expect = 0;
        for (auto & f : oracle::one_factors(bigraph_from_4x4(static_cast<std::uint16_t>(m))))
            for (int i = 0 ; i < 4 ; ++i)
                expect |= std::uint16_t(1u << (4 * i + f[i]));
        mismatches += out[m] != expect;
    }
    CHECK(mismatches == 0);
}

TEST_CASE("avx2 kernels are equivalent to the scalar reference")
{
    if (! kernels::avx2::supported()) {
        MESSAGE("AVX2 not available; equivalence not exercised on this machine");
        return;
    }
    Rng rng = trial_rng(2, 0);
    for (int trial = 0 ; trial < 200 ; ++trial) {
        int s = 1 + static_cast<int>(below(rng, 16));
        auto rows = random_rows(rng, s);
        std::vector<std::uint16_t> a(std::size_t{1} << s), b(std::size_t{1} << s);
        kernels::scalar::neighbourhood_table(rows, a);
        kernels::avx2::neighbourhood_table(rows, b);
        REQUIRE(a == b);
        CHECK(kernels::scalar::scan_deficiency(a) == kernels::avx2::scan_deficiency(a));
    }

    // tables with deficiencies at the edges of the vector blocks
    for (int s = 1 ; s <= 6 ; ++s) {
        std::vector<std::uint16_t> rows(s, 0), table(std::size_t{1} << s);
        kernels::scalar::neighbourhood_table(rows, table);
        CHECK(kernels::scalar::scan_deficiency(table) == kernels::avx2::scan_deficiency(table));
    }

    // every 4x4 matrix, and an odd-length tail
    std::vector<std::uint16_t> mats(65536 + 7), a(mats.size()), b(mats.size());
    for (std::size_t m = 0 ; m < mats.size() ; ++m)
        mats[m] = static_cast<std::uint16_t>(m * 40503u);
    kernels::scalar::one_factor_edges_4x4(mats, a);
    kernels::avx2::one_factor_edges_4x4(mats, b);
    CHECK(a == b);
}

TEST_CASE("runtime dispatch honours the scalar override")
{
    std::string variant = kernels::active_variant();
    const char * forced = std::getenv("LPACK_FORCE_SCALAR");
    if (forced && std::strcmp(forced, "0") != 0)
        CHECK(variant == "scalar");
    else
        CHECK(variant == (kernels::avx2::supported() ? "avx2" : "scalar"));
}
