#include <lpack/errors.hpp>
#include <lpack/kernels.hpp>

#include <algorithm>
#include <array>

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace lpack::kernels
{
    auto matching_masks_4x4() -> const std::array<std::uint16_t, 24> &;
}

namespace lpack::kernels::avx2
{
#if defined(__AVX2__)
    namespace
    {
        // per 16-bit lane popcount via nibble lookup
        inline auto popcount16(__m256i v) -> __m256i
        {
            const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                    0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
            const __m256i low_nibble = _mm256_set1_epi8(0x0f);
            __m256i lo = _mm256_shuffle_epi8(lookup, _mm256_and_si256(v, low_nibble));
            __m256i hi = _mm256_shuffle_epi8(lookup, _mm256_and_si256(_mm256_srli_epi16(v, 4), low_nibble));
            __m256i bytes = _mm256_add_epi8(lo, hi);
            return _mm256_add_epi16(_mm256_and_si256(bytes, _mm256_set1_epi16(0x00ff)), _mm256_srli_epi16(bytes, 8));
        }

        inline auto hmax16(__m256i v) -> int
        {
            alignas(32) std::array<std::int16_t, 16> lanes;
            _mm256_store_si256(reinterpret_cast<__m256i *>(lanes.data()), v);
            return *std::max_element(lanes.begin(), lanes.end());
        }

        inline auto hmin16(__m256i v) -> int
        {
            alignas(32) std::array<std::int16_t, 16> lanes;
            _mm256_store_si256(reinterpret_cast<__m256i *>(lanes.data()), v);
            return *std::min_element(lanes.begin(), lanes.end());
        }
    }

    auto supported() -> bool
    {
        return __builtin_cpu_supports("avx2");
    }

    auto neighbourhood_table(std::span<const std::uint16_t> rows, std::span<std::uint16_t> table) -> void
    {
        if (rows.size() > 16 || table.size() != (std::size_t{1} << rows.size()))
            throw InputError{"neighbourhood table must have 2^s entries, s <= 16"};
        table[0] = 0;
        for (std::size_t j = 0 ; j < rows.size() ; ++j) {
            std::size_t half = std::size_t{1} << j;
            if (half < 16) {
                for (std::size_t x = 0 ; x < half ; ++x)
                    table[half + x] = table[x] | rows[j];
                continue;
            }
            __m256i r = _mm256_set1_epi16(static_cast<short>(rows[j]));
            for (std::size_t x = 0 ; x < half ; x += 16) {
                __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(table.data() + x));
                _mm256_storeu_si256(reinterpret_cast<__m256i *>(table.data() + half + x), _mm256_or_si256(v, r));
            }
        }
    }

    auto scan_deficiency(std::span<const std::uint16_t> table) -> DeficiencyScan
    {
        if (table.size() < 16)
            return scalar::scan_deficiency(table);

        const __m256i zero = _mm256_setzero_si256();
        const __m256i offsets = _mm256_setr_epi16(0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15);
        __m256i best = zero, lo = _mm256_set1_epi16(99), hi = zero;
        for (std::size_t x = 0 ; x < table.size() ; x += 16) {
            __m256i index = _mm256_add_epi16(_mm256_set1_epi16(static_cast<short>(x)), offsets);
            __m256i size = popcount16(index);
            __m256i nbhd = popcount16(_mm256_loadu_si256(reinterpret_cast<const __m256i *>(table.data() + x)));
            __m256i deficiency = _mm256_sub_epi16(size, nbhd);
            __m256i violating = _mm256_cmpgt_epi16(deficiency, zero);
            best = _mm256_max_epi16(best, deficiency);
            lo = _mm256_min_epi16(lo, _mm256_blendv_epi8(_mm256_set1_epi16(99), size, violating));
            hi = _mm256_max_epi16(hi, _mm256_and_si256(size, violating));
        }
        DeficiencyScan scan;
        scan.max_deficiency = hmax16(best);
        scan.min_violator = hmin16(lo);
        scan.max_violator = hmax16(hi);
        if (scan.min_violator == 99)
            scan.min_violator = 0;
        return scan;
    }

    auto one_factor_edges_4x4(std::span<const std::uint16_t> mats, std::span<std::uint16_t> out) -> void
    {
        if (out.size() < mats.size())
            throw InputError{"output span too short"};
        auto & masks = matching_masks_4x4();
        std::size_t i = 0;
        for ( ; i + 16 <= mats.size() ; i += 16) {
            __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(mats.data() + i));
            __m256i result = _mm256_setzero_si256();
            for (auto mask : masks) {
                __m256i p = _mm256_set1_epi16(static_cast<short>(mask));
                __m256i present = _mm256_cmpeq_epi16(_mm256_and_si256(m, p), p);
                result = _mm256_or_si256(result, _mm256_and_si256(present, p));
            }
            _mm256_storeu_si256(reinterpret_cast<__m256i *>(out.data() + i), result);
        }
        if (i < mats.size())
            scalar::one_factor_edges_4x4(mats.subspan(i), out.subspan(i));
    }
#else
    auto supported() -> bool { return false; }

    auto neighbourhood_table(std::span<const std::uint16_t> rows, std::span<std::uint16_t> table) -> void
    {
        scalar::neighbourhood_table(rows, table);
    }

    auto scan_deficiency(std::span<const std::uint16_t> table) -> DeficiencyScan
    {
        return scalar::scan_deficiency(table);
    }

    auto one_factor_edges_4x4(std::span<const std::uint16_t> mats, std::span<std::uint16_t> out) -> void
    {
        scalar::one_factor_edges_4x4(mats, out);
    }
#endif
}
