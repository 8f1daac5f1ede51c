#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace lpack
{
    using Rng = std::mt19937_64;

    // Generator for trial `index` of a run seeded with `seed`; trials never share state.
    auto trial_rng(std::uint64_t seed, std::uint64_t index) -> Rng;

    // Uniform in [0, n), by rejection so results do not depend on the standard library's distributions.
    auto below(Rng &, std::uint64_t n) -> std::uint64_t;

    auto coin(Rng &, double p) -> bool;

    template <typename T_>
    auto shuffle(std::span<T_> items, Rng & rng) -> void
    {
        for (std::size_t i = items.size() ; i > 1 ; --i)
            std::swap(items[i - 1], items[below(rng, i)]);
    }
}
