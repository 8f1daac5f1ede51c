#pragma once

#include <lpack/cover.hpp>
#include <lpack/graph.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace lpack
{
    struct SolveStats
    {
        std::uint64_t nodes = 0;        // vertex assignments tried
    };

    // Complete backtracking over per-vertex bijections, vertices in reverse degeneracy order, the
    // first vertex of each component fixed to the identity. A branch is cut as soon as an unpacked
    // neighbour of the last assigned vertex has an auxiliary bigraph without a 1-factor.
    auto solve_model(const Graph &, const ConflictModel &, SolveStats * = nullptr) -> std::optional<Packing>;

    // As solve_model, extending the packed vertices of `start`.
    auto extend_model(const Graph &, const ConflictModel &, const PartialPacking & start,
            SolveStats * = nullptr) -> std::optional<Packing>;

    auto solve_packing(const CorrespondenceCover &) -> std::optional<Packing>;

    // Colours in the result are actual list colours.
    auto solve_list_packing(const ListAssignment &) -> std::optional<Packing>;

    // One L-colouring at a time until the lists shrink to known_k, then solve_list_packing.
    // Throws InputError if the lists are shorter than known_k.
    auto pack_by_peeling(const ListAssignment &, int known_k) -> std::optional<Packing>;

    // A single proper colouring from the lists, by backtracking.
    auto list_colouring(const Graph &, const std::vector<std::vector<int>> & lists) -> std::optional<std::vector<int>>;

    constexpr std::uint64_t default_cover_cap = 1'000'000;
    constexpr std::uint64_t default_list_cap = 10'000'000;

    // Covers with the arcs of a spanning forest fixed to the identity (edges u < v, arcs u -> v);
    // the remaining arcs run through all permutations, lexicographically with the last edge fastest.
    // Returns the first cover without a packing. Throws ResourceError if (k!)^c exceeds cap.
    auto adversarial_cover_search(const Graph &, int k, std::uint64_t cap = default_cover_cap)
        -> std::optional<CorrespondenceCover>;

    // k-assignments up to the moves that do not change packability: renaming colours, splitting a
    // colour whose vertices induce a disconnected subgraph, and renaming colours seen at only one
    // vertex. What remains is a multiset of connected vertex sets (one per shared colour) covering
    // each vertex at most k times, the rest of each list being private colours. Returns an
    // assignment without a packing whose greedy realisation uses at most `universe` colours: one
    // using the fewest colours, and among those the first met with larger shared sets tried first.
    // Throws ResourceError after `cap` candidates in any one pass.
    auto adversarial_list_search(const Graph &, int k, int universe, std::uint64_t cap = default_list_cap)
        -> std::optional<ListAssignment>;

    enum class PackingMode { list, correspondence };

    auto parse_mode(const std::string &) -> PackingMode;

    // Least k <= upper with no adversarial witness. Throws ResourceError if there is none.
    auto packing_number(const Graph &, PackingMode, int upper,
            std::uint64_t cap = 0) -> int;
}
