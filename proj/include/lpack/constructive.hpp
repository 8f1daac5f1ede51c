#pragma once

#include <lpack/cover.hpp>
#include <lpack/graph.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpack
{
    enum class Regime { mad4_k5, girth5_k4, planar_k8 };

    auto parse_regime(const std::string &) -> Regime;
    auto to_string(Regime) -> std::string;
    auto regime_colours(Regime) -> int;

    enum class ReductionKind
    {
        low_degree_vertex,
        light_edge,
        path_3_3_3,
        five_with_four_threes,
        light_triangle,
        min_degree_vertex       // fallback when class checks are disabled
    };

    auto to_string(ReductionKind) -> std::string;

    struct Reduction
    {
        ReductionKind kind;
        std::vector<int> vertices;      // the configuration, as below
        std::vector<int> removed;       // deleted before recursing, extended in this order
        std::vector<int> repair;        // neighbours to repack first if extension is blocked
    };

    // low_degree_vertex: (v); light_edge: (v, w), d(v) = 3 <= d(w) <= 4; path_3_3_3: (x, v, y);
    // five_with_four_threes: (v, w1..w4); light_triangle: (w, u, v) with w of least degree.
    // Throws ClassViolation if no configuration of the regime is present.
    auto find_reduction(const Graph &, Regime) -> Reduction;

    struct RepairStep
    {
        std::vector<int> unpacked;                  // packed neighbours released for this attempt
        std::vector<std::vector<int>> chosen;       // assignment of frontier then unpacked, on success
        std::uint64_t candidates = 0;               // matchings tried
        bool success = false;
    };

    struct RepairTrace
    {
        struct Extension
        {
            ReductionKind kind;
            std::vector<int> frontier;
            std::vector<RepairStep> steps;
            int budget_used = 0;
        };

        std::vector<Extension> extensions;      // in extension order
        bool success = false;
        int max_budget_used = 0;
    };

    class ExtensionFailure : public std::runtime_error
    {
        public:
            RepairTrace trace;

            ExtensionFailure(const std::string & what, RepairTrace t) :
                std::runtime_error(what), trace(std::move(t)) { }
    };

    struct RepairOptions
    {
        int budget = 2;
        std::uint64_t pair_cap = 10'000;        // matchings tried per released neighbour set
        std::vector<int> preferred;             // tried first as repair neighbours
    };

    struct ExtendResult
    {
        bool success = false;
        PartialPacking packing;
        std::vector<RepairStep> steps;
        int budget_used = 0;
    };

    // (a) extend to the frontier directly, searching all 1-factors of each frontier vertex;
    // (b) with budget >= 1, release one packed neighbour of the frontier and search again;
    // (c) with budget >= 2, release two jointly. Neighbours whose current matchings block edges a
    // Hall violator of the stuck vertex needs are released first.
    auto extend_with_repair(const Graph &, const ConflictModel &, const PartialPacking &,
            const std::vector<int> & frontier, const RepairOptions &) -> ExtendResult;

    auto extend_with_repair(const CorrespondenceCover &, const PartialPacking &,
            const std::vector<int> & frontier, int budget) -> ExtendResult;

    struct PackOptions
    {
        int budget = 2;
        bool check_class = true;        // verify girth and mad; without it, fall back to min degree
        std::uint64_t pair_cap = 10'000;
    };

    struct PackResult
    {
        Packing packing;
        RepairTrace trace;
        std::vector<Reduction> reductions;      // in removal order
    };

    // Delete a reduction's vertices, pack what is left, extend back with bounded repair.
    // Throws InputError on a colour count that does not match the regime, ClassViolation when the
    // graph is outside the regime's class, ExtensionFailure when repair is exhausted.
    auto pack_constructive(const CorrespondenceCover &, Regime, const PackOptions & = {}) -> PackResult;

}
