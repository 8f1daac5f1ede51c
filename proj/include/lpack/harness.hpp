#pragma once

#include <lpack/bigraph.hpp>
#include <lpack/cover.hpp>
#include <lpack/rng.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lpack
{
    // Named subgraphs planted in or derived from an instance.
    struct Decorations
    {
        std::vector<std::vector<BiEdge>> cycles;    // each listed in cyclic order
        std::vector<BiEdge> matching;               // M
        Matching one_factor;                        // m
        Row violator = 0;                           // X, on side A
        int x1 = -1;
        std::vector<BiEdge> special;                // e1/e2, or the removed edge set of a deficiency

        auto operator== (const Decorations &) const -> bool = default;
    };

    struct StructuredInstance
    {
        Bigraph h;
        std::optional<Bigraph> modified;            // H' where a lemma speaks of one
        Decorations decorations;
        int param = 0;                              // k, t or obstruction type
        std::optional<CorrespondenceCover> cover;   // graph-level lemmas
        int vertex = -1;

        auto operator== (const StructuredInstance &) const -> bool = default;
    };

    enum class StructuredKind { cycle10_plus_m5, cycle6_4_plus_m5, violator_type, switcher_double_instance };

    auto parse_structured_kind(const std::string &) -> StructuredKind;

    // param: obstruction type 1..4 for violator_type, k for switcher_double_instance.
    auto build_structured(StructuredKind, std::uint64_t seed, int param = 0) -> StructuredInstance;
    auto build_structured(StructuredKind, Rng &, int param) -> StructuredInstance;

    struct LemmaSpec
    {
        std::string name;
        std::string instance_builder;
        std::vector<int> variants;                  // parameter values, cycled by trial index

        // exhaustive: instance number i of `exhaustive_count`; nullopt when filtered out
        std::uint64_t exhaustive_count = 0;
        std::function<std::optional<StructuredInstance> (std::uint64_t)> enumerate;

        // randomized: nullopt when no instance meeting the precondition was drawn
        std::function<std::optional<StructuredInstance> (Rng &, int variant)> sample;

        std::function<bool (const StructuredInstance &)> precondition;
        std::function<bool (const StructuredInstance &)> property;

        // Optional extra per-instance observation counted into the report's notes (never fatal).
        std::function<void (const StructuredInstance &, std::map<std::string, std::uint64_t> &)> observe;
    };

    struct Strategy
    {
        enum class Kind { exhaustive, randomized } kind = Kind::randomized;
        std::uint64_t trials = 1000;
        std::uint64_t seed = 0;
    };

    struct VerifierReport
    {
        std::string lemma;
        std::string strategy;
        std::uint64_t trials = 0;
        std::uint64_t instances_checked = 0;
        std::uint64_t vacuous = 0;
        std::map<std::string, std::uint64_t> per_variant;
        std::map<std::string, std::uint64_t> notes;
        std::vector<StructuredInstance> counterexamples;
        double elapsed_seconds = 0;
        std::uint64_t seed = 0;
    };

    constexpr std::size_t max_reported_counterexamples = 10;

    auto lemma_names() -> std::vector<std::string>;
    auto lemma_spec(const std::string & name) -> LemmaSpec;         // throws InputError if unknown

    auto verify(const LemmaSpec &, const Strategy &) -> VerifierReport;
    auto verify(const std::string & name, const Strategy &) -> VerifierReport;

    // Greedy edge removal and addition on the instance's modified graph if it has one, else on h,
    // keeping the precondition and the failure of the property.
    auto shrink(const LemmaSpec &, StructuredInstance) -> StructuredInstance;

    // Edges lying in some 1-factor, for every 4x4 matrix packed as bit 4i+j.
    auto one_factor_edge_table_4x4() -> const std::vector<std::uint16_t> &;
    auto bigraph_from_4x4(std::uint16_t bits) -> Bigraph;
}
