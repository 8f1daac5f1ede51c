#pragma once

#include <lpack/kernels.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace lpack
{
    using Row = std::uint16_t;
    using BiEdge = std::pair<int, int>;         // (a index, b index)

    // Balanced bipartite graph with parts A = {a_0..a_{s-1}}, B = {b_0..b_{s-1}}, s <= 16.
    // Bit j of row i is set iff a_i ~ b_j.
    class Bigraph
    {
        private:
            int _s = 0;
            std::vector<Row> _rows;

        public:
            static constexpr int max_side = 16;

            Bigraph() = default;
            explicit Bigraph(int s);
            Bigraph(int s, std::vector<Row> rows);

            static auto complete(int s) -> Bigraph;
            static auto from_edges(int s, std::span<const BiEdge> edges) -> Bigraph;

            auto side() const -> int { return _s; }
            auto full() const -> Row { return static_cast<Row>((1u << _s) - 1); }
            auto row(int i) const -> Row { return _rows[i]; }
            auto rows() const -> std::span<const Row> { return _rows; }
            auto column(int j) const -> Row;

            auto has_edge(int i, int j) const -> bool { return (_rows[i] >> j) & 1; }
            auto add_edge(int i, int j) -> void;
            auto remove_edge(int i, int j) -> void;
            auto without(std::span<const BiEdge> edges) const -> Bigraph;
            auto with(std::span<const BiEdge> edges) const -> Bigraph;

            auto degree_a(int i) const -> int;
            auto degree_b(int j) const -> int;
            auto edge_count() const -> int;
            auto edge_list() const -> std::vector<BiEdge>;

            // N(X) for X given as a bitmask over A.
            auto neighbourhood(Row x) const -> Row;

            // N(X) for every X, indexed by X.
            auto neighbourhood_table() const -> std::vector<Row>;

            auto operator<=> (const Bigraph &) const = default;
    };

    // mate[i] = b partner of a_i, -1 if unmatched.
    using Matching = std::vector<int>;

    auto swap(const Bigraph &) -> Bigraph;

    // Deterministic augmenting-path matching; a vertices scanned in index order, b candidates by index.
    auto max_matching(const Bigraph &) -> Matching;
    auto matching_size(const Matching &) -> int;
    auto has_one_factor(const Bigraph &) -> bool;
    auto one_factor(const Bigraph &) -> std::optional<Matching>;

    // A 1-factor containing every edge of `include` and none of `exclude`. Throws InputError when
    // `include` is not a matching of h.
    auto one_factor_with(const Bigraph &, std::span<const BiEdge> include, std::span<const BiEdge> exclude)
        -> std::optional<Matching>;

    auto count_one_factors(const Bigraph &) -> std::uint64_t;

    // Visits 1-factors in lexicographic order of (mate[0], mate[1], ...). Stops when the visitor
    // returns false; returns the number visited.
    auto for_each_one_factor(const Bigraph &, const std::function<bool (const Matching &)> &) -> std::uint64_t;

    // Edges that lie in at least one 1-factor.
    auto matchable_edges(const Bigraph &) -> Bigraph;

    struct HallViolator
    {
        Row set = 0;            // X, a subset of A
        Row neighbourhood = 0;  // N(X)
    };

    // The largest X maximising |X| - |N(X)|, i.e. the union of all maximum-deficiency sets;
    // nullopt iff h has a 1-factor.
    auto hall_violator(const Bigraph &) -> std::optional<HallViolator>;

    struct DegreeProfile
    {
        std::vector<int> a, b;      // nondecreasing
    };

    auto degree_profile(const Bigraph &) -> DegreeProfile;
    auto min_degree(const Bigraph &) -> int;
    auto is_st(const Bigraph &, int s, int t) -> bool;

    // Edges e of the 1-factor m such that h - e still has a 1-factor. Throws if m is not a 1-factor.
    auto removable_edges(const Bigraph &, const Matching & m) -> std::vector<BiEdge>;

    auto is_one_factor(const Bigraph &, const Matching &) -> bool;
    auto matching_edges(const Matching &) -> std::vector<BiEdge>;

    auto popcount(Row r) -> int;
}
