#pragma once

#include <lpack/bigraph.hpp>
#include <lpack/graph.hpp>
#include <lpack/rng.hpp>

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lpack
{
    constexpr int max_colours = Bigraph::max_side;

    class Permutation
    {
        private:
            std::vector<int> _image;

        public:
            Permutation() = default;
            explicit Permutation(std::vector<int> image);   // throws InputError unless a bijection of [0,k)

            static auto identity(int k) -> Permutation;

            auto size() const -> int { return static_cast<int>(_image.size()); }
            auto operator() (int i) const -> int { return _image[i]; }
            auto image() const -> std::span<const int> { return _image; }
            auto inverse() const -> Permutation;
            auto is_identity() const -> bool;

            auto operator<=> (const Permutation &) const = default;
    };

    // (p * q)(i) = p(q(i))
    auto operator* (const Permutation & p, const Permutation & q) -> Permutation;

    // Arc tail -> head: colour c at tail conflicts with colour perm(c) at head.
    struct Arc
    {
        int tail, head;
        Permutation perm;

        auto operator== (const Arc &) const -> bool = default;
    };

    class CorrespondenceCover
    {
        private:
            Graph _graph;
            int _k = 0;
            std::vector<Arc> _arcs;     // _arcs[e] belongs to edge e of the graph, orientation as given

        public:
            CorrespondenceCover() = default;

            // Exactly one arc per edge, in either orientation; throws InputError otherwise.
            CorrespondenceCover(Graph graph, int k, std::vector<Arc> arcs);

            static auto identity(Graph graph, int k) -> CorrespondenceCover;

            auto graph() const -> const Graph & { return _graph; }
            auto colours() const -> int { return _k; }
            auto arcs() const -> std::span<const Arc> { return _arcs; }

            // The permutation carrying colours at `from` to conflicting colours at `to`; the inverse
            // is used when the stored arc points the other way.
            auto map(int from, int to) const -> Permutation;

            auto restricted(std::span<const int> keep) const -> CorrespondenceCover;

            auto operator== (const CorrespondenceCover &) const -> bool = default;
    };

    struct ListAssignment
    {
        Graph graph;
        int k = 0;
        std::vector<std::vector<int>> lists;    // each sorted, k distinct non-negative colours

        // Throws InputError on wrong sizes, repeats or negative colours; sorts each list.
        auto normalise() -> void;

        auto operator== (const ListAssignment &) const -> bool = default;
    };

    // assign[v][i] is the colour of v in the i-th colouring.
    struct Packing
    {
        int k = 0;
        std::vector<std::vector<int>> assign;

        auto operator== (const Packing &) const -> bool = default;
    };

    // As Packing; an empty assign[v] means v is unpacked.
    struct PartialPacking
    {
        int k = 0;
        std::vector<std::vector<int>> assign;

        PartialPacking() = default;
        PartialPacking(int n, int k);

        auto packed(int v) const -> bool { return ! assign[v].empty(); }
        auto complete() const -> bool;
        auto to_packing() const -> Packing;

        auto operator== (const PartialPacking &) const -> bool = default;
    };

    struct StraightenResult
    {
        CorrespondenceCover cover;
        std::vector<Permutation> relabel;       // relabel[v] sends old colours at v to new ones
    };

    // Relabels colours so every arc of the forest becomes the identity. Throws InputError if the
    // edges are not a forest of the cover's graph.
    auto straighten(const CorrespondenceCover &, std::span<const Edge> forest) -> StraightenResult;

    // Packing of the straightened cover from one of the original, and back.
    auto relabel_packing(const Packing &, std::span<const Permutation> relabel) -> Packing;
    auto unrelabel_packing(const Packing &, std::span<const Permutation> relabel) -> Packing;

    struct ListCover
    {
        CorrespondenceCover cover;
        std::vector<std::vector<int>> colour_of;   // colour_of[v][i] = colour of index i at v
    };

    // Index colours at each vertex in sorted order, match shared colours on each edge (u < v, arc
    // u -> v) and complete each partial matching by giving unmatched indices the smallest free image.
    auto list_to_cover(const ListAssignment &) -> ListCover;
    auto pull_back(const ListCover &, const Packing &) -> Packing;

    // Conflict structure used by the solvers: for each edge and direction, the colour at the other
    // end forbidden by each colour here, or -1. Covers give permutations; list assignments give the
    // partial matchings of shared colours, which carry no constraint beyond the lists themselves.
    class ConflictModel
    {
        public:
            using Map = std::array<std::int8_t, max_colours>;

            struct Link
            {
                int other;
                Map to_other;       // colour c here forbids to_other[c] there
                Map from_other;     // colour c there forbids from_other[c] here
            };

        private:
            int _k = 0;
            std::vector<std::vector<Link>> _links;

        public:
            ConflictModel() = default;
            ConflictModel(int n, int k);

            static auto from_cover(const CorrespondenceCover &) -> ConflictModel;
            static auto from_lists(const ListAssignment &) -> ConflictModel;    // colours as list indices

            auto order() const -> int { return static_cast<int>(_links.size()); }
            auto colours() const -> int { return _k; }
            auto links(int v) const -> std::span<const Link> { return _links[v]; }
            auto add_link(int u, int v, const Map & u_to_v) -> void;

            // Auxiliary bigraph of v: colour i ~ colouring j iff giving v colour i in colouring j
            // conflicts with no packed neighbour.
            auto aux(int v, const PartialPacking &) const -> Bigraph;
    };

    // Throws InputError if v is already packed.
    auto aux_bigraph(const CorrespondenceCover &, const PartialPacking &, int v) -> Bigraph;

    struct Violation
    {
        enum class Kind { shape, range, repeat, arc } kind;
        int u, v;           // vertex (u = v) or edge
        int index;          // colouring index, or -1

        auto operator== (const Violation &) const -> bool = default;
    };

    struct ValidationReport
    {
        bool ok = true;
        std::vector<Violation> violations;
    };

    auto validate_packing(const CorrespondenceCover &, const Packing &) -> ValidationReport;
    auto validate_list_packing(const ListAssignment &, const Packing &) -> ValidationReport;

    // Every constraint between two packed vertices holds; used for partial packings.
    auto validate_partial(const ConflictModel &, const Graph &, const PartialPacking &) -> bool;

    auto to_string(Violation::Kind) -> std::string;

    // Every arc oriented u -> v (u < v) with a uniformly random permutation.
    auto random_cover(const Graph &, int k, Rng &) -> CorrespondenceCover;
}
