#pragma once

#include <lpack/bigraph.hpp>

#include <optional>
#include <vector>

namespace lpack
{
    enum class Side { a, b };

    // An obstruction to a 1-factor in an (8,3)-bigraph. When side is b every field is expressed in
    // swap(h), where B plays the role of A.
    //   type 1: |X| = 5, |N(X)| = 3
    //   type 2: |X| = 4, |N(X)| = 3, and some x1 outside X has exactly one neighbour e1 outside N(X)
    //   type 3: as type 2 but x1 has exactly two neighbours e1, e2 outside N(X)
    //   type 4: |X| = 4, |N(X)| = 3, X neither type 2 or 3 nor inside a type 1 set
    struct Obstruction
    {
        Side side = Side::a;
        Row set = 0;
        Row neighbourhood = 0;
        int type = 0;
        int x1 = -1;
        std::optional<BiEdge> e1, e2;

        auto operator== (const Obstruction &) const -> bool = default;
    };

    // Witness that the A-side set x has the given type in h, if it does.
    auto obstruction_of_type(const Bigraph &, Row x, int type) -> std::optional<Obstruction>;

    // All A-side sets of the given type, in lexicographic order.
    auto obstructions_of_type(const Bigraph &, int type) -> std::vector<Obstruction>;

    // nullopt iff h has a 1-factor. Search order: type 1 on A then B, type 2 on A then B, then
    // types 3 and 4 likewise; subsets of a given size in lexicographic order. Throws InputError unless s = 8.
    auto classify_obstruction(const Bigraph &) -> std::optional<Obstruction>;
}
