#pragma once

// Random bigraph helpers shared by the structured builders and the lemma samplers.

#include <lpack/bigraph.hpp>
#include <lpack/harness.hpp>
#include <lpack/rng.hpp>

#include <functional>
#include <optional>
#include <vector>

namespace lpack::sampling
{
    using EdgeFilter = std::function<bool (int, int)>;

    auto random_bigraph(Rng &, int s, double p) -> Bigraph;

    // Adds edges until every vertex has degree >= t, preferring edges between two deficient
    // vertices. Only edges accepted by `allowed` are added. False if it got stuck.
    auto fill_min_degree(Bigraph &, int t, Rng &, const EdgeFilter & allowed = {}) -> bool;

    // Deletes random edges with probability p each, keeping min degree >= t and skipping edges
    // rejected by `removable`.
    auto thin(Bigraph &, int t, double p, Rng &, const EdgeFilter & removable = {}) -> void;

    // A uniformly shuffled greedy matching among the pairs accepted by `allowed`, at most `limit` edges.
    auto random_matching(Rng &, int s, const EdgeFilter & allowed, int limit) -> std::vector<BiEdge>;

    auto random_permutation(Rng &, int s) -> std::vector<int>;

    // h with a_i renamed pa[i] and b_j renamed pb[j].
    auto relabel(const Bigraph &, const std::vector<int> & pa, const std::vector<int> & pb) -> Bigraph;
    auto relabel_set(Row, const std::vector<int> & perm) -> Row;

    // Size of a largest matching of h between `from` (A side) and `to` (B side).
    auto matching_between(const Bigraph &, Row from, Row to) -> int;

    // A bigraph with the given obstruction type planted on A, randomly relabeled; decorations carry
    // X, x1 and e1/e2.
    auto planted_obstruction(Rng &, int type) -> StructuredInstance;
}
