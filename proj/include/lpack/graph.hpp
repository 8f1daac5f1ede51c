#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace lpack
{
    using Edge = std::pair<int, int>;

    // Simple undirected graph on vertices 0..n-1. Edges are stored with u < v, sorted.
    class Graph
    {
        private:
            int _n = 0;
            std::vector<Edge> _edges;
            std::vector<std::vector<int>> _adj;

        public:
            Graph() = default;
            explicit Graph(int n);

            // Throws InputError on loops, parallel edges or out-of-range endpoints.
            Graph(int n, std::vector<Edge> edges);

            auto order() const -> int { return _n; }
            auto size() const -> std::size_t { return _edges.size(); }
            auto edges() const -> const std::vector<Edge> & { return _edges; }
            auto neighbours(int v) const -> std::span<const int> { return _adj[v]; }
            auto degree(int v) const -> int { return static_cast<int>(_adj[v].size()); }
            auto adjacent(int u, int v) const -> bool;

            // Index of edge {u,v} in edges(), or -1.
            auto edge_index(int u, int v) const -> int;

            auto min_degree() const -> int;
            auto max_degree() const -> int;

            // Subgraph induced by `keep`, vertex keep[i] becoming i.
            auto induced(std::span<const int> keep) const -> Graph;

            auto operator== (const Graph &) const -> bool = default;
    };
}
