#include <lpack/errors.hpp>
#include <lpack/graph_measures.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>

using std::optional;
using std::vector;

namespace lpack
{
    auto girth(const Graph & g) -> optional<int>
    {
        int n = g.order();
        int best = std::numeric_limits<int>::max();
        vector<int> dist(n), parent(n);
        for (int root = 0 ; root < n ; ++root) {
            std::fill(dist.begin(), dist.end(), -1);
            dist[root] = 0;
            parent[root] = -1;
            std::queue<int> queue;
            queue.push(root);
            while (! queue.empty()) {
                int u = queue.front();
                queue.pop();
                if (2 * dist[u] + 1 >= best)
                    break;
                for (int w : g.neighbours(u)) {
                    if (dist[w] == -1) {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push(w);
                    }
                    else if (w != parent[u])
                        best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
        if (best == std::numeric_limits<int>::max())
            return std::nullopt;
        return best;
    }

    auto degeneracy(const Graph & g) -> Degeneracy
    {
        int n = g.order();
        Degeneracy result;
        vector<int> deg(n);
        vector<bool> gone(n, false);
        for (int v = 0 ; v < n ; ++v)
            deg[v] = g.degree(v);

        for (int step = 0 ; step < n ; ++step) {
            int pick = -1;
            for (int v = 0 ; v < n ; ++v)
                if (! gone[v] && (pick == -1 || deg[v] < deg[pick]))
                    pick = v;
            result.value = std::max(result.value, deg[pick]);
            result.order.push_back(pick);
            gone[pick] = true;
            for (int w : g.neighbours(pick))
                if (! gone[w])
                    --deg[w];
        }
        return result;
    }

    auto mad_exhaustive(const Graph & g) -> Rational
    {
        int n = g.order();
        if (n > 20)
            throw InputError{"exhaustive mad limited to 20 vertices"};
        vector<std::uint32_t> adj(n, 0);
        for (auto & [u, v] : g.edges()) {
            adj[u] |= 1u << v;
            adj[v] |= 1u << u;
        }

        // twice the edge count of every induced subgraph, built from the subgraph without its top bit
        std::int64_t best_num = 0, best_den = 1;
        vector<std::uint16_t> doubled(std::size_t{1} << n, 0);
        for (std::uint32_t s = 1 ; s < (1u << n) ; ++s) {
            int top = 31 - std::countl_zero(s);
            std::uint32_t rest = s & ~(1u << top);
            doubled[s] = doubled[rest] + 2 * std::popcount(adj[top] & rest);
            std::int64_t size = std::popcount(s);
            if (doubled[s] * best_den > best_num * size) {
                best_num = doubled[s];
                best_den = size;
            }
        }
        return Rational{best_num, best_den};
    }

    namespace
    {
        // Dinic max flow with 64-bit capacities.
        class FlowNetwork
        {
            private:
                struct Arc { int to; std::int64_t cap; };
                vector<Arc> _arcs;
                vector<vector<int>> _out;
                vector<int> _level, _next;

                auto bfs(int s, int t) -> bool
                {
                    std::fill(_level.begin(), _level.end(), -1);
                    _level[s] = 0;
                    std::queue<int> q;
                    q.push(s);
                    while (! q.empty()) {
                        int u = q.front();
                        q.pop();
                        for (int a : _out[u])
                            if (_arcs[a].cap > 0 && _level[_arcs[a].to] == -1) {
                                _level[_arcs[a].to] = _level[u] + 1;
                                q.push(_arcs[a].to);
                            }
                    }
                    return _level[t] != -1;
                }

                auto dfs(int u, int t, std::int64_t pushed) -> std::int64_t
                {
                    if (u == t)
                        return pushed;
                    for (int & i = _next[u] ; i < int(_out[u].size()) ; ++i) {
                        int a = _out[u][i];
                        int v = _arcs[a].to;
                        if (_arcs[a].cap > 0 && _level[v] == _level[u] + 1)
                            if (auto got = dfs(v, t, std::min(pushed, _arcs[a].cap)) ; got > 0) {
                                _arcs[a].cap -= got;
                                _arcs[a ^ 1].cap += got;
                                return got;
                            }
                    }
                    return 0;
                }

            public:
                explicit FlowNetwork(int n) : _out(n), _level(n), _next(n) { }

                auto add(int u, int v, std::int64_t cap) -> void
                {
                    _out[u].push_back(static_cast<int>(_arcs.size()));
                    _arcs.push_back({v, cap});
                    _out[v].push_back(static_cast<int>(_arcs.size()));
                    _arcs.push_back({u, 0});
                }

                auto max_flow(int s, int t) -> std::int64_t
                {
                    std::int64_t total = 0;
                    while (bfs(s, t)) {
                        std::fill(_next.begin(), _next.end(), 0);
                        while (auto f = dfs(s, t, std::numeric_limits<std::int64_t>::max()))
                            total += f;
                    }
                    return total;
                }

                // vertices reachable from s in the residual network
                auto source_side(int s) -> vector<bool>
                {
                    vector<bool> seen(_out.size(), false);
                    seen[s] = true;
                    std::queue<int> q;
                    q.push(s);
                    while (! q.empty()) {
                        int u = q.front();
                        q.pop();
                        for (int a : _out[u])
                            if (_arcs[a].cap > 0 && ! seen[_arcs[a].to]) {
                                seen[_arcs[a].to] = true;
                                q.push(_arcs[a].to);
                            }
                    }
                    return seen;
                }
        };
    }

    auto mad_flow(const Graph & g) -> Rational
    {
        // Dinkelbach iteration: with lambda = a/b, maximise b|E(S)| - a|S| as a max-weight closure
        // (edge nodes worth b need both endpoints, vertex nodes cost a). Stops when nothing beats lambda.
        int n = g.order();
        int m = static_cast<int>(g.size());
        if (m == 0)
            return Rational{0};

        Rational lambda{m, n};
        while (true) {
            auto a = lambda.numerator(), b = lambda.denominator();
            int source = n + m, sink = n + m + 1;
            FlowNetwork net(n + m + 2);
            std::int64_t positive = 0;
            for (int e = 0 ; e < m ; ++e) {
                auto [u, v] = g.edges()[e];
                net.add(source, n + e, b);
                net.add(n + e, u, std::numeric_limits<std::int64_t>::max() / 4);
                net.add(n + e, v, std::numeric_limits<std::int64_t>::max() / 4);
                positive += b;
            }
            for (int v = 0 ; v < n ; ++v)
                net.add(v, sink, a);

            if (positive - net.max_flow(source, sink) <= 0)
                break;

            auto side = net.source_side(source);
            std::int64_t vertices = 0, edges = 0;
            for (int v = 0 ; v < n ; ++v)
                vertices += side[v];
            for (int e = 0 ; e < m ; ++e)
                edges += side[n + e];
            Rational better{edges, vertices};
            if (better <= lambda)
                break;
            lambda = better;
        }
        return 2 * lambda;
    }

    auto mad(const Graph & g) -> Rational
    {
        return g.order() <= 20 ? mad_exhaustive(g) : mad_flow(g);
    }

    auto find_light_triangle(const Graph & g, int bound) -> optional<Triangle>
    {
        for (int u = 0 ; u < g.order() ; ++u)
            for (int v : g.neighbours(u)) {
                if (v <= u)
                    continue;
                for (int w : g.neighbours(v)) {
                    if (w <= v || ! g.adjacent(u, w))
                        continue;
                    int sum = g.degree(u) + g.degree(v) + g.degree(w);
                    if (sum <= bound)
                        return Triangle{{u, v, w}, sum};
                }
            }
        return std::nullopt;
    }

    auto count_triangles(const Graph & g) -> long
    {
        long count = 0;
        for (auto & [u, v] : g.edges())
            for (int w : g.neighbours(v))
                if (w > v && g.adjacent(u, w))
                    ++count;
        return count;
    }

    auto find_light_edge(const Graph & g, int k) -> optional<LightEdge>
    {
        for (int v = 0 ; v < g.order() ; ++v)
            if (g.degree(v) == k)
                for (int w : g.neighbours(v))
                    if (g.degree(w) <= k + 1)
                        return LightEdge{v, w};
        return std::nullopt;
    }

    auto find_five_with_four_threes(const Graph & g) -> optional<std::array<int, 5>>
    {
        for (int v = 0 ; v < g.order() ; ++v) {
            if (g.degree(v) != 5)
                continue;
            std::array<int, 5> config{v, -1, -1, -1, -1};
            int found = 0;
            for (int w : g.neighbours(v))
                if (g.degree(w) == 3 && found < 4)
                    config[1 + found++] = w;
            if (found == 4)
                return config;
        }
        return std::nullopt;
    }

    auto find_path_of_threes(const Graph & g) -> optional<std::array<int, 3>>
    {
        for (int v = 0 ; v < g.order() ; ++v) {
            if (g.degree(v) != 3)
                continue;
            vector<int> threes;
            for (int w : g.neighbours(v))
                if (g.degree(w) == 3)
                    threes.push_back(w);
            if (threes.size() >= 2)
                return std::array<int, 3>{threes[0], v, threes[1]};
        }
        return std::nullopt;
    }

    auto passes_mad4_exclusions(const Graph & g) -> bool
    {
        return g.order() > 0 && g.min_degree() >= 3 && ! find_light_edge(g, 3) && ! find_five_with_four_threes(g);
    }

    auto passes_girth5_exclusions(const Graph & g) -> bool
    {
        return g.order() > 0 && g.min_degree() >= 3 && ! find_path_of_threes(g);
    }

    auto passes_light_edge_exclusions(const Graph & g, int k) -> bool
    {
        return g.order() > 0 && g.min_degree() >= k && ! find_light_edge(g, k);
    }
}
