#include <lpack/errors.hpp>
#include <lpack/graph.hpp>
#include <lpack/rational.hpp>
#include <lpack/rng.hpp>

#include <algorithm>
#include <numeric>
#include <string>

using std::string;
using std::to_string;
using std::vector;

namespace lpack
{
    auto to_string(const Rational & r) -> string
    {
        if (r.denominator() == 1)
            return std::to_string(r.numerator());
        return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
    }

    auto parse_rational(const string & s) -> Rational
    {
        try {
            auto slash = s.find('/');
            if (slash == string::npos)
                return Rational{std::stoll(s)};
            auto den = std::stoll(s.substr(slash + 1));
            if (den == 0)
                throw InputError{"zero denominator in '" + s + "'"};
            return Rational{std::stoll(s.substr(0, slash)), den};
        }
        catch (const std::logic_error &) {
            throw InputError{"not a rational: '" + s + "'"};
        }
    }

    auto trial_rng(std::uint64_t seed, std::uint64_t index) -> Rng
    {
        // splitmix64 finaliser over the pair, so neighbouring indices give unrelated streams
        auto mix = [] (std::uint64_t z) {
            z += 0x9e3779b97f4a7c15ULL;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            return z ^ (z >> 31);
        };
        std::seed_seq seq{mix(seed), mix(seed ^ mix(index + 1))};
        return Rng{seq};
    }

    auto below(Rng & rng, std::uint64_t n) -> std::uint64_t
    {
        if (n <= 1)
            return 0;
        std::uint64_t limit = std::uint64_t(-1) - (std::uint64_t(-1) % n);
        std::uint64_t x;
        do
            x = rng();
        while (x >= limit);
        return x % n;
    }

    auto coin(Rng & rng, double p) -> bool
    {
        return double(rng() >> 11) * 0x1.0p-53 < p;
    }

    Graph::Graph(int n) :
        _n(n),
        _adj(n)
    {
        if (n < 0)
            throw InputError{"negative vertex count"};
    }

    Graph::Graph(int n, vector<Edge> edges) :
        Graph(n)
    {
        for (auto & [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw InputError{"edge (" + to_string(u) + "," + to_string(v) + ") out of range for n = " + to_string(n)};
            if (u == v)
                throw InputError{"loop at vertex " + to_string(u)};
            if (u > v)
                std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        if (auto dup = std::adjacent_find(edges.begin(), edges.end()) ; dup != edges.end())
            throw InputError{"parallel edge (" + to_string(dup->first) + "," + to_string(dup->second) + ")"};

        _edges = std::move(edges);
        for (auto & [u, v] : _edges) {
            _adj[u].push_back(v);
            _adj[v].push_back(u);
        }
        for (auto & a : _adj)
            std::sort(a.begin(), a.end());
    }

    auto Graph::adjacent(int u, int v) const -> bool
    {
        return std::binary_search(_adj[u].begin(), _adj[u].end(), v);
    }

    auto Graph::edge_index(int u, int v) const -> int
    {
        if (u > v)
            std::swap(u, v);
        auto it = std::lower_bound(_edges.begin(), _edges.end(), Edge{u, v});
        if (it == _edges.end() || *it != Edge{u, v})
            return -1;
        return static_cast<int>(it - _edges.begin());
    }

    auto Graph::min_degree() const -> int
    {
        int result = 0;
        for (int v = 0 ; v < _n ; ++v)
            if (v == 0 || degree(v) < result)
                result = degree(v);
        return result;
    }

    auto Graph::max_degree() const -> int
    {
        int result = 0;
        for (int v = 0 ; v < _n ; ++v)
            result = std::max(result, degree(v));
        return result;
    }

    auto Graph::induced(std::span<const int> keep) const -> Graph
    {
        vector<int> position(_n, -1);
        for (std::size_t i = 0 ; i < keep.size() ; ++i) {
            if (keep[i] < 0 || keep[i] >= _n || position[keep[i]] != -1)
                throw InputError{"bad vertex list for induced subgraph"};
            position[keep[i]] = static_cast<int>(i);
        }
        vector<Edge> edges;
        for (auto & [u, v] : _edges)
            if (position[u] != -1 && position[v] != -1)
                edges.emplace_back(position[u], position[v]);
        return Graph{static_cast<int>(keep.size()), std::move(edges)};
    }
}
