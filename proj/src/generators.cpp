#include <lpack/errors.hpp>
#include <lpack/generators.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <queue>
#include <set>
#include <string>

using std::array;
using std::string;
using std::to_string;
using std::vector;

namespace lpack
{
    namespace
    {
        auto require(bool ok, const string & what) -> void
        {
            if (! ok)
                throw InputError{what};
        }
    }

    auto make_cycle(int n) -> Graph
    {
        require(n >= 3, "cycle needs n >= 3");
        vector<Edge> edges;
        for (int i = 0 ; i < n ; ++i)
            edges.emplace_back(i, (i + 1) % n);
        return Graph{n, edges};
    }

    auto make_path(int n) -> Graph
    {
        require(n >= 1, "path needs n >= 1");
        vector<Edge> edges;
        for (int i = 0 ; i + 1 < n ; ++i)
            edges.emplace_back(i, i + 1);
        return Graph{n, edges};
    }

    auto make_complete(int n) -> Graph
    {
        require(n >= 1, "complete graph needs n >= 1");
        vector<Edge> edges;
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                edges.emplace_back(u, v);
        return Graph{n, edges};
    }

    auto make_complete_bipartite(int a, int b) -> Graph
    {
        require(a >= 1 && b >= 1, "complete bipartite graph needs parts of size >= 1");
        vector<Edge> edges;
        for (int u = 0 ; u < a ; ++u)
            for (int v = 0 ; v < b ; ++v)
                edges.emplace_back(u, a + v);
        return Graph{a + b, edges};
    }

    auto make_grid(int rows, int cols) -> Graph
    {
        require(rows >= 1 && cols >= 1, "grid needs positive dimensions");
        vector<Edge> edges;
        for (int i = 0 ; i < rows ; ++i)
            for (int j = 0 ; j < cols ; ++j) {
                if (j + 1 < cols)
                    edges.emplace_back(i * cols + j, i * cols + j + 1);
                if (i + 1 < rows)
                    edges.emplace_back(i * cols + j, (i + 1) * cols + j);
            }
        return Graph{rows * cols, edges};
    }

    auto make_cube(int dim) -> Graph
    {
        require(dim >= 1 && dim <= 12, "cube dimension must be in [1, 12]");
        vector<Edge> edges;
        for (int v = 0 ; v < (1 << dim) ; ++v)
            for (int b = 0 ; b < dim ; ++b)
                if (! (v & (1 << b)))
                    edges.emplace_back(v, v | (1 << b));
        return Graph{1 << dim, edges};
    }

    auto make_dodecahedron() -> Graph
    {
        const array<int, 10> lcf{10, 7, 4, -4, -7, 10, -4, 7, -7, 4};
        std::set<Edge> edges;
        for (int i = 0 ; i < 20 ; ++i) {
            int j = (i + 1) % 20, k = ((i + lcf[i % 10]) % 20 + 20) % 20;
            edges.insert({std::min(i, j), std::max(i, j)});
            edges.insert({std::min(i, k), std::max(i, k)});
        }
        return Graph{20, {edges.begin(), edges.end()}};
    }

    namespace
    {
        using Face = array<int, 3>;

        auto icosahedron_faces() -> vector<Face>
        {
            auto up = [] (int i) { return 1 + (i % 5); };
            auto low = [] (int i) { return 6 + (i % 5); };
            vector<Face> faces;
            for (int i = 0 ; i < 5 ; ++i) {
                faces.push_back({0, up(i), up(i + 1)});
                faces.push_back({up(i), low(i + 1), up(i + 1)});
                faces.push_back({up(i), low(i), low(i + 1)});
                faces.push_back({11, low(i + 1), low(i)});
            }
            return faces;
        }

        // Flip faces so every edge is traversed once in each direction.
        auto orient(vector<Face> faces) -> vector<Face>
        {
            std::map<Edge, vector<int>> by_edge;
            for (int f = 0 ; f < int(faces.size()) ; ++f)
                for (int t = 0 ; t < 3 ; ++t) {
                    int a = faces[f][t], b = faces[f][(t + 1) % 3];
                    by_edge[{std::min(a, b), std::max(a, b)}].push_back(f);
                }
            auto has_directed = [&] (const Face & face, int a, int b) {
                for (int t = 0 ; t < 3 ; ++t)
                    if (face[t] == a && face[(t + 1) % 3] == b)
                        return true;
                return false;
            };

            vector<bool> done(faces.size(), false);
            for (int start = 0 ; start < int(faces.size()) ; ++start) {
                if (done[start])
                    continue;
                done[start] = true;
                std::queue<int> queue;
                queue.push(start);
                while (! queue.empty()) {
                    int f = queue.front();
                    queue.pop();
                    for (int t = 0 ; t < 3 ; ++t) {
                        int a = faces[f][t], b = faces[f][(t + 1) % 3];
                        for (int g : by_edge[{std::min(a, b), std::max(a, b)}]) {
                            if (g == f || done[g])
                                continue;
                            if (has_directed(faces[g], a, b))
                                std::swap(faces[g][0], faces[g][1]);
                            done[g] = true;
                            queue.push(g);
                        }
                    }
                }
            }
            return faces;
        }

        auto graph_of(int n, const vector<Face> & faces) -> Graph
        {
            std::set<Edge> edges;
            for (auto & f : faces)
                for (int t = 0 ; t < 3 ; ++t) {
                    int a = f[t], b = f[(t + 1) % 3];
                    edges.insert({std::min(a, b), std::max(a, b)});
                }
            return Graph{n, {edges.begin(), edges.end()}};
        }

        auto subdivide(int & n, const vector<Face> & faces) -> vector<Face>
        {
            std::map<Edge, int> midpoint;
            auto mid = [&] (int a, int b) {
                Edge key{std::min(a, b), std::max(a, b)};
                auto [it, fresh] = midpoint.try_emplace(key, n);
                if (fresh)
                    ++n;
                return it->second;
            };
            vector<Face> result;
            for (auto & [a, b, c] : faces) {
                int ab = mid(a, b), bc = mid(b, c), ca = mid(c, a);
                result.push_back({a, ab, ca});
                result.push_back({b, bc, ab});
                result.push_back({c, ca, bc});
                result.push_back({ab, bc, ca});
            }
            return result;
        }

        // Neighbours of v in rotation order, read off the oriented faces around it.
        auto rotation(int v, const vector<Face> & faces) -> vector<int>
        {
            std::map<int, int> next;
            for (auto & f : faces)
                for (int t = 0 ; t < 3 ; ++t)
                    if (f[t] == v)
                        next[f[(t + 1) % 3]] = f[(t + 2) % 3];
            vector<int> order{next.begin()->first};
            while (next[order.back()] != order.front())
                order.push_back(next[order.back()]);
            return order;
        }
    }

    auto make_icosahedron() -> Graph
    {
        return graph_of(12, icosahedron_faces());
    }

    auto random_min5_triangulation(Rng & rng, int splits) -> Graph
    {
        int n = 12;
        auto faces = subdivide(n, orient(icosahedron_faces()));
        vector<int> degree(n, 0);
        for (auto & f : faces)
            for (int x : f)
                ++degree[x];        // faces at a vertex = its degree in a triangulation

        for (int step = 0 ; step < splits ; ++step) {
            vector<int> candidates;
            for (int v = 0 ; v < n ; ++v)
                if (degree[v] >= 6)
                    candidates.push_back(v);
            if (candidates.empty())
                break;
            int v = candidates[below(rng, candidates.size())];
            auto around = rotation(v, faces);
            int d = static_cast<int>(around.size());
            int i = static_cast<int>(below(rng, d));
            int len = 3 + static_cast<int>(below(rng, d - 5));
            int j = (i + len) % d;
            int fresh = n++;

            // v keeps the faces from around[i] to around[j]; the rest pass to the new vertex
            std::set<int> moved;
            for (int t = j ; t != i ; t = (t + 1) % d)
                moved.insert(around[t]);
            for (auto & f : faces) {
                int at = -1;
                for (int t = 0 ; t < 3 ; ++t)
                    if (f[t] == v)
                        at = t;
                if (at != -1 && moved.count(f[(at + 1) % 3]) && f[(at + 1) % 3] != around[i])
                    f[at] = fresh;
            }
            faces.push_back({v, around[j], fresh});
            faces.push_back({v, fresh, around[i]});

            degree.push_back(d - len + 2);
            degree[v] = len + 2;
            ++degree[around[i]];
            ++degree[around[j]];
        }
        return graph_of(n, faces);
    }

    auto random_gnp(int n, double p, Rng & rng) -> Graph
    {
        vector<Edge> edges;
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                if (coin(rng, p))
                    edges.emplace_back(u, v);
        return Graph{n, edges};
    }

    auto generate(const string & kind, const vector<int> & params, std::uint64_t seed) -> Graph
    {
        auto want = [&] (std::size_t count) {
            require(params.size() == count, "generator '" + kind + "' takes " + to_string(count) + " parameter(s)");
        };
        if (kind == "cycle") { want(1); return make_cycle(params[0]); }
        if (kind == "path") { want(1); return make_path(params[0]); }
        if (kind == "complete") { want(1); return make_complete(params[0]); }
        if (kind == "complete_bipartite") { want(2); return make_complete_bipartite(params[0], params[1]); }
        if (kind == "grid") { want(2); return make_grid(params[0], params[1]); }
        if (kind == "dodecahedron") { want(0); return make_dodecahedron(); }
        if (kind == "icosahedron") { want(0); return make_icosahedron(); }
        if (kind == "cube") {
            require(params.size() <= 1, "generator 'cube' takes at most one parameter");
            return make_cube(params.empty() ? 3 : params[0]);
        }
        if (kind == "triangulation") {
            want(1);
            require(params[0] >= 0, "triangulation needs a non-negative split count");
            Rng rng = trial_rng(seed, 0);
            return random_min5_triangulation(rng, params[0]);
        }
        throw InputError{"unknown graph kind '" + kind + "'"};
    }
}
