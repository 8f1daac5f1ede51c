#include <lpack/errors.hpp>
#include <lpack/solver.hpp>

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

using std::optional;
using std::string;
using std::vector;

namespace lpack
{
    namespace
    {
        auto all_permutations(int k) -> vector<Permutation>
        {
            vector<Permutation> result;
            vector<int> p(k);
            std::iota(p.begin(), p.end(), 0);
            do
                result.emplace_back(p);
            while (std::next_permutation(p.begin(), p.end()));
            return result;
        }

        // Edges of the graph outside a spanning forest grown greedily in edge order.
        auto cotree_edges(const Graph & g) -> vector<Edge>
        {
            vector<int> root(g.order());
            std::iota(root.begin(), root.end(), 0);
            auto find = [&] (int x) {
                while (root[x] != x)
                    x = root[x] = root[root[x]];
                return x;
            };
            vector<Edge> result;
            for (auto & [u, v] : g.edges()) {
                if (find(u) == find(v))
                    result.emplace_back(u, v);
                else
                    root[find(u)] = find(v);
            }
            return result;
        }
    }

    auto adversarial_cover_search(const Graph & g, int k, std::uint64_t cap) -> optional<CorrespondenceCover>
    {
        if (k < 1 || k > 8)
            throw InputError{"adversarial cover search needs 1 <= k <= 8"};
        auto perms = all_permutations(k);
        auto free_edges = cotree_edges(g);

        std::uint64_t total = 1;
        for (std::size_t i = 0 ; i < free_edges.size() ; ++i) {
            if (total > cap / perms.size())
                throw ResourceError{"adversarial cover search: (k!)^c exceeds the cap of " + std::to_string(cap)};
            total *= perms.size();
        }
        if (total > cap)
            throw ResourceError{"adversarial cover search: (k!)^c exceeds the cap of " + std::to_string(cap)};

        vector<int> position(g.size(), -1);
        for (std::size_t i = 0 ; i < free_edges.size() ; ++i)
            position[g.edge_index(free_edges[i].first, free_edges[i].second)] = static_cast<int>(i);

        vector<std::size_t> digit(free_edges.size(), 0);
        for (std::uint64_t count = 0 ; count < total ; ++count) {
            vector<Arc> arcs;
            for (std::size_t e = 0 ; e < g.size() ; ++e) {
                auto [u, v] = g.edges()[e];
                arcs.push_back({u, v, position[e] == -1 ? perms.front() : perms[digit[position[e]]]});
            }
            CorrespondenceCover cover{g, k, std::move(arcs)};
            if (! solve_packing(cover))
                return cover;

            for (std::size_t i = digit.size() ; i-- > 0 ; ) {
                if (++digit[i] < perms.size())
                    break;
                digit[i] = 0;
            }
        }
        return std::nullopt;
    }

    namespace
    {
        auto connected_sets(const Graph & g) -> vector<std::uint32_t>
        {
            int n = g.order();
            vector<std::uint32_t> adj(n, 0);
            for (auto & [u, v] : g.edges()) {
                adj[u] |= 1u << v;
                adj[v] |= 1u << u;
            }
            vector<std::uint32_t> result;
            for (std::uint32_t set = 1 ; set < (1u << n) ; ++set) {
                if (std::popcount(set) < 2)
                    continue;
                std::uint32_t seen = set & -set, frontier = seen;
                while (frontier) {
                    int u = std::countr_zero(frontier);
                    frontier &= frontier - 1;
                    std::uint32_t fresh = adj[u] & set & ~seen;
                    seen |= fresh;
                    frontier |= fresh;
                }
                if (seen == set)
                    result.push_back(set);
            }
            // larger sets first, so witnesses with few shared colours turn up early
            std::stable_sort(result.begin(), result.end(), [] (std::uint32_t a, std::uint32_t b) {
                return std::popcount(a) > std::popcount(b);
            });
            return result;
        }

        class ListEnumerator
        {
            private:
                const Graph & _g;
                int _k, _universe;
                std::uint64_t _cap, _count = 0;
                vector<std::uint32_t> _sets, _closed;     // closed = set plus its neighbours
                vector<int> _chosen, _cover;
                optional<ListAssignment> _witness;

                // Colours by first fit: an item may reuse a colour only when it is disjoint from
                // and not adjacent to every item already holding it.
                auto realise() const -> optional<ListAssignment>
                {
                    int n = _g.order();
                    vector<std::uint32_t> items, closed;
                    for (int c : _chosen) {
                        items.push_back(_sets[c]);
                        closed.push_back(_closed[c]);
                    }
                    for (int v = 0 ; v < n ; ++v)
                        for (int slot = _cover[v] ; slot < _k ; ++slot) {
                            std::uint32_t nb = 1u << v;
                            for (int w : _g.neighbours(v))
                                nb |= 1u << w;
                            items.push_back(1u << v);
                            closed.push_back(nb);
                        }

                    vector<std::uint32_t> blocked;      // per colour: union of closed neighbourhoods
                    vector<vector<int>> lists(n);
                    for (std::size_t i = 0 ; i < items.size() ; ++i) {
                        std::size_t colour = 0;
                        while (colour < blocked.size() && (blocked[colour] & items[i]))
                            ++colour;
                        if (colour == blocked.size())
                            blocked.push_back(0);
                        blocked[colour] |= closed[i];
                        for (int v = 0 ; v < n ; ++v)
                            if ((items[i] >> v) & 1)
                                lists[v].push_back(static_cast<int>(colour));
                    }
                    if (int(blocked.size()) > _universe)
                        return std::nullopt;
                    ListAssignment l{_g, _k, std::move(lists)};
                    l.normalise();
                    return l;
                }

                auto visit() -> bool
                {
                    if (++_count > _cap)
                        throw ResourceError{"adversarial list search exceeded the cap of " + std::to_string(_cap) + " candidates"};
                    if (auto l = realise() ; l && ! solve_list_packing(*l)) {
                        _witness = std::move(l);
                        return false;
                    }
                    return true;
                }

                auto recurse(std::size_t from) -> bool
                {
                    if (! visit())
                        return false;
                    for (std::size_t c = from ; c < _sets.size() ; ++c) {
                        bool fits = true;
                        for (int v = 0 ; v < _g.order() ; ++v)
                            if (((_sets[c] >> v) & 1) && _cover[v] == _k)
                                fits = false;
                        if (! fits)
                            continue;
                        for (int v = 0 ; v < _g.order() ; ++v)
                            _cover[v] += (_sets[c] >> v) & 1;
                        _chosen.push_back(static_cast<int>(c));
                        bool go_on = recurse(c);
                        _chosen.pop_back();
                        for (int v = 0 ; v < _g.order() ; ++v)
                            _cover[v] -= (_sets[c] >> v) & 1;
                        if (! go_on)
                            return false;
                    }
                    return true;
                }

            public:
                ListEnumerator(const Graph & g, int k, int universe, std::uint64_t cap) :
                    _g(g), _k(k), _universe(universe), _cap(cap),
                    _sets(connected_sets(g)),
                    _cover(g.order(), 0)
                {
                    for (auto set : _sets) {
                        std::uint32_t closed = set;
                        for (int v = 0 ; v < g.order() ; ++v)
                            if ((set >> v) & 1)
                                for (int w : g.neighbours(v))
                                    closed |= 1u << w;
                        _closed.push_back(closed);
                    }
                }

                auto run() -> optional<ListAssignment>
                {
                    recurse(0);
                    return _witness;
                }
        };
    }

    auto adversarial_list_search(const Graph & g, int k, int universe, std::uint64_t cap) -> optional<ListAssignment>
    {
        if (g.order() > 20)
            throw InputError{"adversarial list search is limited to 20 vertices"};
        if (k < 1 || k > max_colours)
            throw InputError{"adversarial list search needs 1 <= k <= 16"};
        if (universe < k)
            throw InputError{"universe must hold at least k colours"};
        auto witness = ListEnumerator{g, k, universe, cap}.run();
        // prefer a witness needing as few colours as possible
        for (int fewer = k ; witness && fewer < universe ; ++fewer)
            if (auto w = ListEnumerator{g, k, fewer, cap}.run())
                return w;
        return witness;
    }

    auto parse_mode(const string & s) -> PackingMode
    {
        if (s == "list")
            return PackingMode::list;
        if (s == "correspondence")
            return PackingMode::correspondence;
        throw InputError{"mode must be 'list' or 'correspondence'"};
    }

    auto packing_number(const Graph & g, PackingMode mode, int upper, std::uint64_t cap) -> int
    {
        for (int k = 1 ; k <= upper ; ++k) {
            bool witness = mode == PackingMode::correspondence
                ? adversarial_cover_search(g, k, cap ? cap : default_cover_cap).has_value()
                : adversarial_list_search(g, k, k * std::max(g.order(), 1), cap ? cap : default_list_cap).has_value();
            if (! witness)
                return k;
        }
        throw ResourceError{"packing number exceeds the upper bound " + std::to_string(upper)};
    }
}
