#include <lpack/errors.hpp>
#include <lpack/graph_measures.hpp>
#include <lpack/solver.hpp>

#include <algorithm>
#include <queue>

using std::optional;
using std::vector;

namespace lpack
{
    namespace
    {
        class Search
        {
            private:
                const Graph & _g;
                const ConflictModel & _model;
                PartialPacking _p;
                vector<int> _order;
                vector<bool> _fix_identity;
                SolveStats * _stats;

                auto viable_after(int v) const -> bool
                {
                    for (auto & link : _model.links(v))
                        if (! _p.packed(link.other) && ! has_one_factor(_model.aux(link.other, _p)))
                            return false;
                    return true;
                }

                auto assign(int v, const Matching & m) -> void
                {
                    auto & col = _p.assign[v];
                    col.assign(_model.colours(), -1);
                    for (int colour = 0 ; colour < int(m.size()) ; ++colour)
                        col[m[colour]] = colour;
                }

                auto recurse(std::size_t t) -> bool
                {
                    if (t == _order.size())
                        return true;
                    int v = _order[t];
                    int k = _model.colours();
                    bool found = false;

                    auto attempt = [&] (const Matching & m) {
                        if (_stats)
                            ++_stats->nodes;
                        assign(v, m);
                        if (viable_after(v) && recurse(t + 1)) {
                            found = true;
                            return false;
                        }
                        return true;
                    };

                    if (_fix_identity[v]) {
                        Matching id(k);
                        for (int i = 0 ; i < k ; ++i)
                            id[i] = i;
                        attempt(id);
                    }
                    else
                        for_each_one_factor(_model.aux(v, _p), attempt);

                    if (! found)
                        _p.assign[v].clear();
                    return found;
                }

            public:
                Search(const Graph & g, const ConflictModel & model, const PartialPacking & start, SolveStats * stats) :
                    _g(g),
                    _model(model),
                    _p(start),
                    _fix_identity(g.order(), false),
                    _stats(stats)
                {
                    auto degen = degeneracy(g);
                    for (auto it = degen.order.rbegin() ; it != degen.order.rend() ; ++it)
                        if (! _p.packed(*it))
                            _order.push_back(*it);

                    // permuting the colourings of a whole component preserves packings, so its
                    // first vertex may take the identity unless something there is already packed
                    vector<int> component(g.order(), -1);
                    vector<bool> has_packed;
                    for (int s = 0 ; s < g.order() ; ++s) {
                        if (component[s] != -1)
                            continue;
                        int id = static_cast<int>(has_packed.size());
                        has_packed.push_back(false);
                        std::queue<int> queue;
                        queue.push(s);
                        component[s] = id;
                        while (! queue.empty()) {
                            int u = queue.front();
                            queue.pop();
                            if (_p.packed(u))
                                has_packed[id] = true;
                            for (int w : g.neighbours(u))
                                if (component[w] == -1) {
                                    component[w] = id;
                                    queue.push(w);
                                }
                        }
                    }
                    vector<bool> seen(has_packed.size(), false);
                    for (int v : _order)
                        if (! seen[component[v]]) {
                            seen[component[v]] = true;
                            _fix_identity[v] = ! has_packed[component[v]];
                        }
                }

                auto run() -> optional<Packing>
                {
                    for (int v : _order)
                        if (! has_one_factor(_model.aux(v, _p)))
                            return std::nullopt;
                    if (! recurse(0))
                        return std::nullopt;
                    return _p.to_packing();
                }
        };
    }

    auto extend_model(const Graph & g, const ConflictModel & model, const PartialPacking & start, SolveStats * stats)
        -> optional<Packing>
    {
        if (model.order() != g.order() || int(start.assign.size()) != g.order())
            throw InputError{"model, graph and partial packing disagree on the vertex count"};
        return Search{g, model, start, stats}.run();
    }

    auto solve_model(const Graph & g, const ConflictModel & model, SolveStats * stats) -> optional<Packing>
    {
        return extend_model(g, model, PartialPacking(g.order(), model.colours()), stats);
    }

    auto solve_packing(const CorrespondenceCover & c) -> optional<Packing>
    {
        return solve_model(c.graph(), ConflictModel::from_cover(c));
    }

    auto solve_list_packing(const ListAssignment & given) -> optional<Packing>
    {
        ListAssignment l = given;
        l.normalise();
        auto indices = solve_model(l.graph, ConflictModel::from_lists(l));
        if (! indices)
            return std::nullopt;
        for (int v = 0 ; v < l.graph.order() ; ++v)
            for (auto & x : indices->assign[v])
                x = l.lists[v][x];
        return indices;
    }

    auto list_colouring(const Graph & g, const vector<vector<int>> & lists) -> optional<vector<int>>
    {
        auto degen = degeneracy(g);
        vector<int> order(degen.order.rbegin(), degen.order.rend());
        vector<int> colour(g.order(), -1);
        vector<bool> done(g.order(), false);

        auto recurse = [&] (auto & self, std::size_t t) -> bool {
            if (t == order.size())
                return true;
            int v = order[t];
            for (int c : lists[v]) {
                bool clash = false;
                for (int w : g.neighbours(v))
                    if (done[w] && colour[w] == c)
                        clash = true;
                if (clash)
                    continue;
                colour[v] = c;
                done[v] = true;
                if (self(self, t + 1))
                    return true;
                done[v] = false;
            }
            return false;
        };
        if (! recurse(recurse, 0))
            return std::nullopt;
        return colour;
    }

    auto pack_by_peeling(const ListAssignment & given, int known_k) -> optional<Packing>
    {
        ListAssignment l = given;
        l.normalise();
        if (known_k < 1 || l.k < known_k)
            throw InputError{"peeling needs 1 <= known_k <= list size"};

        auto lists = l.lists;
        vector<vector<int>> peeled;
        for (int size = l.k ; size > known_k ; --size) {
            auto phi = list_colouring(l.graph, lists);
            if (! phi)
                return std::nullopt;
            for (int v = 0 ; v < l.graph.order() ; ++v)
                lists[v].erase(std::find(lists[v].begin(), lists[v].end(), (*phi)[v]));
            peeled.push_back(std::move(*phi));
        }

        auto base = solve_list_packing(ListAssignment{l.graph, known_k, lists});
        if (! base)
            return std::nullopt;
        Packing result{l.k, base->assign};
        for (auto it = peeled.rbegin() ; it != peeled.rend() ; ++it)
            for (int v = 0 ; v < l.graph.order() ; ++v)
                result.assign[v].push_back((*it)[v]);
        return result;
    }
}
