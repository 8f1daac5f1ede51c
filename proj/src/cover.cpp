#include <lpack/cover.hpp>
#include <lpack/errors.hpp>

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

using std::optional;
using std::span;
using std::string;
using std::to_string;
using std::vector;

namespace lpack
{
    using std::to_string;
    Permutation::Permutation(vector<int> image) :
        _image(std::move(image))
    {
        vector<bool> seen(_image.size(), false);
        for (int x : _image) {
            if (x < 0 || x >= int(_image.size()) || seen[x])
                throw InputError{"not a permutation of [0," + to_string(_image.size()) + ")"};
            seen[x] = true;
        }
    }

    auto Permutation::identity(int k) -> Permutation
    {
        vector<int> image(k);
        std::iota(image.begin(), image.end(), 0);
        return Permutation{std::move(image)};
    }

    auto Permutation::inverse() const -> Permutation
    {
        vector<int> inv(_image.size());
        for (int i = 0 ; i < size() ; ++i)
            inv[_image[i]] = i;
        return Permutation{std::move(inv)};
    }

    auto Permutation::is_identity() const -> bool
    {
        for (int i = 0 ; i < size() ; ++i)
            if (_image[i] != i)
                return false;
        return true;
    }

    auto operator* (const Permutation & p, const Permutation & q) -> Permutation
    {
        if (p.size() != q.size())
            throw InputError{"composing permutations of different sizes"};
        vector<int> image(q.size());
        for (int i = 0 ; i < q.size() ; ++i)
            image[i] = p(q(i));
        return Permutation{std::move(image)};
    }

    CorrespondenceCover::CorrespondenceCover(Graph graph, int k, vector<Arc> arcs) :
        _graph(std::move(graph)),
        _k(k)
    {
        if (k < 1 || k > max_colours)
            throw InputError{"cover colour count must be in [1, 16], got " + to_string(k)};
        vector<optional<Arc>> slot(_graph.size());
        for (auto & arc : arcs) {
            int e = (arc.tail >= 0 && arc.head >= 0 && arc.tail < _graph.order() && arc.head < _graph.order())
                ? _graph.edge_index(arc.tail, arc.head) : -1;
            if (e == -1)
                throw InputError{"arc (" + to_string(arc.tail) + "," + to_string(arc.head) + ") is not an edge"};
            if (slot[e])
                throw InputError{"two arcs for edge (" + to_string(arc.tail) + "," + to_string(arc.head) + ")"};
            if (arc.perm.size() != k)
                throw InputError{"arc permutation has size " + to_string(arc.perm.size()) + ", expected " + to_string(k)};
            slot[e] = std::move(arc);
        }
        for (std::size_t e = 0 ; e < slot.size() ; ++e) {
            if (! slot[e])
                throw InputError{"no arc for edge (" + to_string(_graph.edges()[e].first) + "," + to_string(_graph.edges()[e].second) + ")"};
            _arcs.push_back(std::move(*slot[e]));
        }
    }

    auto CorrespondenceCover::identity(Graph graph, int k) -> CorrespondenceCover
    {
        vector<Arc> arcs;
        for (auto & [u, v] : graph.edges())
            arcs.push_back({u, v, Permutation::identity(k)});
        return CorrespondenceCover{std::move(graph), k, std::move(arcs)};
    }

    auto CorrespondenceCover::map(int from, int to) const -> Permutation
    {
        int e = _graph.edge_index(from, to);
        if (e == -1)
            throw InputError{"no edge between " + to_string(from) + " and " + to_string(to)};
        auto & arc = _arcs[e];
        return arc.tail == from ? arc.perm : arc.perm.inverse();
    }

    auto CorrespondenceCover::restricted(span<const int> keep) const -> CorrespondenceCover
    {
        Graph sub = _graph.induced(keep);
        vector<int> position(_graph.order(), -1);
        for (std::size_t i = 0 ; i < keep.size() ; ++i)
            position[keep[i]] = static_cast<int>(i);
        vector<Arc> arcs;
        for (auto & arc : _arcs)
            if (position[arc.tail] != -1 && position[arc.head] != -1)
                arcs.push_back({position[arc.tail], position[arc.head], arc.perm});
        return CorrespondenceCover{std::move(sub), _k, std::move(arcs)};
    }

    auto ListAssignment::normalise() -> void
    {
        if (k < 1 || k > max_colours)
            throw InputError{"list size must be in [1, 16], got " + to_string(k)};
        if (int(lists.size()) != graph.order())
            throw InputError{"need one list per vertex"};
        for (std::size_t v = 0 ; v < lists.size() ; ++v) {
            auto & l = lists[v];
            std::sort(l.begin(), l.end());
            if (int(l.size()) != k || std::adjacent_find(l.begin(), l.end()) != l.end())
                throw InputError{"list of vertex " + to_string(v) + " must hold " + to_string(k) + " distinct colours"};
            if (! l.empty() && l.front() < 0)
                throw InputError{"negative colour in list of vertex " + to_string(v)};
        }
    }

    PartialPacking::PartialPacking(int n, int k) :
        k(k),
        assign(n)
    {
    }

    auto PartialPacking::complete() const -> bool
    {
        return std::all_of(assign.begin(), assign.end(), [] (auto & a) { return ! a.empty(); });
    }

    auto PartialPacking::to_packing() const -> Packing
    {
        if (! complete())
            throw InputError{"partial packing has unpacked vertices"};
        return Packing{k, assign};
    }

    auto straighten(const CorrespondenceCover & c, span<const Edge> forest) -> StraightenResult
    {
        const Graph & g = c.graph();
        int n = g.order(), k = c.colours();

        vector<int> root(n);
        std::iota(root.begin(), root.end(), 0);
        auto find = [&] (int x) {
            while (root[x] != x)
                x = root[x] = root[root[x]];
            return x;
        };
        vector<vector<int>> tree(n);
        for (auto [u, v] : forest) {
            if (u < 0 || v < 0 || u >= n || v >= n || g.edge_index(u, v) == -1)
                throw InputError{"forest edge (" + to_string(u) + "," + to_string(v) + ") is not an edge of the graph"};
            if (find(u) == find(v))
                throw InputError{"edge set is not a forest"};
            root[find(u)] = find(v);
            tree[u].push_back(v);
            tree[v].push_back(u);
        }

        // grow each tree from its least vertex; a child's relabelling makes its parent arc the identity
        vector<optional<Permutation>> relabel(n);
        for (int start = 0 ; start < n ; ++start) {
            if (relabel[start])
                continue;
            relabel[start] = Permutation::identity(k);
            std::queue<int> queue;
            queue.push(start);
            while (! queue.empty()) {
                int u = queue.front();
                queue.pop();
                std::sort(tree[u].begin(), tree[u].end());
                for (int v : tree[u]) {
                    if (relabel[v])
                        continue;
                    relabel[v] = *relabel[u] * c.map(u, v).inverse();
                    queue.push(v);
                }
            }
        }

        vector<Arc> arcs;
        vector<Permutation> result;
        for (auto & r : relabel)
            result.push_back(*r);
        for (auto & arc : c.arcs())
            arcs.push_back({arc.tail, arc.head, result[arc.head] * arc.perm * result[arc.tail].inverse()});
        return {CorrespondenceCover{g, k, std::move(arcs)}, std::move(result)};
    }

    auto relabel_packing(const Packing & p, span<const Permutation> relabel) -> Packing
    {
        Packing out = p;
        for (std::size_t v = 0 ; v < out.assign.size() ; ++v)
            for (auto & colour : out.assign[v])
                colour = relabel[v](colour);
        return out;
    }

    auto unrelabel_packing(const Packing & p, span<const Permutation> relabel) -> Packing
    {
        vector<Permutation> inverses;
        for (auto & r : relabel)
            inverses.push_back(r.inverse());
        return relabel_packing(p, inverses);
    }

    auto list_to_cover(const ListAssignment & given) -> ListCover
    {
        ListAssignment l = given;
        l.normalise();
        auto index_of = [&] (int v, int colour) {
            auto & list = l.lists[v];
            auto it = std::lower_bound(list.begin(), list.end(), colour);
            return (it != list.end() && *it == colour) ? int(it - list.begin()) : -1;
        };

        vector<Arc> arcs;
        for (auto & [u, v] : l.graph.edges()) {
            vector<int> image(l.k, -1);
            vector<bool> taken(l.k, false);
            for (int i = 0 ; i < l.k ; ++i)
                if (int j = index_of(v, l.lists[u][i]) ; j != -1) {
                    image[i] = j;
                    taken[j] = true;
                }
            for (int i = 0 ; i < l.k ; ++i)
                if (image[i] == -1) {
                    int j = int(std::find(taken.begin(), taken.end(), false) - taken.begin());
                    image[i] = j;
                    taken[j] = true;
                }
            arcs.push_back({u, v, Permutation{std::move(image)}});
        }
        return {CorrespondenceCover{l.graph, l.k, std::move(arcs)}, l.lists};
    }

    auto pull_back(const ListCover & lc, const Packing & p) -> Packing
    {
        Packing out = p;
        for (std::size_t v = 0 ; v < out.assign.size() ; ++v)
            for (auto & index : out.assign[v])
                index = lc.colour_of[v][index];
        return out;
    }

    ConflictModel::ConflictModel(int n, int k) :
        _k(k),
        _links(n)
    {
        if (k < 1 || k > max_colours)
            throw InputError{"colour count must be in [1, 16], got " + to_string(k)};
    }

    auto ConflictModel::add_link(int u, int v, const Map & u_to_v) -> void
    {
        Map back;
        back.fill(-1);
        for (int c = 0 ; c < _k ; ++c)
            if (u_to_v[c] >= 0)
                back[u_to_v[c]] = static_cast<std::int8_t>(c);
        _links[u].push_back({v, u_to_v, back});
        _links[v].push_back({u, back, u_to_v});
    }

    auto ConflictModel::from_cover(const CorrespondenceCover & c) -> ConflictModel
    {
        ConflictModel model(c.graph().order(), c.colours());
        for (auto & arc : c.arcs()) {
            Map m;
            m.fill(-1);
            for (int i = 0 ; i < c.colours() ; ++i)
                m[i] = static_cast<std::int8_t>(arc.perm(i));
            model.add_link(arc.tail, arc.head, m);
        }
        return model;
    }

    auto ConflictModel::from_lists(const ListAssignment & given) -> ConflictModel
    {
        ListAssignment l = given;
        l.normalise();
        ConflictModel model(l.graph.order(), l.k);
        for (auto & [u, v] : l.graph.edges()) {
            Map m;
            m.fill(-1);
            for (int i = 0 ; i < l.k ; ++i) {
                auto & list = l.lists[v];
                auto it = std::lower_bound(list.begin(), list.end(), l.lists[u][i]);
                if (it != list.end() && *it == l.lists[u][i])
                    m[i] = static_cast<std::int8_t>(it - list.begin());
            }
            model.add_link(u, v, m);
        }
        return model;
    }

    auto ConflictModel::aux(int v, const PartialPacking & p) const -> Bigraph
    {
        vector<Row> rows(_k, Row((1u << _k) - 1));
        for (auto & link : _links[v]) {
            if (! p.packed(link.other))
                continue;
            auto & theirs = p.assign[link.other];
            for (int j = 0 ; j < _k ; ++j)
                if (int i = link.from_other[theirs[j]] ; i >= 0)
                    rows[i] &= Row(~(1u << j));
        }
        return Bigraph{_k, std::move(rows)};
    }

    auto aux_bigraph(const CorrespondenceCover & c, const PartialPacking & p, int v) -> Bigraph
    {
        if (v < 0 || v >= c.graph().order())
            throw InputError{"vertex out of range"};
        if (p.packed(v))
            throw InputError{"vertex " + to_string(v) + " is already packed"};
        return ConflictModel::from_cover(c).aux(v, p);
    }

    namespace
    {
        // Shape, range and repeats per vertex; returns which vertices are well formed.
        auto check_columns(int n, int k, const Packing & p, const std::function<bool (int, int)> & allowed,
                ValidationReport & report) -> vector<bool>
        {
            vector<bool> ok(n, false);
            if (p.k != k || int(p.assign.size()) != n) {
                report.violations.push_back({Violation::Kind::shape, -1, -1, -1});
                return ok;
            }
            for (int v = 0 ; v < n ; ++v) {
                auto & col = p.assign[v];
                if (int(col.size()) != k) {
                    report.violations.push_back({Violation::Kind::shape, v, v, -1});
                    continue;
                }
                ok[v] = true;
                for (int i = 0 ; i < k ; ++i) {
                    if (! allowed(v, col[i])) {
                        report.violations.push_back({Violation::Kind::range, v, v, i});
                        ok[v] = false;
                    }
                    for (int j = 0 ; j < i ; ++j)
                        if (col[j] == col[i]) {
                            report.violations.push_back({Violation::Kind::repeat, v, v, i});
                            break;
                        }
                }
            }
            return ok;
        }
    }

    auto validate_packing(const CorrespondenceCover & c, const Packing & p) -> ValidationReport
    {
        ValidationReport report;
        int k = c.colours();
        auto ok = check_columns(c.graph().order(), k, p, [&] (int, int colour) { return colour >= 0 && colour < k; }, report);
        if (int(ok.size()) == c.graph().order() && int(p.assign.size()) == c.graph().order())
            for (auto & arc : c.arcs()) {
                if (! ok[arc.tail] || ! ok[arc.head])
                    continue;
                for (int i = 0 ; i < k ; ++i)
                    if (arc.perm(p.assign[arc.tail][i]) == p.assign[arc.head][i])
                        report.violations.push_back({Violation::Kind::arc, arc.tail, arc.head, i});
            }
        report.ok = report.violations.empty();
        return report;
    }

    auto validate_list_packing(const ListAssignment & l, const Packing & p) -> ValidationReport
    {
        ValidationReport report;
        auto in_list = [&] (int v, int colour) {
            return std::find(l.lists[v].begin(), l.lists[v].end(), colour) != l.lists[v].end();
        };
        auto ok = check_columns(l.graph.order(), l.k, p, in_list, report);
        if (int(p.assign.size()) == l.graph.order())
            for (auto & [u, v] : l.graph.edges()) {
                if (! ok[u] || ! ok[v])
                    continue;
                for (int i = 0 ; i < l.k ; ++i)
                    if (p.assign[u][i] == p.assign[v][i])
                        report.violations.push_back({Violation::Kind::arc, u, v, i});
            }
        report.ok = report.violations.empty();
        return report;
    }

    auto validate_partial(const ConflictModel & model, const Graph & g, const PartialPacking & p) -> bool
    {
        int k = model.colours();
        if (int(p.assign.size()) != g.order())
            return false;
        for (int v = 0 ; v < g.order() ; ++v) {
            if (! p.packed(v))
                continue;
            auto & col = p.assign[v];
            if (int(col.size()) != k)
                return false;
            Row seen = 0;
            for (int c : col) {
                if (c < 0 || c >= k || ((seen >> c) & 1))
                    return false;
                seen |= Row(1u << c);
            }
        }
        for (int v = 0 ; v < g.order() ; ++v) {
            if (! p.packed(v))
                continue;
            for (auto & link : model.links(v))
                if (link.other > v && p.packed(link.other))
                    for (int j = 0 ; j < k ; ++j)
                        if (link.to_other[p.assign[v][j]] == p.assign[link.other][j])
                            return false;
        }
        return true;
    }

    auto to_string(Violation::Kind kind) -> string
    {
        switch (kind) {
            case Violation::Kind::shape: return "shape";
            case Violation::Kind::range: return "range";
            case Violation::Kind::repeat: return "repeat";
            case Violation::Kind::arc: return "arc";
        }
        return "?";
    }

    auto random_cover(const Graph & g, int k, Rng & rng) -> CorrespondenceCover
    {
        vector<Arc> arcs;
        for (auto & [u, v] : g.edges()) {
            vector<int> image(k);
            std::iota(image.begin(), image.end(), 0);
            shuffle(span<int>{image}, rng);
            arcs.push_back({u, v, Permutation{std::move(image)}});
        }
        return CorrespondenceCover{g, k, std::move(arcs)};
    }
}
