#include <lpack/bigraph.hpp>
#include <lpack/errors.hpp>

#include <algorithm>
#include <bit>
#include <queue>
#include <string>

using std::optional;
using std::span;
using std::string;
using std::to_string;
using std::vector;

namespace lpack
{
    auto popcount(Row r) -> int
    {
        return std::popcount(static_cast<unsigned>(r));
    }

    Bigraph::Bigraph(int s) :
        _s(s),
        _rows(s, 0)
    {
        if (s < 0 || s > max_side)
            throw InputError{"bigraph side must be in [0, 16], got " + to_string(s)};
    }

    Bigraph::Bigraph(int s, vector<Row> rows) :
        Bigraph(s)
    {
        if (int(rows.size()) != s)
            throw InputError{"bigraph with s = " + to_string(s) + " needs " + to_string(s) + " rows"};
        for (auto r : rows)
            if (r & ~full())
                throw InputError{"bigraph row has bits beyond s = " + to_string(s)};
        _rows = std::move(rows);
    }

    auto Bigraph::complete(int s) -> Bigraph
    {
        Bigraph h(s);
        for (auto & r : h._rows)
            r = h.full();
        return h;
    }

    auto Bigraph::from_edges(int s, span<const BiEdge> edges) -> Bigraph
    {
        Bigraph h(s);
        for (auto [i, j] : edges) {
            if (i < 0 || j < 0 || i >= s || j >= s)
                throw InputError{"bigraph edge (" + to_string(i) + "," + to_string(j) + ") out of range"};
            h.add_edge(i, j);
        }
        return h;
    }

    auto Bigraph::column(int j) const -> Row
    {
        Row c = 0;
        for (int i = 0 ; i < _s ; ++i)
            if (has_edge(i, j))
                c |= Row(1u << i);
        return c;
    }

    auto Bigraph::add_edge(int i, int j) -> void
    {
        _rows[i] |= Row(1u << j);
    }

    auto Bigraph::remove_edge(int i, int j) -> void
    {
        _rows[i] &= Row(~(1u << j));
    }

    auto Bigraph::without(span<const BiEdge> edges) const -> Bigraph
    {
        Bigraph h = *this;
        for (auto [i, j] : edges)
            h.remove_edge(i, j);
        return h;
    }

    auto Bigraph::with(span<const BiEdge> edges) const -> Bigraph
    {
        Bigraph h = *this;
        for (auto [i, j] : edges)
            h.add_edge(i, j);
        return h;
    }

    auto Bigraph::degree_a(int i) const -> int
    {
        return popcount(_rows[i]);
    }

    auto Bigraph::degree_b(int j) const -> int
    {
        return popcount(column(j));
    }

    auto Bigraph::edge_count() const -> int
    {
        int total = 0;
        for (auto r : _rows)
            total += popcount(r);
        return total;
    }

    auto Bigraph::edge_list() const -> vector<BiEdge>
    {
        vector<BiEdge> result;
        for (int i = 0 ; i < _s ; ++i)
            for (int j = 0 ; j < _s ; ++j)
                if (has_edge(i, j))
                    result.emplace_back(i, j);
        return result;
    }

    auto Bigraph::neighbourhood(Row x) const -> Row
    {
        Row n = 0;
        for (int i = 0 ; i < _s ; ++i)
            if ((x >> i) & 1)
                n |= _rows[i];
        return n;
    }

    auto Bigraph::neighbourhood_table() const -> vector<Row>
    {
        vector<Row> table(std::size_t{1} << _s);
        kernels::neighbourhood_table(_rows, table);
        return table;
    }

    auto swap(const Bigraph & h) -> Bigraph
    {
        Bigraph t(h.side());
        for (int i = 0 ; i < h.side() ; ++i)
            for (int j = 0 ; j < h.side() ; ++j)
                if (h.has_edge(i, j))
                    t.add_edge(j, i);
        return t;
    }

    namespace
    {
        auto augment(span<const Row> rows, int a, Row & visited, vector<int> & mate_a, vector<int> & mate_b) -> bool
        {
            for (Row options = rows[a] & ~visited ; options ; options &= options - 1) {
                int b = std::countr_zero(static_cast<unsigned>(options));
                visited |= Row(1u << b);
                if (mate_b[b] == -1 || augment(rows, mate_b[b], visited, mate_a, mate_b)) {
                    mate_a[a] = b;
                    mate_b[b] = a;
                    return true;
                }
            }
            return false;
        }

        auto matching_of_rows(span<const Row> rows, int s) -> vector<int>
        {
            vector<int> mate_a(rows.size(), -1), mate_b(s, -1);
            for (int a = 0 ; a < int(rows.size()) ; ++a) {
                Row visited = 0;
                augment(rows, a, visited, mate_a, mate_b);
            }
            return mate_a;
        }

        // Can rows[from..] be matched injectively into columns outside `used`?
        auto completable(span<const Row> rows, int from, Row used, int s) -> bool
        {
            vector<Row> rest;
            for (int i = from ; i < int(rows.size()) ; ++i) {
                Row r = rows[i] & ~used;
                if (! r)
                    return false;
                rest.push_back(r);
            }
            auto mate = matching_of_rows(rest, s);
            return std::find(mate.begin(), mate.end(), -1) == mate.end();
        }
    }

    auto max_matching(const Bigraph & h) -> Matching
    {
        return matching_of_rows(h.rows(), h.side());
    }

    auto matching_size(const Matching & m) -> int
    {
        return static_cast<int>(std::count_if(m.begin(), m.end(), [] (int b) { return b != -1; }));
    }

    auto has_one_factor(const Bigraph & h) -> bool
    {
        return matching_size(max_matching(h)) == h.side();
    }

    auto one_factor(const Bigraph & h) -> optional<Matching>
    {
        auto m = max_matching(h);
        if (matching_size(m) != h.side())
            return std::nullopt;
        return m;
    }

    auto one_factor_with(const Bigraph & h, span<const BiEdge> include, span<const BiEdge> exclude) -> optional<Matching>
    {
        Row used_a = 0, used_b = 0;
        for (auto [i, j] : include) {
            if (i < 0 || j < 0 || i >= h.side() || j >= h.side() || ! h.has_edge(i, j))
                throw InputError{"included pair (" + to_string(i) + "," + to_string(j) + ") is not an edge"};
            if (((used_a >> i) & 1) || ((used_b >> j) & 1))
                throw InputError{"included edges do not form a matching"};
            used_a |= Row(1u << i);
            used_b |= Row(1u << j);
        }

        Bigraph reduced = h;
        for (auto [i, j] : exclude)
            if (i >= 0 && j >= 0 && i < h.side() && j < h.side())
                reduced.remove_edge(i, j);
        vector<Row> rows(reduced.rows().begin(), reduced.rows().end());
        for (auto [i, j] : include) {
            if (! reduced.has_edge(i, j))
                return std::nullopt;
            rows[i] = Row(1u << j);
        }
        for (int i = 0 ; i < h.side() ; ++i)
            if (! ((used_a >> i) & 1))
                rows[i] &= ~used_b;

        return one_factor(Bigraph{h.side(), std::move(rows)});
    }

    auto count_one_factors(const Bigraph & h) -> std::uint64_t
    {
        int s = h.side();
        vector<std::uint64_t> ways(std::size_t{1} << s, 0);
        ways[0] = 1;
        for (std::uint32_t used = 0 ; used < (1u << s) ; ++used) {
            if (! ways[used])
                continue;
            int i = std::popcount(used);
            if (i == s)
                continue;
            for (Row options = h.row(i) & ~used ; options ; options &= options - 1)
                ways[used | (options & -options)] += ways[used];
        }
        return ways[(1u << s) - 1];
    }

    auto for_each_one_factor(const Bigraph & h, const std::function<bool (const Matching &)> & visit) -> std::uint64_t
    {
        int s = h.side();
        Matching current(s, -1);
        std::uint64_t count = 0;
        bool stopped = false;

        auto recurse = [&] (auto & self, int i, Row used) -> void {
            if (i == s) {
                ++count;
                if (! visit(current))
                    stopped = true;
                return;
            }
            for (Row options = h.row(i) & ~used ; options && ! stopped ; options &= options - 1) {
                int b = std::countr_zero(static_cast<unsigned>(options));
                Row next = used | Row(1u << b);
                if (! completable(h.rows(), i + 1, next, s))
                    continue;
                current[i] = b;
                self(self, i + 1, next);
            }
            current[i] = -1;
        };
        if (s == 0 || completable(h.rows(), 0, 0, s))
            recurse(recurse, 0, 0);
        return count;
    }

    auto matchable_edges(const Bigraph & h) -> Bigraph
    {
        Bigraph result(h.side());
        for (auto e : h.edge_list())
            if (one_factor_with(h, span<const BiEdge>{&e, 1}, {}))
                result.add_edge(e.first, e.second);
        return result;
    }

    auto hall_violator(const Bigraph & h) -> optional<HallViolator>
    {
        int s = h.side();
        auto mate_a = max_matching(h);
        vector<int> mate_b(s, -1);
        for (int a = 0 ; a < s ; ++a)
            if (mate_a[a] != -1)
                mate_b[mate_a[a]] = a;
        if (matching_size(mate_a) == s)
            return std::nullopt;

        // A-vertices reachable by alternating paths from unmatched B-vertices lie in no
        // maximum-deficiency set; everything else forms the largest one
        vector<Row> columns(s);
        for (int j = 0 ; j < s ; ++j)
            columns[j] = h.column(j);
        Row reached_a = 0, reached_b = 0;
        std::queue<int> queue;
        for (int b = 0 ; b < s ; ++b)
            if (mate_b[b] == -1) {
                reached_b |= Row(1u << b);
                queue.push(b);
            }
        while (! queue.empty()) {
            int b = queue.front();
            queue.pop();
            for (Row options = columns[b] & ~reached_a ; options ; options &= options - 1) {
                int a = std::countr_zero(static_cast<unsigned>(options));
                if (mate_a[a] == b)
                    continue;
                reached_a |= Row(1u << a);
                int next = mate_a[a];
                if (next != -1 && ! ((reached_b >> next) & 1)) {
                    reached_b |= Row(1u << next);
                    queue.push(next);
                }
            }
        }
        Row x = h.full() & ~reached_a;
        return HallViolator{x, h.neighbourhood(x)};
    }

    auto degree_profile(const Bigraph & h) -> DegreeProfile
    {
        DegreeProfile p;
        for (int i = 0 ; i < h.side() ; ++i) {
            p.a.push_back(h.degree_a(i));
            p.b.push_back(h.degree_b(i));
        }
        std::sort(p.a.begin(), p.a.end());
        std::sort(p.b.begin(), p.b.end());
        return p;
    }

    auto min_degree(const Bigraph & h) -> int
    {
        if (h.side() == 0)
            return 0;
        auto p = degree_profile(h);
        return std::min(p.a.front(), p.b.front());
    }

    auto is_st(const Bigraph & h, int s, int t) -> bool
    {
        return h.side() == s && (s == 0 || min_degree(h) >= t);
    }

    auto is_one_factor(const Bigraph & h, const Matching & m) -> bool
    {
        if (int(m.size()) != h.side())
            return false;
        Row seen = 0;
        for (int i = 0 ; i < h.side() ; ++i) {
            if (m[i] < 0 || m[i] >= h.side() || ! h.has_edge(i, m[i]) || ((seen >> m[i]) & 1))
                return false;
            seen |= Row(1u << m[i]);
        }
        return true;
    }

    auto matching_edges(const Matching & m) -> vector<BiEdge>
    {
        vector<BiEdge> edges;
        for (int i = 0 ; i < int(m.size()) ; ++i)
            if (m[i] != -1)
                edges.emplace_back(i, m[i]);
        return edges;
    }

    auto removable_edges(const Bigraph & h, const Matching & m) -> vector<BiEdge>
    {
        if (! is_one_factor(h, m))
            throw InputError{"removable_edges needs a 1-factor of the bigraph"};
        vector<BiEdge> result;
        for (auto e : matching_edges(m))
            if (has_one_factor(h.without(span<const BiEdge>{&e, 1})))
                result.push_back(e);
        return result;
    }
}
