#include <lpack/errors.hpp>
#include <lpack/json_io.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using std::string;
using std::vector;

namespace lpack
{
    namespace
    {
        template <typename F_>
        auto guarded(const char * what, F_ f)
        {
            try {
                return f();
            }
            catch (const Json::exception & e) {
                throw InputError{string{"malformed "} + what + " JSON: " + e.what()};
            }
        }

        auto members(Row r) -> Json
        {
            Json out = Json::array();
            for (int i = 0 ; i < 16 ; ++i)
                if ((r >> i) & 1)
                    out.push_back(i);
            return out;
        }

        auto edge_json(const BiEdge & e) -> Json { return Json::array({e.first, e.second}); }

        auto edges_json(const vector<BiEdge> & edges) -> Json
        {
            Json out = Json::array();
            for (auto & e : edges)
                out.push_back(edge_json(e));
            return out;
        }

        // vertex-keyed objects: {"<v>": [...]} for v in 0..n-1, every vertex present
        auto vertex_map(const Json & j, int n, const char * what) -> vector<vector<int>>
        {
            if (! j.is_object())
                throw InputError{string{what} + " must be an object keyed by vertex"};
            vector<vector<int>> out(n);
            vector<bool> seen(n);
            for (auto & [key, value] : j.items()) {
                std::size_t used = 0;
                int v = -1;
                try {
                    v = std::stoi(key, &used);
                }
                catch (const std::exception &) {
                }
                if (used != key.size() || v < 0 || v >= n)
                    throw InputError{string{what} + " has a bad vertex key '" + key + "'"};
                out[v] = value.get<vector<int>>();
                seen[v] = true;
            }
            for (int v = 0 ; v < n ; ++v)
                if (! seen[v])
                    throw InputError{string{what} + " is missing vertex " + std::to_string(v)};
            return out;
        }

        auto rational_json(const Rational & r) -> Json { return to_string(r); }
    }

    auto graph_to_json(const Graph & g) -> Json
    {
        Json edges = Json::array();
        for (auto [u, v] : g.edges())
            edges.push_back(Json::array({u, v}));
        return {{"n", g.order()}, {"edges", edges}};
    }

    auto graph_from_json(const Json & j) -> Graph
    {
        return guarded("graph", [&] {
            int n = j.at("n").get<int>();
            if (n < 0)
                throw InputError{"graph order must be non-negative"};
            vector<Edge> edges;
            for (auto & e : j.at("edges")) {
                auto pair = e.get<vector<int>>();
                if (pair.size() != 2)
                    throw InputError{"graph edges must be pairs"};
                edges.emplace_back(pair[0], pair[1]);
            }
            return Graph{n, std::move(edges)};
        });
    }

    auto bigraph_to_json(const Bigraph & h) -> Json
    {
        vector<int> rows(h.rows().begin(), h.rows().end());
        return {{"s", h.side()}, {"rows", rows}};
    }

    auto bigraph_from_json(const Json & j) -> Bigraph
    {
        return guarded("bigraph", [&] {
            int s = j.at("s").get<int>();
            if (s < 0 || s > Bigraph::max_side)
                throw InputError{"bigraph side must be in [0, 16]"};
            if (j.contains("rows")) {
                vector<Row> rows;
                for (auto & r : j.at("rows")) {
                    auto value = r.get<long long>();
                    if (value < 0 || value >= (1ll << s))
                        throw InputError{"bigraph row out of range"};
                    rows.push_back(static_cast<Row>(value));
                }
                return Bigraph{s, std::move(rows)};
            }
            vector<BiEdge> edges;
            for (auto & e : j.at("edges")) {
                auto pair = e.get<vector<int>>();
                if (pair.size() != 2)
                    throw InputError{"bigraph edges must be pairs"};
                edges.emplace_back(pair[0], pair[1]);
            }
            return Bigraph::from_edges(s, edges);
        });
    }

    auto cover_to_json(const CorrespondenceCover & c) -> Json
    {
        Json arcs = Json::array();
        for (auto & a : c.arcs())
            arcs.push_back({{"u", a.tail}, {"v", a.head}, {"perm", vector<int>(a.perm.image().begin(), a.perm.image().end())}});
        return {{"k", c.colours()}, {"graph", graph_to_json(c.graph())}, {"arcs", arcs}};
    }

    auto cover_from_json(const Json & j) -> CorrespondenceCover
    {
        return guarded("cover", [&] {
            Graph g = graph_from_json(j.at("graph"));
            int k = j.at("k").get<int>();
            if (k < 1 || k > max_colours)
                throw InputError{"cover k must be in [1, 16]"};
            vector<Arc> arcs(g.size());
            vector<bool> seen(g.size());
            for (auto & a : j.at("arcs")) {
                int u = a.at("u").get<int>(), v = a.at("v").get<int>();
                if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || ! g.adjacent(u, v))
                    throw InputError{"cover arc " + std::to_string(u) + "->" + std::to_string(v) + " is not an edge"};
                int e = g.edge_index(u, v);
                if (seen[e])
                    throw InputError{"cover has two arcs on one edge"};
                seen[e] = true;
                Permutation p{a.at("perm").get<vector<int>>()};
                if (p.size() != k)
                    throw InputError{"cover permutation has the wrong length"};
                arcs[e] = Arc{u, v, std::move(p)};
            }
            for (std::size_t e = 0 ; e < seen.size() ; ++e)
                if (! seen[e])
                    throw InputError{"cover has no arc on edge " + std::to_string(e)};
            return CorrespondenceCover{std::move(g), k, std::move(arcs)};
        });
    }

    auto packing_to_json(const Packing & p) -> Json
    {
        Json assign = Json::object();
        for (std::size_t v = 0 ; v < p.assign.size() ; ++v)
            assign[std::to_string(v)] = p.assign[v];
        return {{"k", p.k}, {"assign", assign}};
    }

    auto packing_from_json(const Json & j) -> Packing
    {
        return guarded("packing", [&] {
            Packing p;
            p.k = j.at("k").get<int>();
            p.assign = vertex_map(j.at("assign"), static_cast<int>(j.at("assign").size()), "packing assign");
            return p;
        });
    }

    auto lists_to_json(const ListAssignment & l, bool with_graph) -> Json
    {
        Json lists = Json::object();
        for (std::size_t v = 0 ; v < l.lists.size() ; ++v)
            lists[std::to_string(v)] = l.lists[v];
        Json out{{"k", l.k}, {"lists", lists}};
        if (with_graph)
            out["graph"] = graph_to_json(l.graph);
        return out;
    }

    auto lists_from_json(const Json & j, const Graph * graph) -> ListAssignment
    {
        return guarded("lists", [&] {
            ListAssignment l;
            if (j.contains("graph"))
                l.graph = graph_from_json(j.at("graph"));
            else if (graph)
                l.graph = *graph;
            else
                throw InputError{"lists need a graph, inline or given separately"};
            l.k = j.at("k").get<int>();
            l.lists = vertex_map(j.at("lists"), l.graph.order(), "lists");
            l.normalise();
            return l;
        });
    }

    auto obstruction_to_json(const Obstruction & o) -> Json
    {
        Json out{{"side", o.side == Side::a ? "A" : "B"}, {"type", o.type}, {"set", members(o.set)},
            {"neighbourhood", members(o.neighbourhood)}};
        if (o.x1 >= 0)
            out["x1"] = o.x1;
        if (o.e1)
            out["e1"] = edge_json(*o.e1);
        if (o.e2)
            out["e2"] = edge_json(*o.e2);
        return out;
    }

    auto ledger_to_json(const ChargeLedger & l) -> Json
    {
        Json initial = Json::array(), final = Json::array(), transfers = Json::array();
        for (auto & r : l.initial)
            initial.push_back(rational_json(r));
        for (auto & r : l.final)
            final.push_back(rational_json(r));
        for (auto & t : l.transfers)
            transfers.push_back({{"donor", t.donor}, {"recipient", t.recipient}, {"amount", rational_json(t.amount)}});
        Json out{{"initial", initial}, {"final", final}, {"transfers", transfers},
            {"total_initial", rational_json(l.total_initial())}, {"total_final", rational_json(l.total_final())}};
        if (! l.final.empty())
            out["min_final"] = rational_json(l.min_final());
        return out;
    }

    auto trace_to_json(const RepairTrace & t) -> Json
    {
        Json extensions = Json::array();
        for (auto & e : t.extensions) {
            Json steps = Json::array();
            for (auto & s : e.steps)
                steps.push_back({{"unpacked", s.unpacked}, {"chosen", s.chosen}, {"candidates", s.candidates}, {"success", s.success}});
            extensions.push_back({{"kind", to_string(e.kind)}, {"frontier", e.frontier}, {"steps", steps}, {"budget_used", e.budget_used}});
        }
        return {{"success", t.success}, {"max_budget_used", t.max_budget_used}, {"extensions", extensions}};
    }

    auto instance_to_json(const StructuredInstance & inst) -> Json
    {
        auto & d = inst.decorations;
        Json cycles = Json::array();
        for (auto & c : d.cycles)
            cycles.push_back(edges_json(c));
        Json deco{{"cycles", cycles}, {"matching", edges_json(d.matching)}, {"one_factor", d.one_factor},
            {"violator", members(d.violator)}, {"special", edges_json(d.special)}};
        if (d.x1 >= 0)
            deco["x1"] = d.x1;
        Json out{{"h", bigraph_to_json(inst.h)}, {"param", inst.param}, {"decorations", deco}};
        if (inst.modified)
            out["modified"] = bigraph_to_json(*inst.modified);
        if (inst.cover)
            out["cover"] = cover_to_json(*inst.cover);
        if (inst.vertex >= 0)
            out["vertex"] = inst.vertex;
        return out;
    }

    auto report_to_json(const VerifierReport & r, bool with_timing) -> Json
    {
        Json counterexamples = Json::array();
        for (auto & c : r.counterexamples)
            counterexamples.push_back(instance_to_json(c));
        Json out{{"lemma", r.lemma}, {"strategy", r.strategy}, {"trials", r.trials}, {"instances_checked", r.instances_checked},
            {"vacuous", r.vacuous}, {"per_variant", r.per_variant}, {"notes", r.notes},
            {"counterexamples", counterexamples}, {"seed", r.seed}};
        if (with_timing)
            out["elapsed_seconds"] = r.elapsed_seconds;
        return out;
    }

    auto read_json_file(const string & path) -> Json
    {
        string text;
        if (path == "-")
            text.assign(std::istreambuf_iterator<char>{std::cin}, {});
        else {
            std::ifstream in{path};
            if (! in)
                throw InputError{"cannot open '" + path + "'"};
            text.assign(std::istreambuf_iterator<char>{in}, {});
        }
        try {
            return Json::parse(text);
        }
        catch (const Json::parse_error & e) {
            throw InputError{"'" + path + "' is not valid JSON: " + e.what()};
        }
    }

    auto dump(const Json & j) -> string
    {
        return j.dump(2) + "\n";
    }
}
