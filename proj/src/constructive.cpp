#include <lpack/constructive.hpp>
#include <lpack/errors.hpp>
#include <lpack/graph_measures.hpp>
#include <lpack/obstruction.hpp>

#include <algorithm>
#include <set>

using std::optional;
using std::string;
using std::vector;

namespace lpack
{
    auto parse_regime(const string & s) -> Regime
    {
        if (s == "mad4_k5")
            return Regime::mad4_k5;
        if (s == "girth5_k4")
            return Regime::girth5_k4;
        if (s == "planar_k8")
            return Regime::planar_k8;
        throw InputError{"unknown regime '" + s + "'"};
    }

    auto to_string(Regime r) -> string
    {
        switch (r) {
            case Regime::mad4_k5: return "mad4_k5";
            case Regime::girth5_k4: return "girth5_k4";
            case Regime::planar_k8: return "planar_k8";
        }
        return "?";
    }

    auto regime_colours(Regime r) -> int
    {
        switch (r) {
            case Regime::mad4_k5: return 5;
            case Regime::girth5_k4: return 4;
            case Regime::planar_k8: return 8;
        }
        return 0;
    }

    auto to_string(ReductionKind kind) -> string
    {
        switch (kind) {
            case ReductionKind::low_degree_vertex: return "low_degree_vertex";
            case ReductionKind::light_edge: return "light_edge";
            case ReductionKind::path_3_3_3: return "path_3_3_3";
            case ReductionKind::five_with_four_threes: return "five_with_four_threes";
            case ReductionKind::light_triangle: return "light_triangle";
            case ReductionKind::min_degree_vertex: return "min_degree_vertex";
        }
        return "?";
    }

    namespace
    {
        auto low_degree(const Graph & g, int bound) -> optional<Reduction>
        {
            for (int v = 0 ; v < g.order() ; ++v)
                if (g.degree(v) <= bound)
                    return Reduction{ReductionKind::low_degree_vertex, {v}, {v}, {}};
            return std::nullopt;
        }

        auto try_reduction(const Graph & g, Regime regime) -> optional<Reduction>
        {
            switch (regime) {
                case Regime::mad4_k5:
                    if (auto r = low_degree(g, 2))
                        return r;
                    if (auto e = find_light_edge(g, 3))
                        return Reduction{ReductionKind::light_edge, {e->low, e->other}, {e->low}, {e->other}};
                    if (auto f = find_five_with_four_threes(g))
                        return Reduction{ReductionKind::five_with_four_threes, {f->begin(), f->end()}, {f->begin(), f->end()}, {}};
                    break;

                case Regime::girth5_k4:
                    if (auto r = low_degree(g, 2))
                        return r;
                    if (auto p = find_path_of_threes(g))
                        return Reduction{ReductionKind::path_3_3_3, {p->begin(), p->end()}, {(*p)[1]}, {(*p)[0], (*p)[2]}};
                    break;

                case Regime::planar_k8:
                    if (auto r = low_degree(g, 4))
                        return r;
                    if (auto t = find_light_triangle(g, 17)) {
                        vector<int> tri{t->vertices.begin(), t->vertices.end()};
                        std::stable_sort(tri.begin(), tri.end(), [&] (int a, int b) { return g.degree(a) < g.degree(b); });
                        return Reduction{ReductionKind::light_triangle, tri, {tri[0]}, {tri[1], tri[2]}};
                    }
                    break;
            }
            return std::nullopt;
        }
    }

    auto find_reduction(const Graph & g, Regime regime) -> Reduction
    {
        if (g.order() == 0)
            throw InputError{"find_reduction needs a nonempty graph"};
        if (auto r = try_reduction(g, regime))
            return *r;
        throw ClassViolation{"no " + to_string(regime) + " reduction: the graph is outside the regime's class"};
    }

    namespace
    {
        auto assign_matching(PartialPacking & q, int v, const Matching & m) -> void
        {
            auto & col = q.assign[v];
            col.assign(m.size(), -1);
            for (int colour = 0 ; colour < int(m.size()) ; ++colour)
                col[m[colour]] = colour;
        }

        // Colour/colouring pairs of released neighbours whose current use blocks an edge the stuck
        // frontier vertex needs.
        struct Guidance
        {
            vector<vector<std::pair<int, int>>> blocking;   // per vertex: (colour, colouring)

            auto score(int v) const -> int { return static_cast<int>(blocking[v].size()); }

            auto released_by(int v, const Matching & m) const -> int
            {
                int freed = 0;
                for (auto [colour, j] : blocking[v])
                    if (m[colour] != j)
                        ++freed;
                return freed;
            }
        };

        class Repairer
        {
            private:
                const Graph & _g;
                const ConflictModel & _model;
                const RepairOptions & _options;
                Guidance _guide;

                std::uint64_t _candidates = 0, _cap = 0;
                bool _capped = false;

                auto viable(const PartialPacking & q, const vector<int> & vars, std::size_t from) const -> bool
                {
                    for (std::size_t t = from ; t < vars.size() ; ++t)
                        if (! has_one_factor(_model.aux(vars[t], q)))
                            return false;
                    return true;
                }

                auto search(PartialPacking & q, const vector<int> & vars, std::size_t t, std::size_t released) -> bool
                {
                    if (t == vars.size())
                        return true;
                    int v = vars[t];
                    Bigraph h = _model.aux(v, q);

                    if (t + 1 == vars.size()) {
                        auto m = one_factor(h);
                        if (! m)
                            return false;
                        if (t < released && ++_candidates > _cap) {
                            _capped = true;
                            return false;
                        }
                        assign_matching(q, v, *m);
                        return true;
                    }

                    bool found = false;
                    auto attempt = [&] (const Matching & m) {
                        if (t < released && ++_candidates > _cap) {
                            _capped = true;
                            return false;
                        }
                        assign_matching(q, v, m);
                        if (viable(q, vars, t + 1) && search(q, vars, t + 1, released)) {
                            found = true;
                            return false;
                        }
                        return ! _capped;
                    };

                    if (t == 0 && released > 0 && _guide.score(v) > 0) {
                        // the outermost released vertex tries matchings that free the most blocked edges first
                        vector<Matching> all;
                        for_each_one_factor(h, [&] (const Matching & m) { all.push_back(m); return true; });
                        std::stable_sort(all.begin(), all.end(), [&] (const Matching & a, const Matching & b) {
                                return _guide.released_by(v, a) > _guide.released_by(v, b); });
                        for (auto & m : all)
                            if (! attempt(m))
                                break;
                    }
                    else
                        for_each_one_factor(h, attempt);

                    if (! found)
                        q.assign[v].clear();
                    return found;
                }

            public:
                Repairer(const Graph & g, const ConflictModel & model, const RepairOptions & options) :
                    _g(g), _model(model), _options(options)
                {
                    _guide.blocking.resize(g.order());
                }

                auto guide(const PartialPacking & p, const vector<int> & frontier) -> void
                {
                    int k = _model.colours();
                    for (int b : frontier) {
                        Bigraph h = _model.aux(b, p);
                        if (has_one_factor(h))
                            continue;

                        // needed: absent edges from the violator to colourings outside its neighbourhood
                        vector<std::pair<int, int>> needed;
                        auto add_needed = [&] (Row colours, Row colourings) {
                            for (int i = 0 ; i < k ; ++i)
                                for (int j = 0 ; j < k ; ++j)
                                    if (((colours >> i) & 1) && ((colourings >> j) & 1) && ! h.has_edge(i, j))
                                        needed.emplace_back(i, j);
                        };
                        if (k == 8 && is_st(h, 8, 3)) {
                            auto o = classify_obstruction(h);
                            Row x = o->set;
                            if (o->x1 != -1)
                                x |= Row(1u << o->x1);
                            if (o->side == Side::a)
                                add_needed(x, h.full() & ~o->neighbourhood);
                            else
                                add_needed(h.full() & ~o->neighbourhood, x);
                        }
                        else {
                            auto x = hall_violator(h);
                            add_needed(x->set, h.full() & ~x->neighbourhood);
                        }

                        for (auto & link : _model.links(b)) {
                            if (! p.packed(link.other))
                                continue;
                            auto & theirs = p.assign[link.other];
                            for (auto [i, j] : needed)
                                if (link.to_other[i] >= 0 && theirs[j] == link.to_other[i])
                                    _guide.blocking[link.other].emplace_back(link.to_other[i], j);
                        }
                        break;
                    }
                }

                auto candidates(const PartialPacking & p, const vector<int> & frontier) const -> vector<int>
                {
                    std::set<int> in_frontier(frontier.begin(), frontier.end()), seen;
                    vector<int> others;
                    for (int f : frontier)
                        for (int w : _g.neighbours(f))
                            if (p.packed(w) && ! in_frontier.count(w) && seen.insert(w).second)
                                others.push_back(w);

                    vector<int> result;
                    for (int w : _options.preferred)
                        if (seen.count(w) && std::find(result.begin(), result.end(), w) == result.end())
                            result.push_back(w);
                    std::sort(others.begin(), others.end(), [&] (int a, int b) {
                            return std::pair{-_guide.score(a), a} < std::pair{-_guide.score(b), b}; });
                    for (int w : others)
                        if (std::find(result.begin(), result.end(), w) == result.end())
                            result.push_back(w);
                    return result;
                }

                auto attempt(const PartialPacking & p, const vector<int> & frontier, const vector<int> & released,
                        std::uint64_t cap, RepairStep & step) -> optional<PartialPacking>
                {
                    PartialPacking q = p;
                    for (int w : released)
                        q.assign[w].clear();
                    vector<int> vars = released;
                    vars.insert(vars.end(), frontier.begin(), frontier.end());

                    _candidates = 0;
                    _cap = cap;
                    _capped = false;
                    step.unpacked = released;
                    bool ok = viable(q, vars, 0) && search(q, vars, 0, released.size());
                    step.candidates = _candidates;
                    step.success = ok;
                    if (! ok)
                        return std::nullopt;
                    for (int v : vars)
                        step.chosen.push_back(q.assign[v]);
                    return q;
                }
        };
    }

    auto extend_with_repair(const Graph & g, const ConflictModel & model, const PartialPacking & p,
            const vector<int> & frontier, const RepairOptions & options) -> ExtendResult
    {
        if (options.budget < 0)
            throw InputError{"repair budget must be non-negative"};
        for (int v : frontier)
            if (v < 0 || v >= g.order() || p.packed(v))
                throw InputError{"frontier vertices must be unpacked vertices of the graph"};

        ExtendResult result;
        Repairer repairer(g, model, options);

        auto record = [&] (RepairStep step, optional<PartialPacking> q) {
            result.steps.push_back(std::move(step));
            if (q) {
                result.success = true;
                result.packing = std::move(*q);
                result.budget_used = static_cast<int>(result.steps.back().unpacked.size());
            }
            return result.success;
        };

        {
            RepairStep step;
            auto q = repairer.attempt(p, frontier, {}, UINT64_MAX, step);
            if (record(std::move(step), std::move(q)))
                return result;
        }
        if (options.budget < 1)
            return result;

        repairer.guide(p, frontier);
        auto nbrs = repairer.candidates(p, frontier);
        for (int u : nbrs) {
            RepairStep step;
            auto q = repairer.attempt(p, frontier, {u}, options.pair_cap, step);
            if (record(std::move(step), std::move(q)))
                return result;
        }
        if (options.budget < 2)
            return result;

        for (std::size_t a = 0 ; a < nbrs.size() ; ++a)
            for (std::size_t b = a + 1 ; b < nbrs.size() ; ++b) {
                RepairStep step;
                auto q = repairer.attempt(p, frontier, {nbrs[a], nbrs[b]}, options.pair_cap, step);
                if (record(std::move(step), std::move(q)))
                    return result;
            }
        return result;
    }

    auto extend_with_repair(const CorrespondenceCover & c, const PartialPacking & p, const vector<int> & frontier, int budget)
        -> ExtendResult
    {
        RepairOptions options;
        options.budget = budget;
        return extend_with_repair(c.graph(), ConflictModel::from_cover(c), p, frontier, options);
    }

    auto pack_constructive(const CorrespondenceCover & c, Regime regime, const PackOptions & options) -> PackResult
    {
        const Graph & g = c.graph();
        if (c.colours() != regime_colours(regime))
            throw InputError{to_string(regime) + " needs " + std::to_string(regime_colours(regime)) + " colours, the cover has "
                + std::to_string(c.colours())};

        if (options.check_class) {
            if (regime == Regime::girth5_k4) {
                auto gi = girth(g);
                if (gi && *gi < 4)
                    throw ClassViolation{"girth5_k4 needs a triangle-free graph"};
                if (mad(g) >= Rational{10, 3})
                    throw ClassViolation{"girth5_k4 needs mad < 10/3"};
            }
            else if (regime == Regime::mad4_k5 && mad(g) >= Rational{4})
                throw ClassViolation{"mad4_k5 needs mad < 4"};
        }

        PackResult result;
        vector<int> alive(g.order());
        for (int v = 0 ; v < g.order() ; ++v)
            alive[v] = v;
        while (! alive.empty()) {
            Graph sub = g.induced(alive);
            auto r = try_reduction(sub, regime);
            if (! r) {
                if (options.check_class)
                    throw ClassViolation{"no " + to_string(regime) + " reduction: the graph is outside the regime's class"};
                int v = 0;
                for (int u = 1 ; u < sub.order() ; ++u)
                    if (sub.degree(u) < sub.degree(v))
                        v = u;
                r = Reduction{ReductionKind::min_degree_vertex, {v}, {v}, {}};
            }
            for (auto * part : {&r->vertices, &r->removed, &r->repair})
                for (auto & v : *part)
                    v = alive[v];
            std::set<int> gone(r->removed.begin(), r->removed.end());
            std::erase_if(alive, [&] (int v) { return gone.count(v); });
            result.reductions.push_back(std::move(*r));
        }

        auto model = ConflictModel::from_cover(c);
        PartialPacking p(g.order(), c.colours());
        for (auto it = result.reductions.rbegin() ; it != result.reductions.rend() ; ++it) {
            RepairOptions repair;
            repair.budget = options.budget;
            repair.pair_cap = options.pair_cap;
            repair.preferred = it->repair;
            auto extended = extend_with_repair(g, model, p, it->removed, repair);
            result.trace.extensions.push_back({it->kind, it->removed, extended.steps, extended.budget_used});
            if (! extended.success) {
                result.trace.success = false;
                throw ExtensionFailure{"extension to {" + [&] {
                        string s;
                        for (int v : it->removed)
                            s += (s.empty() ? "" : ",") + std::to_string(v);
                        return s; }() + "} failed within budget " + std::to_string(options.budget), result.trace};
            }
            result.trace.max_budget_used = std::max(result.trace.max_budget_used, extended.budget_used);
            p = std::move(extended.packing);
            if (! validate_partial(model, g, p))
                throw std::logic_error{"repair produced an invalid partial packing"};
        }

        result.packing = p.to_packing();
        result.trace.success = true;
        if (! validate_packing(c, result.packing).ok)
            throw std::logic_error{"constructive packing failed validation"};
        return result;
    }
}
