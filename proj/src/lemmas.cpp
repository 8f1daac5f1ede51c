#include "sampling.hpp"

#include <lpack/errors.hpp>
#include <lpack/harness.hpp>
#include <lpack/obstruction.hpp>
#include <lpack/solver.hpp>

#include <algorithm>
#include <numeric>
#include <set>

using std::optional;
using std::string;
using std::vector;

namespace lpack
{
    using namespace sampling;

    namespace
    {
        auto bits_4x4(const Bigraph & h) -> std::uint16_t
        {
            std::uint16_t bits = 0;
            for (int i = 0 ; i < 4 ; ++i)
                bits |= std::uint16_t(h.row(i) << (4 * i));
            return bits;
        }

        auto deficiency(const Bigraph & h) -> kernels::DeficiencyScan
        {
            vector<std::uint16_t> table(std::size_t{1} << h.side());
            kernels::neighbourhood_table(h.rows(), table);
            return kernels::scan_deficiency(table);
        }

        // Maximum degree of the graph formed by the given edge set, on either side.
        auto max_degree_of(const vector<BiEdge> & edges, int s) -> int
        {
            vector<int> da(s), db(s);
            int best = 0;
            for (auto [i, j] : edges)
                best = std::max({best, ++da[i], ++db[j]});
            return best;
        }

        auto difference(const Bigraph & a, const Bigraph & b) -> vector<BiEdge>
        {
            vector<BiEdge> d;
            for (auto [i, j] : a.edge_list())
                if (! b.has_edge(i, j))
                    d.emplace_back(i, j);
            return d;
        }

        auto exhaustive_4x4(LemmaSpec & spec, int param) -> void
        {
            spec.exhaustive_count = 1u << 16;
            spec.enumerate = [param] (std::uint64_t i) -> optional<StructuredInstance> {
                StructuredInstance inst;
                inst.h = bigraph_from_4x4(static_cast<std::uint16_t>(i));
                inst.param = param;
                return inst;
            };
        }

        // A random (s, t)-bigraph, sparse before filling so degrees sit near t.
        auto near_threshold(Rng & rng, int s, int t) -> Bigraph
        {
            Bigraph h = random_bigraph(rng, s, double(below(rng, 4)) / 20);
            fill_min_degree(h, t, rng);
            return h;
        }

        // X of size |x| complete to a |x| - 1 set, no edges from X beyond it; (s, t) minimum degree.
        auto planted_violator(Rng & rng, int s, int t, int x_size, int n_size) -> optional<Bigraph>
        {
            Row x = Row((1u << x_size) - 1), nx = Row((1u << n_size) - 1);
            Bigraph h(s);
            for (int i = 0 ; i < x_size ; ++i)
                for (int j = 0 ; j < n_size ; ++j)
                    h.add_edge(i, j);
            double p = double(below(rng, 5)) / 10;
            auto allowed = [&] (int i, int j) { return ! ((x >> i) & 1) || ((nx >> j) & 1); };
            for (int i = x_size ; i < s ; ++i)
                for (int j = 0 ; j < s ; ++j)
                    if (coin(rng, p))
                        h.add_edge(i, j);
            thin(h, t, double(below(rng, 3)) / 4, rng);
            if (! fill_min_degree(h, t, rng, allowed))
                return std::nullopt;
            return relabel(h, random_permutation(rng, s), random_permutation(rng, s));
        }

        auto easy_prop() -> LemmaSpec
        {
            LemmaSpec spec;
            spec.name = "easy_prop";
            spec.instance_builder = "all 4x4 bit matrices (t = 2); random (s, t)-bigraphs with s in [2t, 2t+3], half with a planted violator";
            spec.variants = {3, 4};
            exhaustive_4x4(spec, 2);
            spec.sample = [] (Rng & rng, int t) -> optional<StructuredInstance> {
                int s = 2 * t + static_cast<int>(below(rng, 4));
                StructuredInstance inst;
                inst.param = t;
                if (s > 2 * t && coin(rng, 0.5)) {
                    int x = t + 1 + static_cast<int>(below(rng, s - 2 * t));
                    auto h = planted_violator(rng, s, t, x, x - 1);
                    if (! h)
                        return std::nullopt;
                    inst.h = *h;
                }
                else
                    inst.h = near_threshold(rng, s, t);
                return inst;
            };
            spec.precondition = [] (const StructuredInstance & inst) { return is_st(inst.h, inst.h.side(), inst.param); };
            spec.property = [] (const StructuredInstance & inst) {
                int s = inst.h.side(), t = inst.param;
                auto scan = deficiency(inst.h);
                if (scan.max_violator == 0)
                    return true;
                return s != 2 * t && scan.min_violator >= t + 1 && scan.max_violator <= s - t;
            };
            return spec;
        }

        auto canalwaysswap() -> LemmaSpec
        {
            LemmaSpec spec;
            spec.name = "canalwaysswap";
            spec.instance_builder = "all 4x4 bit matrices";
            exhaustive_4x4(spec, 2);
            spec.precondition = [] (const StructuredInstance & inst) { return is_st(inst.h, 4, 2); };
            spec.property = [] (const StructuredInstance & inst) {
                Bigraph m = bigraph_from_4x4(one_factor_edge_table_4x4()[bits_4x4(inst.h)]);
                for (int v = 0 ; v < 4 ; ++v)
                    if (m.degree_a(v) < 2 || m.degree_b(v) < 2)
                        return false;
                return true;
            };
            return spec;
        }

        auto girth5_condition() -> LemmaSpec
        {
            LemmaSpec spec;
            spec.name = "girth5_condition";
            spec.instance_builder = "all 4x4 bit matrices";
            exhaustive_4x4(spec, 1);
            spec.precondition = [] (const StructuredInstance & inst) { return is_st(inst.h, 4, 1); };
            spec.property = [] (const StructuredInstance & inst) {
                if (one_factor_edge_table_4x4()[bits_4x4(inst.h)] != 0)
                    return true;
                for (const Bigraph & h : {inst.h, swap(inst.h)})
                    for (int u = 0 ; u < 4 ; ++u)
                        for (int v = u + 1 ; v < 4 ; ++v)
                            if (h.degree_a(u) == 1 && h.row(u) == h.row(v))
                                return true;
                return false;
            };
            return spec;
        }

        auto matching_lem_1() -> LemmaSpec
        {
            LemmaSpec spec;
            spec.name = "matching_lem_1";
            spec.instance_builder = "random (2k+1, k+1)-bigraphs filled from sparse";
            spec.variants = {2, 3};
            spec.sample = [] (Rng & rng, int k) -> optional<StructuredInstance> {
                StructuredInstance inst;
                inst.param = k;
                inst.h = near_threshold(rng, 2 * k + 1, k + 1);
                return inst;
            };
            spec.precondition = [] (const StructuredInstance & inst) {
                return is_st(inst.h, 2 * inst.param + 1, inst.param + 1); };
            spec.property = [] (const StructuredInstance & inst) { return matchable_edges(inst.h) == inst.h; };
            return spec;
        }

        // (2k+1, k)-bigraph with X, Y of size k+1 and no X-Y edges; `bridge` adds one X-Y edge.
        auto split_instance(Rng & rng, int k, bool bridge) -> Bigraph
        {
            int s = 2 * k + 1;
            Bigraph h(s);
            for (int i = 0 ; i < s ; ++i)
                for (int j = 0 ; j < s ; ++j) {
                    bool in_x = i <= k, in_y = j <= k;
                    if (in_x != in_y)
                        h.add_edge(i, j);
                    else if (! in_x && coin(rng, 0.5))
                        h.add_edge(i, j);
                }
            if (bridge)
                h.add_edge(static_cast<int>(below(rng, k + 1)), static_cast<int>(below(rng, k + 1)));
            return relabel(h, random_permutation(rng, s), random_permutation(rng, s));
        }

        auto matching_lem_2() -> LemmaSpec
        {
            LemmaSpec spec;
            spec.name = "matching_lem_2";
            spec.instance_builder = "random (2k+1, k)-bigraphs, half with a planted (k+1, k+1) empty block";
            spec.variants = {2, 3};
            spec.sample = [] (Rng & rng, int k) -> optional<StructuredInstance> {
                StructuredInstance inst;
                inst.param = k;
                inst.h = coin(rng, 0.5) ? split_instance(rng, k, false) : near_threshold(rng, 2 * k + 1, k);
                return inst;
            };
            spec.precondition = [] (const StructuredInstance & inst) {
                return is_st(inst.h, 2 * inst.param + 1, inst.param) && ! has_one_factor(inst.h); };
            spec.property = [] (const StructuredInstance & inst) {
                const Bigraph & h = inst.h;
                int k = inst.param, s = h.side();
                int found = 0;
                Row fx = 0, fy = 0;
                for (Row x = 0 ; x <= h.full() ; ++x) {
                    if (popcount(x) != k + 1)
                        continue;
                    Row free = Row(h.full() & ~h.neighbourhood(x));
                    for (Row y = free ; ; y = Row((y - 1) & free)) {
                        if (popcount(y) == k + 1) {
                            ++found;
                            fx = x;
                            fy = y;
                        }
                        if (y == 0)
                            break;
                    }
                }
                if (found != 1)
                    return false;
                for (int i = 0 ; i < s ; ++i)
                    for (int j = 0 ; j < s ; ++j) {
                        bool in_x = (fx >> i) & 1, in_y = (fy >> j) & 1;
                        if (in_x != in_y && ! h.has_edge(i, j))
                            return false;
                    }
                return true;
            };
            return spec;
        }

        auto one_gives_two() -> LemmaSpec
        {
            LemmaSpec spec;
            spec.name = "one_gives_two";
            spec.instance_builder = "random (2k+1, k)-bigraphs, a third bridged across a planted empty block";
            spec.variants = {2, 3};
            spec.sample = [] (Rng & rng, int k) -> optional<StructuredInstance> {
                StructuredInstance inst;
                inst.param = k;
                inst.h = below(rng, 3) == 0 ? split_instance(rng, k, true) : near_threshold(rng, 2 * k + 1, k);
                return inst;
            };
            spec.precondition = [] (const StructuredInstance & inst) {
                return is_st(inst.h, 2 * inst.param + 1, inst.param) && has_one_factor(inst.h); };
            spec.property = [] (const StructuredInstance & inst) {
                Bigraph m = matchable_edges(inst.h);
                int exceptional = 0;
                for (int i = 0 ; i < m.side() ; ++i)
                    if (m.degree_a(i) < 2)
                        ++exceptional;
                return exceptional <= 1;
            };
            spec.observe = [] (const StructuredInstance & inst, std::map<string, std::uint64_t> & notes) {
                Bigraph m = matchable_edges(inst.h);
                for (int i = 0 ; i < m.side() ; ++i)
                    if (m.degree_a(i) < 2) {
                        ++notes["with_exceptional_vertex"];
                        break;
                    }
            };
            return spec;
        }

        auto has_type(const Bigraph & h, int type) -> bool { return ! obstructions_of_type(h, type).empty(); }

        auto type_prop() -> LemmaSpec
        {
            LemmaSpec spec;
            spec.name = "type_prop";
            spec.instance_builder = "planted obstructions of types 1-4 and random planted Hall violators (variant 0), sides swapped at random";
            spec.variants = {0, 1, 2, 3, 4};
            spec.sample = [] (Rng & rng, int variant) -> optional<StructuredInstance> {
                StructuredInstance inst;
                if (variant == 0) {
                    static constexpr std::pair<int, int> shapes[] = {{4, 3}, {5, 3}, {5, 4}};
                    auto [x, n] = shapes[below(rng, 3)];
                    auto h = planted_violator(rng, 8, 3, x, n);
                    if (! h)
                        return std::nullopt;
                    inst.h = *h;
                }
                else
                    inst = planted_obstruction(rng, variant);
                inst.param = variant;
                if (coin(rng, 0.5))
                    inst.h = swap(inst.h);
                return inst;
            };
            spec.precondition = [] (const StructuredInstance & inst) { return is_st(inst.h, 8, 3) && ! has_one_factor(inst.h); };
            spec.property = [] (const StructuredInstance & inst) {
                Bigraph sw = swap(inst.h);
                for (int t : {1, 2})
                    if (has_type(inst.h, t) && has_type(sw, t))
                        return true;
                for (const Bigraph * h : {&inst.h, static_cast<const Bigraph *>(&sw)})
                    if (has_type(*h, 3) || has_type(*h, 4))
                        return true;
                return false;
            };
            spec.observe = [] (const StructuredInstance & inst, std::map<string, std::uint64_t> & notes) {
                for (int t = 1 ; t <= 4 ; ++t) {
                    auto found = obstructions_of_type(inst.h, t);
                    if (found.empty())
                        continue;
                    std::set<Row> sets;
                    for (auto & o : found)
                        sets.insert(o.set);
                    ++notes["type" + std::to_string(t) + (sets.size() == 1 ? "_unique" : "_multiple")];
                    if (found.size() > sets.size())
                        ++notes["type" + std::to_string(t) + "_several_witnesses"];
                }
            };
            return spec;
        }

        // Required degree of the i-th smallest (1-based) vertex on each side, per variant.
        struct DegreeRule
        {
            int s, k;
            bool four_prefix, floor_four;

            auto need_a(int i) const -> int
            {
                if (floor_four)
                    return std::min(i, 4);
                if (four_prefix)
                    return i <= 2 ? i : i <= 4 ? 3 : 4;
                return std::min(i - 1, k);
            }

            auto need_b(int i) const -> int
            {
                if (four_prefix || floor_four)
                    return need_a(i);
                return std::min(i - 1, s - k);
            }
        };

        auto degree_rule(int variant) -> DegreeRule
        {
            switch (variant) {
                case 0: return {8, 4, true, false};
                case 1: return {8, 4, false, true};
                case 2: return {9, 4, false, false};
                case 3: return {7, 3, false, false};
                default: return {8, 4, false, false};
            }
        }

        // Vertices of one side ordered by degree, ties by index.
        auto by_degree(const Bigraph & h) -> vector<int>
        {
            vector<int> order(h.side());
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [&] (int u, int v) { return h.degree_a(u) < h.degree_a(v); });
            return order;
        }

        auto degree_rule_holds(const Bigraph & h, const DegreeRule & rule) -> bool
        {
            Bigraph sw = swap(h);
            auto oa = by_degree(h), ob = by_degree(sw);
            for (int i = 1 ; i <= h.side() ; ++i)
                if (h.degree_a(oa[i - 1]) < rule.need_a(i) || sw.degree_a(ob[i - 1]) < rule.need_b(i))
                    return false;
            return true;
        }

        auto matching_inc() -> LemmaSpec
        {
            LemmaSpec spec;
            spec.name = "matching_inc";
            spec.instance_builder = "sparse random bigraphs raised to the degree profile threshold one edge at a time";
            // 0: degrees 1,2,3,3,4,... with the 4-prefix exception; 1: degrees min(i, 4), no exception;
            // 2-4: threshold min(i - 1, k) and min(i - 1, s - k) with (s, k) = (9, 4), (7, 3), (8, 4)
            spec.variants = {0, 1, 2, 3, 4};
            spec.sample = [] (Rng & rng, int variant) -> optional<StructuredInstance> {
                auto rule = degree_rule(variant);
                StructuredInstance inst;
                inst.param = variant;
                inst.h = random_bigraph(rng, rule.s, double(below(rng, 4)) / 20);
                while (true) {
                    Bigraph sw = swap(inst.h);
                    auto oa = by_degree(inst.h), ob = by_degree(sw);
                    int side = -1, v = -1;
                    for (int i = 1 ; i <= rule.s && side < 0 ; ++i) {
                        if (inst.h.degree_a(oa[i - 1]) < rule.need_a(i))
                            side = 0, v = oa[i - 1];
                        else if (sw.degree_a(ob[i - 1]) < rule.need_b(i))
                            side = 1, v = ob[i - 1];
                    }
                    if (side < 0)
                        break;
                    Row missing = Row(inst.h.full() & ~(side == 0 ? inst.h.row(v) : inst.h.column(v)));
                    vector<int> options;
                    for (int u = 0 ; u < rule.s ; ++u)
                        if ((missing >> u) & 1)
                            options.push_back(u);
                    int u = options[below(rng, options.size())];
                    if (side == 0)
                        inst.h.add_edge(v, u);
                    else
                        inst.h.add_edge(u, v);
                }
                return inst;
            };
            spec.precondition = [] (const StructuredInstance & inst) {
                auto rule = degree_rule(inst.param);
                return inst.h.side() == rule.s && degree_rule_holds(inst.h, rule);
            };
            spec.property = [] (const StructuredInstance & inst) {
                if (has_one_factor(inst.h))
                    return true;
                auto rule = degree_rule(inst.param);
                if (rule.floor_four)
                    return false;
                int limit_a = rule.four_prefix ? 4 : rule.k, limit_b = rule.four_prefix ? 4 : rule.s - rule.k;
                auto exceptional_prefix = [] (const Bigraph & h, int limit, bool exact) {
                    auto order = by_degree(h);
                    Row prefix = 0;
                    for (int i = 1 ; i <= limit ; ++i) {
                        prefix |= Row(1u << order[i - 1]);
                        if (exact && i < limit)
                            continue;
                        if (popcount(h.neighbourhood(prefix)) == i - 1)
                            return true;
                    }
                    return false;
                };
                // variant 0 allows only the full 4-prefix as the exception
                return exceptional_prefix(inst.h, limit_a, rule.four_prefix) || exceptional_prefix(swap(inst.h), limit_b, rule.four_prefix);
            };
            spec.observe = [] (const StructuredInstance & inst, std::map<string, std::uint64_t> & notes) {
                if (! has_one_factor(inst.h))
                    ++notes["without_one_factor"];
            };
            return spec;
        }

        auto is_matching(const vector<BiEdge> & edges, int s) -> bool { return max_degree_of(edges, s) <= 1; }

        auto switcher_general() -> LemmaSpec
        {
            LemmaSpec spec;
            spec.name = "switcher_general";
            spec.instance_builder = "planted obstruction of the variant's type; H' adds a random matching (usually seeded with the required edges) and removes one";
            spec.variants = {1, 2, 3, 4};
            spec.sample = [] (Rng & rng, int type) -> optional<StructuredInstance> {
                StructuredInstance inst = planted_obstruction(rng, type);
                const Bigraph & h = inst.h;
                Row x = inst.decorations.violator;
                Row source = inst.decorations.x1 >= 0 ? Row(x | (1u << inst.decorations.x1)) : x;
                Row outside = Row(h.full() & ~h.neighbourhood(x));
                int needed = type == 4 ? 1 : 2;

                vector<BiEdge> added;
                if (coin(rng, 0.85)) {
                    auto seed = random_matching(rng, 8, [&] (int i, int j) {
                            return ((source >> i) & 1) && ((outside >> j) & 1); }, needed);
                    for (auto e : seed)
                        if (! h.has_edge(e.first, e.second))
                            added.push_back(e);
                }
                Row used_a = 0, used_b = 0;
                for (auto [i, j] : added) {
                    used_a |= Row(1u << i);
                    used_b |= Row(1u << j);
                }
                auto more = random_matching(rng, 8, [&] (int i, int j) {
                        return ! h.has_edge(i, j) && ! ((used_a >> i) & 1) && ! ((used_b >> j) & 1); },
                        static_cast<int>(below(rng, 9)));
                added.insert(added.end(), more.begin(), more.end());

                Bigraph mod = h.with(added);
                auto removed = random_matching(rng, 8, [&] (int i, int j) { return h.has_edge(i, j); },
                        static_cast<int>(below(rng, 9)));
                for (auto [i, j] : removed)
                    if (mod.degree_a(i) > 3 && mod.degree_b(j) > 3)
                        mod.remove_edge(i, j);
                inst.modified = mod;
                return inst;
            };
            spec.precondition = [] (const StructuredInstance & inst) {
                const Bigraph & h = inst.h;
                if (! inst.modified || ! is_st(h, 8, 3) || ! is_st(*inst.modified, 8, 3))
                    return false;
                Row x = inst.decorations.violator;
                auto o = obstruction_of_type(h, x, inst.param);
                if (! o || o->x1 != inst.decorations.x1)
                    return false;
                if (! is_matching(difference(*inst.modified, h), 8) || ! is_matching(difference(h, *inst.modified), 8))
                    return false;
                Row source = o->x1 >= 0 ? Row(x | (1u << o->x1)) : x;
                Row outside = Row(h.full() & ~h.neighbourhood(x));
                return matching_between(*inst.modified, source, outside) >= (inst.param == 4 ? 1 : 2);
            };
            spec.property = [] (const StructuredInstance & inst) { return has_one_factor(*inst.modified); };
            return spec;
        }

        auto switcher_simple() -> LemmaSpec
        {
            LemmaSpec spec;
            spec.name = "switcher_simple";
            spec.instance_builder = "random (8,3)-bigraphs (variant 0) or planted obstructions opened by edges out of X; M a uniform random 1-factor";
            spec.variants = {0, 1, 2, 3, 4};
            spec.sample = [] (Rng & rng, int variant) -> optional<StructuredInstance> {
                StructuredInstance inst;
                if (variant == 0)
                    inst.h = near_threshold(rng, 8, 3);
                else {
                    inst = planted_obstruction(rng, variant);
                    Row x = inst.decorations.violator;
                    Row outside = Row(inst.h.full() & ~inst.h.neighbourhood(x));
                    while (! has_one_factor(inst.h)) {
                        vector<BiEdge> options;
                        for (int i = 0 ; i < 8 ; ++i)
                            for (int j = 0 ; j < 8 ; ++j)
                                if (((x >> i) & 1) && ((outside >> j) & 1) && ! inst.h.has_edge(i, j))
                                    options.emplace_back(i, j);
                        auto [i, j] = options[below(rng, options.size())];
                        inst.h.add_edge(i, j);
                    }
                    inst.decorations = {};
                }
                inst.param = variant;
                auto count = count_one_factors(inst.h);
                if (count == 0)
                    return std::nullopt;
                auto pick = below(rng, count);
                for_each_one_factor(inst.h, [&] (const Matching & m) {
                        if (pick-- == 0) {
                            inst.decorations.one_factor = m;
                            return false;
                        }
                        return true; });
                return inst;
            };
            spec.precondition = [] (const StructuredInstance & inst) {
                return is_st(inst.h, 8, 3) && is_one_factor(inst.h, inst.decorations.one_factor); };
            spec.property = [] (const StructuredInstance & inst) {
                return removable_edges(inst.h, inst.decorations.one_factor).size() >= 6; };
            spec.observe = [] (const StructuredInstance & inst, std::map<string, std::uint64_t> & notes) {
                ++notes["removable_" + std::to_string(removable_edges(inst.h, inst.decorations.one_factor).size())];
            };
            return spec;
        }

        auto switcher_double() -> LemmaSpec
        {
            LemmaSpec spec;
            spec.name = "switcher_double";
            spec.instance_builder = "switcher_double_instance with the variant as k";
            spec.variants = {4, 5};
            spec.sample = [] (Rng & rng, int k) -> optional<StructuredInstance> {
                return build_structured(StructuredKind::switcher_double_instance, rng, k); };
            spec.precondition = [] (const StructuredInstance & inst) {
                int k = inst.param, s = 2 * k;
                const Bigraph & h = inst.h;
                if (! inst.modified || h.side() != s || ! is_st(h, s, k - 1) || ! is_st(*inst.modified, s, k - 1))
                    return false;
                auto & tilde = inst.decorations.special;
                if (tilde.size() > 1)
                    return false;
                for (auto [i, j] : tilde)
                    if (! h.has_edge(i, j))
                        return false;
                Bigraph reduced = h.without(tilde);
                Row x = inst.decorations.violator;
                Row nx = reduced.neighbourhood(x);
                if (popcount(x) - popcount(nx) != 2)
                    return false;
                if (max_degree_of(difference(*inst.modified, h), s) > 2 || max_degree_of(difference(h, *inst.modified), s) > 2)
                    return false;
                return matching_between(*inst.modified, x, Row(h.full() & ~nx)) >= 2;
            };
            spec.property = [] (const StructuredInstance & inst) { return has_one_factor(*inst.modified); };
            return spec;
        }

        struct Path3
        {
            std::array<BiEdge, 2> edges;
            Row a = 0, b = 0;
        };

        auto paths_of(const vector<BiEdge> & cycle) -> vector<Path3>
        {
            vector<Path3> paths;
            for (std::size_t e = 0 ; e < cycle.size() ; ++e) {
                Path3 p;
                p.edges = {cycle[e], cycle[(e + 1) % cycle.size()]};
                for (auto [i, j] : p.edges) {
                    p.a |= Row(1u << i);
                    p.b |= Row(1u << j);
                }
                paths.push_back(p);
            }
            return paths;
        }

        auto is_cycle_in(const Bigraph & h, const vector<BiEdge> & cycle) -> bool
        {
            std::size_t len = cycle.size();
            if (len < 4 || len % 2)
                return false;
            Row a = 0, b = 0;
            for (std::size_t e = 0 ; e < len ; ++e) {
                auto [i, j] = cycle[e];
                auto [ni, nj] = cycle[(e + 1) % len];
                if (! h.has_edge(i, j) || (i != ni && j != nj) || (i == ni && j == nj))
                    return false;
                a |= Row(1u << i);
                b |= Row(1u << j);
            }
            return std::size_t(popcount(a) + popcount(b)) == len;
        }

        auto key_lemma(const string & name, StructuredKind kind, vector<int> lengths, bool vertex_disjoint_paths) -> LemmaSpec
        {
            LemmaSpec spec;
            spec.name = name;
            spec.instance_builder = kind == StructuredKind::cycle10_plus_m5 ? "cycle10_plus_M5" : "cycle6_4_plus_M5";
            spec.sample = [kind] (Rng & rng, int) -> optional<StructuredInstance> { return build_structured(kind, rng, 0); };
            spec.precondition = [lengths] (const StructuredInstance & inst) {
                auto & d = inst.decorations;
                if (! is_st(inst.h, 8, 4) || d.cycles.size() != lengths.size() || d.matching.size() != 5)
                    return false;
                Row a = 0, b = 0;
                for (std::size_t c = 0 ; c < lengths.size() ; ++c) {
                    if (int(d.cycles[c].size()) != lengths[c] || ! is_cycle_in(inst.h, d.cycles[c]))
                        return false;
                    for (auto [i, j] : d.cycles[c]) {
                        if (c > 0 && (((a >> i) & 1) || ((b >> j) & 1)))
                            return false;
                    }
                    for (auto [i, j] : d.cycles[c]) {
                        a |= Row(1u << i);
                        b |= Row(1u << j);
                    }
                }
                for (auto [i, j] : d.matching)
                    if (! inst.h.has_edge(i, j))
                        return false;
                return is_matching(d.matching, 8);
            };
            spec.property = [vertex_disjoint_paths] (const StructuredInstance & inst) {
                vector<Path3> paths;
                for (auto & c : inst.decorations.cycles) {
                    auto more = paths_of(c);
                    paths.insert(paths.end(), more.begin(), more.end());
                }
                auto & m = inst.decorations.matching;
                for (std::size_t p = 0 ; p < paths.size() ; ++p)
                    for (std::size_t q = p + 1 ; q < paths.size() ; ++q) {
                        auto & x = paths[p];
                        auto & y = paths[q];
                        if (vertex_disjoint_paths ? ((x.a & y.a) || (x.b & y.b))
                                : (x.edges[0] == y.edges[0] || x.edges[0] == y.edges[1] || x.edges[1] == y.edges[0] || x.edges[1] == y.edges[1]))
                            continue;
                        for (std::size_t e = 0 ; e < m.size() ; ++e)
                            for (std::size_t f = e + 1 ; f < m.size() ; ++f) {
                                vector<BiEdge> j{x.edges[0], x.edges[1], y.edges[0], y.edges[1], m[e], m[f]};
                                if (has_one_factor(inst.h.without(j)))
                                    return true;
                            }
                    }
                return false;
            };
            return spec;
        }

        auto k_kplus1() -> LemmaSpec
        {
            LemmaSpec spec;
            spec.name = "k_kplus1";
            spec.instance_builder = "random graphs on 5-7 vertices with d(v) = 3 next to a vertex of degree <= 4; random 5-covers";
            spec.variants = {3};
            spec.sample = [] (Rng & rng, int k) -> optional<StructuredInstance> {
                int n = 5 + static_cast<int>(below(rng, 3));
                double p = 0.3 + double(below(rng, 4)) / 10;
                vector<Edge> edges;
                auto others = random_permutation(rng, n - 1);
                for (int i = 0 ; i < k ; ++i)
                    edges.emplace_back(0, others[i] + 1);
                int w = others[0] + 1;
                vector<int> degree(n);
                degree[0] = k;
                for (int i = 0 ; i < k ; ++i)
                    ++degree[others[i] + 1];
                for (int u = 1 ; u < n ; ++u)
                    for (int v = u + 1 ; v < n ; ++v)
                        if (coin(rng, p) && ((u != w && v != w) || degree[w] < k + 1)) {
                            edges.emplace_back(u, v);
                            ++degree[u];
                            ++degree[v];
                        }
                StructuredInstance inst;
                inst.param = k;
                inst.vertex = 0;
                inst.cover = random_cover(Graph{n, edges}, 2 * k - 1, rng);
                return inst;
            };
            spec.precondition = [] (const StructuredInstance & inst) {
                if (! inst.cover || inst.vertex < 0)
                    return false;
                const Graph & g = inst.cover->graph();
                int k = inst.param, v = inst.vertex;
                if (inst.cover->colours() != 2 * k - 1 || v >= g.order() || g.degree(v) != k)
                    return false;
                bool light = false;
                for (int w : g.neighbours(v))
                    light |= g.degree(w) <= k + 1;
                if (! light)
                    return false;
                vector<int> keep;
                for (int u = 0 ; u < g.order() ; ++u)
                    if (u != v)
                        keep.push_back(u);
                return solve_packing(inst.cover->restricted(keep)).has_value();
            };
            spec.property = [] (const StructuredInstance & inst) { return solve_packing(*inst.cover).has_value(); };
            return spec;
        }

        auto registry() -> const vector<LemmaSpec> &
        {
            static const vector<LemmaSpec> specs = [] {
                vector<LemmaSpec> all{easy_prop(), matching_lem_1(), matching_lem_2(), one_gives_two(), canalwaysswap(),
                    girth5_condition(), type_prop(), matching_inc(), switcher_general(), switcher_simple(), switcher_double(),
                    key_lemma("key1factor", StructuredKind::cycle10_plus_m5, {10}, true),
                    key_lemma("key1factorB", StructuredKind::cycle6_4_plus_m5, {6, 4}, false), k_kplus1()};
                return all;
            }();
            return specs;
        }
    }

    auto lemma_names() -> vector<string>
    {
        vector<string> names;
        for (auto & spec : registry())
            names.push_back(spec.name);
        return names;
    }

    auto lemma_spec(const string & name) -> LemmaSpec
    {
        for (auto & spec : registry())
            if (spec.name == name)
                return spec;
        if (name == "canalwaysswapanedge")
            return lemma_spec("canalwaysswap");
        throw InputError{"unknown lemma '" + name + "'"};
    }
}
