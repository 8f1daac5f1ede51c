#include "sampling.hpp"

#include <lpack/errors.hpp>
#include <lpack/obstruction.hpp>

#include <algorithm>
#include <numeric>

using std::vector;

namespace lpack::sampling
{
    auto random_bigraph(Rng & rng, int s, double p) -> Bigraph
    {
        Bigraph h(s);
        for (int i = 0 ; i < s ; ++i)
            for (int j = 0 ; j < s ; ++j)
                if (coin(rng, p))
                    h.add_edge(i, j);
        return h;
    }

    auto fill_min_degree(Bigraph & h, int t, Rng & rng, const EdgeFilter & allowed) -> bool
    {
        int s = h.side();
        auto ok = [&] (int i, int j) { return ! h.has_edge(i, j) && (! allowed || allowed(i, j)); };
        while (true) {
            vector<int> deficient;     // a_i as i, b_j as s + j
            for (int i = 0 ; i < s ; ++i)
                if (h.degree_a(i) < t)
                    deficient.push_back(i);
            for (int j = 0 ; j < s ; ++j)
                if (h.degree_b(j) < t)
                    deficient.push_back(s + j);
            if (deficient.empty())
                return true;

            int v = deficient[below(rng, deficient.size())];
            vector<BiEdge> best, rest;
            for (int u = 0 ; u < s ; ++u) {
                auto [i, j] = v < s ? BiEdge{v, u} : BiEdge{u, v - s};
                if (! ok(i, j))
                    continue;
                bool both = v < s ? h.degree_b(j) < t : h.degree_a(i) < t;
                (both ? best : rest).emplace_back(i, j);
            }
            auto & pool = best.empty() ? rest : best;
            if (pool.empty())
                return false;
            auto [i, j] = pool[below(rng, pool.size())];
            h.add_edge(i, j);
        }
    }

    auto thin(Bigraph & h, int t, double p, Rng & rng, const EdgeFilter & removable) -> void
    {
        auto edges = h.edge_list();
        shuffle(std::span{edges}, rng);
        for (auto [i, j] : edges)
            if (coin(rng, p) && (! removable || removable(i, j)) && h.degree_a(i) > t && h.degree_b(j) > t)
                h.remove_edge(i, j);
    }

    auto random_matching(Rng & rng, int s, const EdgeFilter & allowed, int limit) -> vector<BiEdge>
    {
        vector<BiEdge> pool;
        for (int i = 0 ; i < s ; ++i)
            for (int j = 0 ; j < s ; ++j)
                if (allowed(i, j))
                    pool.emplace_back(i, j);
        shuffle(std::span{pool}, rng);
        Row used_a = 0, used_b = 0;
        vector<BiEdge> m;
        for (auto [i, j] : pool) {
            if (int(m.size()) >= limit)
                break;
            if (((used_a >> i) & 1) || ((used_b >> j) & 1))
                continue;
            used_a |= Row(1u << i);
            used_b |= Row(1u << j);
            m.emplace_back(i, j);
        }
        return m;
    }

    auto random_permutation(Rng & rng, int s) -> vector<int>
    {
        vector<int> p(s);
        std::iota(p.begin(), p.end(), 0);
        shuffle(std::span{p}, rng);
        return p;
    }

    auto relabel(const Bigraph & h, const vector<int> & pa, const vector<int> & pb) -> Bigraph
    {
        Bigraph r(h.side());
        for (auto [i, j] : h.edge_list())
            r.add_edge(pa[i], pb[j]);
        return r;
    }

    auto relabel_set(Row x, const vector<int> & perm) -> Row
    {
        Row r = 0;
        for (int i = 0 ; i < int(perm.size()) ; ++i)
            if ((x >> i) & 1)
                r |= Row(1u << perm[i]);
        return r;
    }

    auto matching_between(const Bigraph & h, Row from, Row to) -> int
    {
        Bigraph r(h.side());
        for (int i = 0 ; i < h.side() ; ++i)
            if ((from >> i) & 1)
                for (int j = 0 ; j < h.side() ; ++j)
                    if (((to >> j) & 1) && h.has_edge(i, j))
                        r.add_edge(i, j);
        return matching_size(max_matching(r));
    }

    namespace
    {
        auto complete_between(Bigraph & h, vector<int> as, vector<int> bs) -> void
        {
            for (int i : as)
                for (int j : bs)
                    h.add_edge(i, j);
        }

        // The drawings of the four types, on a_0..a_7 and b_0..b_7. X is {a_0..a_4} for type 1 and
        // {a_0..a_3} otherwise, N(X) = {b_0, b_1, b_2}, and x1 = a_4 for types 2 and 3.
        auto template_of_type(int type) -> Bigraph
        {
            Bigraph h(8);
            switch (type) {
                case 1:
                    complete_between(h, {0, 1, 2, 3, 4}, {0, 1, 2});
                    complete_between(h, {5, 6, 7}, {3, 4, 5, 6, 7});
                    break;
                case 2:
                    complete_between(h, {0, 1, 2, 3}, {0, 1, 2});
                    complete_between(h, {4}, {0, 1, 3});
                    complete_between(h, {5, 6, 7}, {4, 5, 6, 7});
                    complete_between(h, {5, 7}, {3});
                    break;
                case 3:
                    complete_between(h, {0, 1, 2, 3}, {0, 1, 2});
                    complete_between(h, {4}, {0, 3, 4});
                    complete_between(h, {5, 6, 7}, {3, 4, 5, 6, 7});
                    break;
                case 4:
                    complete_between(h, {0, 1, 2, 3}, {0, 1, 2});
                    complete_between(h, {4, 5, 6, 7}, {3, 4, 5, 6, 7});
                    break;
                default:
                    throw InputError{"obstruction type must be 1..4"};
            }
            return h;
        }
    }

    auto planted_obstruction(Rng & rng, int type) -> StructuredInstance
    {
        const Row x = type == 1 ? 0x1f : 0x0f;
        const Row nx = 0x07;
        const int x1 = (type == 2 || type == 3) ? 4 : -1;

        while (true) {
            Bigraph h = template_of_type(type);
            // X keeps exactly N(X); x1 keeps its edges outside N(X); for type 4 no outside vertex may
            // gain a neighbour set that makes X extendable to an earlier type
            auto frozen = [&] (int i, int j) {
                bool in_x = (x >> i) & 1, in_n = (nx >> j) & 1;
                if (in_x)
                    return true;
                if (i == x1 && ! in_n)
                    return true;
                return false;
            };
            double p = double(below(rng, 5)) / 10;
            for (int i = 0 ; i < 8 ; ++i)
                for (int j = 0 ; j < 8 ; ++j)
                    if (! frozen(i, j) && (nx >> j & 1) && coin(rng, p))
                        h.add_edge(i, j);
            thin(h, 3, p, rng, [&] (int i, int j) { return ! frozen(i, j); });

            auto o = obstruction_of_type(h, x, type);
            if (! o || ! is_st(h, 8, 3))
                continue;
            auto c = classify_obstruction(h);
            if (! c || c->type != type || c->side != Side::a)
                continue;

            auto pa = random_permutation(rng, 8), pb = random_permutation(rng, 8);
            StructuredInstance inst;
            inst.h = relabel(h, pa, pb);
            inst.param = type;
            auto ro = obstruction_of_type(inst.h, relabel_set(x, pa), type);
            if (! ro)
                throw std::logic_error{"relabeling lost the planted obstruction"};
            inst.decorations.violator = ro->set;
            inst.decorations.x1 = ro->x1;
            if (ro->e1)
                inst.decorations.special.push_back(*ro->e1);
            if (ro->e2)
                inst.decorations.special.push_back(*ro->e2);
            return inst;
        }
    }
}

namespace lpack
{
    using namespace sampling;

    auto parse_structured_kind(const std::string & s) -> StructuredKind
    {
        if (s == "cycle10_plus_m5" || s == "cycle10_plus_M5")
            return StructuredKind::cycle10_plus_m5;
        if (s == "cycle6_4_plus_m5" || s == "cycle6_4_plus_M5")
            return StructuredKind::cycle6_4_plus_m5;
        if (s == "violator_type")
            return StructuredKind::violator_type;
        if (s == "switcher_double_instance")
            return StructuredKind::switcher_double_instance;
        throw InputError{"unknown structured instance kind '" + s + "'"};
    }

    namespace
    {
        // Cycle through a_{as[0]} b_{bs[0]} a_{as[1]} ... in order, as a list of edges.
        auto plant_cycle(Bigraph & h, const vector<int> & as, const vector<int> & bs) -> vector<BiEdge>
        {
            vector<BiEdge> cycle;
            int len = static_cast<int>(as.size());
            for (int i = 0 ; i < len ; ++i) {
                cycle.emplace_back(as[i], bs[i]);
                cycle.emplace_back(as[(i + 1) % len], bs[i]);
            }
            for (auto [i, j] : cycle)
                h.add_edge(i, j);
            return cycle;
        }

        auto cycles_plus_matching(Rng & rng, const vector<int> & lengths) -> StructuredInstance
        {
            StructuredInstance inst;
            inst.h = Bigraph(8);
            auto pa = random_permutation(rng, 8), pb = random_permutation(rng, 8);
            int used = 0;
            for (int half : lengths) {
                vector<int> as(pa.begin() + used, pa.begin() + used + half), bs(pb.begin() + used, pb.begin() + used + half);
                inst.decorations.cycles.push_back(plant_cycle(inst.h, as, bs));
                used += half;
            }

            auto ma = random_permutation(rng, 8), mb = random_permutation(rng, 8);
            for (int e = 0 ; e < 5 ; ++e) {
                inst.decorations.matching.emplace_back(ma[e], mb[e]);
                inst.h.add_edge(ma[e], mb[e]);
            }
            std::sort(inst.decorations.matching.begin(), inst.decorations.matching.end());

            double p = double(below(rng, 3)) / 20;
            for (int i = 0 ; i < 8 ; ++i)
                for (int j = 0 ; j < 8 ; ++j)
                    if (coin(rng, p))
                        inst.h.add_edge(i, j);
            fill_min_degree(inst.h, 4, rng);
            inst.param = 4;
            return inst;
        }

        auto switcher_double(Rng & rng, int k) -> StructuredInstance
        {
            if (k < 4 || 2 * k > Bigraph::max_side)
                throw InputError{"switcher_double_instance needs 4 <= k <= 8"};
            int s = 2 * k;
            // X = a_0..a_k, N = b_0..b_{k-2}; the rest of B is complete to A \ X
            Row x = Row((1u << (k + 1)) - 1), nx = Row((1u << (k - 1)) - 1);
            Bigraph h(s);
            for (int i = 0 ; i < s ; ++i)
                for (int j = 0 ; j < s ; ++j)
                    if (((x >> i) & 1) == ((nx >> j) & 1))
                        h.add_edge(i, j);

            vector<BiEdge> tilde;
            if (coin(rng, 0.5)) {
                int i = static_cast<int>(below(rng, k + 1)), j = k - 1 + static_cast<int>(below(rng, k + 1));
                h.add_edge(i, j);
                tilde.emplace_back(i, j);
                // the endpoints may now afford to lose one edge each on their own side
                if (coin(rng, 0.5))
                    h.remove_edge(i, static_cast<int>(below(rng, k - 1)));
                if (coin(rng, 0.5))
                    h.remove_edge(k + 1 + static_cast<int>(below(rng, k - 1)), j);
            }
            double p = double(below(rng, 5)) / 10;
            for (int i = k + 1 ; i < s ; ++i)
                for (int j = 0 ; j < k - 1 ; ++j)
                    if (coin(rng, p))
                        h.add_edge(i, j);

            auto pa = random_permutation(rng, s), pb = random_permutation(rng, s);
            StructuredInstance inst;
            inst.h = relabel(h, pa, pb);
            inst.param = k;
            inst.decorations.violator = relabel_set(x, pa);
            for (auto [i, j] : tilde)
                inst.decorations.special.emplace_back(pa[i], pb[j]);

            // H' = H + two matchings - two matchings, seeded with a 2-matching from X to B \ N
            Row outside = relabel_set(Row(h.full() & ~nx), pb);
            Row vx = inst.decorations.violator;
            Bigraph mod = inst.h;
            vector<BiEdge> added;
            if (coin(rng, 0.8)) {
                auto seed = random_matching(rng, s, [&] (int i, int j) { return ((vx >> i) & 1) && ((outside >> j) & 1); }, 2);
                for (auto e : seed)
                    if (! inst.h.has_edge(e.first, e.second))
                        added.push_back(e);
            }
            for (int round = 0 ; round < 2 ; ++round) {
                Bigraph cur = inst.h.with(added);
                Row used_a = 0, used_b = 0;
                if (round == 0)
                    for (auto [i, j] : added) {
                        used_a |= Row(1u << i);
                        used_b |= Row(1u << j);
                    }
                auto extra = random_matching(rng, s, [&] (int i, int j) {
                        return ! cur.has_edge(i, j) && ! ((used_a >> i) & 1) && ! ((used_b >> j) & 1); },
                        static_cast<int>(below(rng, s + 1)));
                added.insert(added.end(), extra.begin(), extra.end());
            }
            mod = inst.h.with(added);
            for (int round = 0 ; round < 2 ; ++round) {
                Bigraph cur = mod;
                auto removed = random_matching(rng, s, [&] (int i, int j) {
                        return inst.h.has_edge(i, j) && cur.has_edge(i, j) && cur.degree_a(i) > k - 1 && cur.degree_b(j) > k - 1; },
                        static_cast<int>(below(rng, s + 1)));
                for (auto [i, j] : removed)
                    if (mod.degree_a(i) > k - 1 && mod.degree_b(j) > k - 1)
                        mod.remove_edge(i, j);
            }
            inst.modified = mod;
            return inst;
        }
    }

    auto build_structured(StructuredKind kind, Rng & rng, int param) -> StructuredInstance
    {
        switch (kind) {
            case StructuredKind::cycle10_plus_m5: return cycles_plus_matching(rng, {5});
            case StructuredKind::cycle6_4_plus_m5: return cycles_plus_matching(rng, {3, 2});
            case StructuredKind::violator_type: return planted_obstruction(rng, param == 0 ? 1 : param);
            case StructuredKind::switcher_double_instance: return switcher_double(rng, param == 0 ? 4 : param);
        }
        throw InputError{"unknown structured instance kind"};
    }

    auto build_structured(StructuredKind kind, std::uint64_t seed, int param) -> StructuredInstance
    {
        Rng rng = trial_rng(seed, 0);
        return build_structured(kind, rng, param);
    }
}
