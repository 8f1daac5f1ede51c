#include <lpack/errors.hpp>
#include <lpack/obstruction.hpp>

#include <vector>

using std::optional;
using std::vector;

namespace lpack
{
    namespace
    {
        // r-subsets of {0..n-1} as bitmasks, in lexicographic order of their sorted elements
        auto subsets(int n, int r) -> vector<Row>
        {
            vector<Row> result;
            vector<int> pick(r);
            auto recurse = [&] (auto & self, int depth, int from) -> void {
                if (depth == r) {
                    Row mask = 0;
                    for (int p : pick)
                        mask |= Row(1u << p);
                    result.push_back(mask);
                    return;
                }
                for (int i = from ; i <= n - (r - depth) ; ++i) {
                    pick[depth] = i;
                    self(self, depth + 1, i + 1);
                }
            };
            recurse(recurse, 0, 0);
            return result;
        }

        auto bits(Row r) -> vector<int>
        {
            vector<int> result;
            for (int i = 0 ; i < 16 ; ++i)
                if ((r >> i) & 1)
                    result.push_back(i);
            return result;
        }
    }

    auto obstruction_of_type(const Bigraph & h, Row x, int type) -> optional<Obstruction>
    {
        Row n = h.neighbourhood(x);
        int size = popcount(x), nsize = popcount(n);
        Obstruction o{Side::a, x, n, type, -1, std::nullopt, std::nullopt};

        if (type == 1)
            return (size == 5 && nsize == 3) ? optional{o} : std::nullopt;
        if (size != 4 || nsize != 3)
            return std::nullopt;

        auto with_outside = [&] (int count) -> optional<Obstruction> {
            for (int a = 0 ; a < h.side() ; ++a) {
                if ((x >> a) & 1)
                    continue;
                auto outside = bits(h.row(a) & ~n);
                if (int(outside.size()) != count)
                    continue;
                Obstruction w = o;
                w.type = count + 1;
                w.x1 = a;
                w.e1 = BiEdge{a, outside[0]};
                if (count == 2)
                    w.e2 = BiEdge{a, outside[1]};
                return w;
            }
            return std::nullopt;
        };

        if (type == 2 || type == 3)
            return with_outside(type - 1);
        if (type == 4) {
            if (with_outside(0) || with_outside(1) || with_outside(2))
                return std::nullopt;
            return o;
        }
        return std::nullopt;
    }

    auto obstructions_of_type(const Bigraph & h, int type) -> vector<Obstruction>
    {
        vector<Obstruction> result;
        for (Row x : subsets(h.side(), type == 1 ? 5 : 4))
            if (auto o = obstruction_of_type(h, x, type))
                result.push_back(*o);
        return result;
    }

    auto classify_obstruction(const Bigraph & h) -> optional<Obstruction>
    {
        if (h.side() != 8)
            throw InputError{"obstruction classification needs s = 8"};
        if (has_one_factor(h))
            return std::nullopt;

        Bigraph swapped = swap(h);
        for (int type = 1 ; type <= 4 ; ++type)
            for (auto side : {Side::a, Side::b}) {
                auto found = obstructions_of_type(side == Side::a ? h : swapped, type);
                if (! found.empty()) {
                    found.front().side = side;
                    return found.front();
                }
            }

        // outside the (8,3) setting nothing may match; report the largest Hall violator untyped
        auto x = hall_violator(h);
        return Obstruction{Side::a, x->set, x->neighbourhood, 0, -1, std::nullopt, std::nullopt};
    }
}
