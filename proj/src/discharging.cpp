#include <lpack/discharging.hpp>
#include <lpack/errors.hpp>

#include <algorithm>

using std::string;

namespace lpack
{
    auto rule_p4() -> DischargingRule
    {
        return {"P4", {{{3, 3}, {0, INT_MAX}, Rational{1, 3}}}};
    }

    auto rule_p5() -> DischargingRule
    {
        return {"P5", {{{3, 3}, {4, INT_MAX}, Rational{1, 6}}}};
    }

    auto rule_open_b(int k) -> DischargingRule
    {
        if (k < 1)
            throw InputError{"openB needs k >= 1"};
        return {"openB", {{{k, k}, {0, INT_MAX}, Rational{1, k + 1}}}};
    }

    auto rule_by_name(const string & name, int k) -> DischargingRule
    {
        if (name == "P4")
            return rule_p4();
        if (name == "P5")
            return rule_p5();
        if (name == "openB")
            return rule_open_b(k);
        throw InputError{"unknown discharging rule '" + name + "'"};
    }

    auto ChargeLedger::min_final() const -> Rational
    {
        if (final.empty())
            return Rational{0};
        return *std::min_element(final.begin(), final.end());
    }

    auto ChargeLedger::total_initial() const -> Rational
    {
        Rational sum{0};
        for (auto & c : initial)
            sum += c;
        return sum;
    }

    auto ChargeLedger::total_final() const -> Rational
    {
        Rational sum{0};
        for (auto & c : final)
            sum += c;
        return sum;
    }

    auto discharge_audit(const Graph & g, const DischargingRule & rule) -> ChargeLedger
    {
        ChargeLedger ledger;
        for (int v = 0 ; v < g.order() ; ++v)
            ledger.initial.emplace_back(g.degree(v));
        ledger.final = ledger.initial;

        for (auto & [u, v] : g.edges())
            for (auto & clause : rule.clauses)
                for (auto [recipient, donor] : {Edge{u, v}, Edge{v, u}})
                    if (clause.recipient.contains(g.degree(recipient)) && clause.donor.contains(g.degree(donor))) {
                        ledger.transfers.push_back({donor, recipient, clause.amount});
                        ledger.final[donor] -= clause.amount;
                        ledger.final[recipient] += clause.amount;
                    }
        return ledger;
    }
}
