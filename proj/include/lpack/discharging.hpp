#pragma once

#include <lpack/graph.hpp>
#include <lpack/rational.hpp>

#include <climits>
#include <string>
#include <vector>

namespace lpack
{
    struct DegreeRange
    {
        int lo = 0, hi = INT_MAX;

        auto contains(int d) const -> bool { return lo <= d && d <= hi; }
    };

    // Recipient takes `amount` from each neighbouring donor whose degrees match.
    struct DischargeClause
    {
        DegreeRange recipient, donor;
        Rational amount;
    };

    struct DischargingRule
    {
        std::string name;
        std::vector<DischargeClause> clauses;
    };

    auto rule_p4() -> DischargingRule;          // 3-vertices take 1/3 from every neighbour
    auto rule_p5() -> DischargingRule;          // 3-vertices take 1/6 from every neighbour of degree >= 4
    auto rule_open_b(int k) -> DischargingRule; // k-vertices take 1/(k+1) from every neighbour
    auto rule_by_name(const std::string & name, int k) -> DischargingRule;

    struct Transfer
    {
        int donor, recipient;
        Rational amount;
    };

    struct ChargeLedger
    {
        std::vector<Rational> initial, final;
        std::vector<Transfer> transfers;

        auto min_final() const -> Rational;
        auto total_initial() const -> Rational;
        auto total_final() const -> Rational;
    };

    auto discharge_audit(const Graph &, const DischargingRule &) -> ChargeLedger;
}
