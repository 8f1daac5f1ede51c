#pragma once

#include <lpack/bigraph.hpp>
#include <lpack/constructive.hpp>
#include <lpack/cover.hpp>
#include <lpack/discharging.hpp>
#include <lpack/graph.hpp>
#include <lpack/harness.hpp>
#include <lpack/obstruction.hpp>

#include <json.hpp>

#include <string>

namespace lpack
{
    using Json = nlohmann::json;

    // Readers throw InputError on anything malformed.
    auto graph_to_json(const Graph &) -> Json;
    auto graph_from_json(const Json &) -> Graph;

    auto bigraph_to_json(const Bigraph &) -> Json;
    auto bigraph_from_json(const Json &) -> Bigraph;    // {"s", "rows"} or {"s", "edges"}

    auto cover_to_json(const CorrespondenceCover &) -> Json;
    auto cover_from_json(const Json &) -> CorrespondenceCover;

    auto packing_to_json(const Packing &) -> Json;
    auto packing_from_json(const Json &) -> Packing;

    auto lists_to_json(const ListAssignment &, bool with_graph = true) -> Json;
    auto lists_from_json(const Json &, const Graph * graph = nullptr) -> ListAssignment;

    auto obstruction_to_json(const Obstruction &) -> Json;
    auto ledger_to_json(const ChargeLedger &) -> Json;
    auto trace_to_json(const RepairTrace &) -> Json;
    auto instance_to_json(const StructuredInstance &) -> Json;
    auto report_to_json(const VerifierReport &, bool with_timing = false) -> Json;

    auto read_json_file(const std::string & path) -> Json;     // "-" reads stdin
    auto dump(const Json &) -> std::string;                    // pretty, sorted keys, trailing newline
}
