#pragma once

#include <string>

#include <json.hpp>

#include "kmcds/connectivity.hpp"
#include "kmcds/graph.hpp"
#include "kmcds/oracle.hpp"
#include "kmcds/solver.hpp"

namespace kmcds {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

/// Instance file:
///   {"schema": 1, "k": 2, "m": 3, "weight_scale": 1,
///    "coord_scale": 1000000, "radius": 0.3,            (unit-disk only)
///    "nodes": [{"id": 0, "weight": 4, "x": 0.1, "y": 0.5}, ...],
///    "edges": [[0, 1], ...]}
/// Weights and coordinates are read as value · scale and must land on an
/// integer. For unit-disk files "edges" may be omitted and is then derived.
Json instance_to_json(const Instance& instance);
Instance instance_from_json(const nlohmann::json& doc);

std::string serialize_instance(const Instance& instance);
/// Throws ParseError; syntax errors carry the line number.
Instance parse_instance(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

Json certificate_to_json(const Certificate& certificate, const NodeSet& set);
Json report_to_json(const SolutionReport& report, bool with_timings);
Json oracle_to_json(const OracleResult& result, bool with_timings);

/// Node list for `verify`: a bare array, {"solution": [...]} (so a solve
/// report works), or {"nodes": [...]}.
NodeSet parse_node_list(const std::string& text, int node_count);

}  // namespace kmcds
