#include "kmcds/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "kmcds/errors.hpp"

namespace kmcds {

namespace {

Json scaled_to_json(std::int64_t value, std::int64_t scale) {
  if (scale == 1) return value;
  return static_cast<double>(value) / static_cast<double>(scale);
}

std::int64_t scaled_from_json(const nlohmann::json& value, std::int64_t scale, const std::string& where) {
  if (value.is_number_integer()) return value.get<std::int64_t>() * scale;
  if (!value.is_number()) throw ParseError(where + ": expected a number", 0);
  const double scaled = value.get<double>() * static_cast<double>(scale);
  const double rounded = std::round(scaled);
  if (std::abs(scaled - rounded) > 1e-9 * std::max(1.0, std::abs(scaled))) {
    throw ParseError(where + ": value is not a multiple of 1/" + std::to_string(scale), 0);
  }
  return static_cast<std::int64_t>(rounded);
}

int line_of(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

nlohmann::json parse_json(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), line_of(text, e.byte > 0 ? e.byte - 1 : 0));
  }
}

Json node_array(const NodeSet& set) {
  Json out = Json::array();
  for (NodeId v : set.members()) out.push_back(v);
  return out;
}

template <typename T>
T require(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'", 0);
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("field '") + key + "' has the wrong type", 0);
  }
}

}  // namespace

Json instance_to_json(const Instance& instance) {
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["k"] = instance.k;
  doc["m"] = instance.m;
  doc["weight_scale"] = instance.weight_scale;
  if (instance.geometry) {
    doc["coord_scale"] = instance.geometry->scale;
    doc["radius"] = scaled_to_json(instance.geometry->radius, instance.geometry->scale);
  }
  Json nodes = Json::array();
  for (NodeId v = 0; v < instance.node_count(); ++v) {
    Json node;
    node["id"] = v;
    node["weight"] = scaled_to_json(instance.weights[v], instance.weight_scale);
    if (instance.geometry) {
      const Point& p = instance.geometry->coords[v];
      node["x"] = scaled_to_json(p.x, instance.geometry->scale);
      node["y"] = scaled_to_json(p.y, instance.geometry->scale);
    }
    nodes.push_back(std::move(node));
  }
  doc["nodes"] = std::move(nodes);
  Json edges = Json::array();
  for (auto [u, v] : instance.graph.edges()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  return doc;
}

Instance instance_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("instance must be a JSON object", 0);
  const int schema = require<int>(doc, "schema");
  if (schema != kSchemaVersion) throw ParseError("unsupported schema version " + std::to_string(schema), 0);

  Instance instance;
  instance.k = require<int>(doc, "k");
  instance.m = require<int>(doc, "m");
  instance.weight_scale = doc.value("weight_scale", std::int64_t{1});
  if (instance.weight_scale < 1) throw ParseError("weight_scale must be >= 1", 0);

  if (!doc.contains("nodes") || !doc["nodes"].is_array()) throw ParseError("missing array 'nodes'", 0);
  const auto& nodes = doc["nodes"];
  const int n = static_cast<int>(nodes.size());
  const bool geometric = doc.contains("radius");
  Geometry geometry;
  if (geometric) {
    geometry.scale = doc.value("coord_scale", std::int64_t{1});
    if (geometry.scale < 1) throw ParseError("coord_scale must be >= 1", 0);
    geometry.radius = scaled_from_json(doc["radius"], geometry.scale, "radius");
    geometry.coords.resize(static_cast<std::size_t>(n));
  }
  instance.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto& node = nodes[i];
    const std::string where = "nodes[" + std::to_string(i) + "]";
    if (!node.is_object() || !node.contains("id") || !node["id"].is_number_integer())
      throw ParseError(where + ": needs an integer 'id'", 0);
    if (node["id"].get<int>() != i) throw ParseError(where + ": ids must be dense and in order", 0);
    if (!node.contains("weight")) throw ParseError(where + ": missing 'weight'", 0);
    instance.weights[i] = scaled_from_json(node["weight"], instance.weight_scale, where + ".weight");
    if (geometric) {
      if (!node.contains("x") || !node.contains("y")) throw ParseError(where + ": missing coordinates", 0);
      geometry.coords[i] = {scaled_from_json(node["x"], geometry.scale, where + ".x"),
                            scaled_from_json(node["y"], geometry.scale, where + ".y")};
    }
  }

  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw ParseError("'edges' must be an array", 0);
    for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
      const auto& e = doc["edges"][i];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        throw ParseError("edges[" + std::to_string(i) + "]: expected [u, v]", 0);
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  } else if (geometric) {
    edges = unit_disk_edges(geometry);
  } else {
    throw ParseError("missing array 'edges'", 0);
  }

  try {
    instance.graph = Graph(n, edges);
    if (geometric) instance.geometry = std::move(geometry);
    validate(instance);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
  return instance;
}

std::string serialize_instance(const Instance& instance) { return instance_to_json(instance).dump(2) + "\n"; }

Instance parse_instance(const std::string& text) { return instance_from_json(parse_json(text)); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

Json certificate_to_json(const Certificate& certificate, const NodeSet& set) {
  Json doc;
  doc["feasible"] = certificate.feasible();
  doc["dominating"] = certificate.dominating;
  doc["connected"] = certificate.connected;
  Json counts = Json::array();
  for (NodeId v = 0; v < static_cast<NodeId>(certificate.domination_counts.size()); ++v)
    if (!set.contains(v)) counts.push_back({v, certificate.domination_counts[v]});
  doc["domination_counts"] = std::move(counts);
  doc["undominated"] = certificate.undominated;
  if (certificate.failure) {
    const auto& f = *certificate.failure;
    doc["failure"] = {{"u", f.u}, {"v", f.v}, {"paths", f.connectivity}, {"separator", f.separator}};
  }
  Json witnesses = Json::array();
  for (const auto& w : certificate.witnesses) witnesses.push_back({{"u", w.u}, {"v", w.v}, {"paths", w.paths}});
  doc["witnesses"] = std::move(witnesses);
  return doc;
}

Json report_to_json(const SolutionReport& report, bool with_timings) {
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["variant"] = variant_name(report.variant);
  doc["k"] = report.k;
  doc["m"] = report.m;
  doc["config"] = {{"backend", backend_name(report.config.backend)},
                   {"r_rule", root_rule_name(report.config.root_rule)},
                   {"prune", report.config.prune},
                   {"seed", report.config.seed}};

  Json stages;
  stages["T"] = node_array(report.terminals);
  stages["R"] = node_array(report.attachment);
  stages["S"] = node_array(report.steiner);
  Json forest = Json::array();
  for (auto [u, v] : report.forest.edges) forest.push_back({u, v});
  stages["J"] = std::move(forest);
  stages["P"] = node_array(report.pair_nodes);
  stages["pruned"] = node_array(report.pruned);
  stages["guessed_root"] = report.guessed_root ? Json(*report.guessed_root) : Json(nullptr);
  stages["fallback"] = report.fallback;
  if (report.variant == Variant::kGuessRoot) stages["guess_candidates"] = report.guess_candidates;
  doc["stages"] = std::move(stages);

  doc["solution"] = node_array(report.solution);
  doc["weights"] = {{"T", report.weight_terminals},
                    {"S", report.weight_steiner},
                    {"P", report.weight_pairs},
                    {"pruned", report.weight_pruned},
                    {"total", report.total}};

  doc["guarantee"] = {{"dominating_bound", report.dominating_bound},
                      {"rooted_backend", report.rooted.backend},
                      {"rooted_expression", report.rooted.expression},
                      {"rooted_value", report.rooted.value},
                      {"forest_term", report.forest_term},
                      {"ratio_bound", report.ratio_bound},
                      {"ratio_expression", report.ratio_expression},
                      {"cited",
                       {{"alpha_m", "ln(Delta+m)+1 on general graphs; O(1) on unit-disk graphs"},
                        {"beta_k", report.rooted.cited_beta_k},
                        {"beta_prime_k", report.rooted.cited_beta_prime_k},
                        {"general", "alpha_m + beta'_k + 2(k-1)"},
                        {"unit_disk", "alpha_m + 5 beta_k + 2(k-1); alpha_m + 5 beta_3 for k=3"}}}};
  if (report.conversion) {
    const auto& c = *report.conversion;
    doc["conversion"] = {{"min_degree", c.min_degree},
                         {"max_degree", c.max_degree},
                         {"node_weight", c.node_weight},
                         {"edge_cost", c.edge_cost},
                         {"holds", c.holds},
                         {"degree_bound_note", "k-connected unit-disk graphs keep a k-connected spanning subgraph "
                                               "of maximum degree 5 (k=2) or 5k (k>=3)"}};
  }
  doc["certificate"] = certificate_to_json(report.certificate, report.solution);
  if (with_timings) {
    const auto& t = report.times;
    doc["timings_ms"] = {{"dominating", t.dominating_ms}, {"rooted", t.rooted_ms}, {"forest", t.forest_ms},
                         {"pairs", t.pairs_ms},           {"prune", t.prune_ms},   {"certify", t.certify_ms}};
  }
  return doc;
}

Json oracle_to_json(const OracleResult& result, bool with_timings) {
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["feasible"] = result.optimum.has_value();
  doc["solution"] = result.optimum ? node_array(*result.optimum) : Json(nullptr);
  doc["weight"] = result.optimum ? Json(result.weight) : Json(nullptr);
  doc["examined"] = result.examined;
  if (with_timings) doc["elapsed_ms"] = result.elapsed_ms;
  return doc;
}

NodeSet parse_node_list(const std::string& text, int node_count) {
  const nlohmann::json doc = parse_json(text);
  const nlohmann::json* list = &doc;
  if (doc.is_object()) {
    if (doc.contains("solution")) list = &doc["solution"];
    else if (doc.contains("nodes")) list = &doc["nodes"];
    else throw ParseError("expected 'solution' or 'nodes'", 0);
  }
  if (!list->is_array()) throw ParseError("node list must be an array", 0);
  NodeSet set(node_count);
  for (const auto& v : *list) {
    if (!v.is_number_integer()) throw ParseError("node ids must be integers", 0);
    const int id = v.get<int>();
    if (id < 0 || id >= node_count) throw ParseError("node id " + std::to_string(id) + " out of range", 0);
    set.insert(id);
  }
  return set;
}

}  // namespace kmcds
