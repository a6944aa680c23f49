#include "resdecomp/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "resdecomp/errors.hpp"

namespace resdecomp {

using nlohmann::json;

double round_significant(double x, int digits) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

json json_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return round_significant(x);
}

json graph_digest(const WeightedGraph& g) {
  return {{"n", g.num_vertices()},
          {"m", g.num_edges()},
          {"total_weight", json_number(g.total_weight())},
          {"min_weight", json_number(g.min_weight())},
          {"max_weight", json_number(g.max_weight())}};
}

json to_json(const CutResult& cut) {
  return {{"subset", cut.stats.subset},
          {"boundary_weight", json_number(cut.stats.boundary_weight)},
          {"volume", json_number(cut.stats.volume)},
          {"conductance", cut.stats.conductance ? json_number(*cut.stats.conductance) : json()},
          {"epsilon", json_number(cut.epsilon)},
          {"certificate_c", json_number(cut.certificate_c)},
          {"target_c", json_number(cut.target_c)},
          {"sparse_cut_found", cut.sparse_cut_found()},
          {"source", cut.source},
          {"sink", cut.sink},
          {"reff_estimate", json_number(cut.reff_estimate)},
          {"eta", json_number(cut.eta)},
          {"zeta", json_number(cut.zeta)},
          {"robustness_term", json_number(cut.robustness_term)}};
}

json to_json(const DecompositionResult& result, const WeightedGraph& g) {
  const DecompositionReport& rep = result.report;
  json rdiam = json::array();
  for (const BlockDiameter& d : rep.block_rdiam) {
    rdiam.push_back({{"value", json_number(d.value)}, {"exact", d.exact}});
  }
  double max_rdiam = 0.0;
  for (const BlockDiameter& d : rep.block_rdiam) max_rdiam = std::max(max_rdiam, d.value);
  json charged = json::array();
  auto edges = g.edges();
  for (EdgeId e = 0; e < rep.psi.size(); ++e) {
    if (rep.psi[e] > 0.0) charged.push_back({edges[e].u, edges[e].v, json_number(rep.psi[e])});
  }
  return {{"blocks", result.partition.blocks},
          {"block_count", result.partition.blocks.size()},
          {"block_rdiam", rdiam},
          {"max_block_rdiam", json_number(max_rdiam)},
          {"cut_weight", json_number(rep.cut_weight)},
          {"loss_fraction", json_number(rep.loss_fraction)},
          {"type_i_weight", json_number(rep.type_i_weight)},
          {"type_ii_weight", json_number(rep.type_ii_weight)},
          {"psi_max", json_number(rep.psi_max())},
          {"psi_weighted_sum", json_number(rep.psi_weighted_sum(g))},
          {"psi", charged},
          {"sparse_cuts", rep.sparse_cuts},
          {"boundary_charged_cuts", rep.boundary_charged_cuts},
          {"pruned_vertices", rep.pruned_vertices},
          {"max_depth", rep.max_depth},
          {"parameters",
           {{"cut_budget", json_number(rep.config.cut_budget)},
            {"resistance_target", json_number(rep.config.resistance_target)},
            {"prune_threshold", json_number(rep.config.prune_threshold)},
            {"n_original", rep.config.n_original},
            {"precondition_holds", rep.config.precondition_holds}}}};
}

json to_json(const VerificationRecord& record) {
  json rdiam = json::array();
  for (const BlockDiameter& d : record.block_rdiam) {
    rdiam.push_back({{"value", json_number(d.value)}, {"exact", d.exact}});
  }
  return {{"partition_valid", true},
          {"cut_weight", json_number(record.cut_weight)},
          {"loss_fraction", json_number(record.loss_fraction)},
          {"loss_bound", json_number(record.loss_bound)},
          {"loss_ok", record.loss_ok},
          {"block_rdiam", rdiam},
          {"max_rdiam", json_number(record.max_rdiam)},
          {"rdiam_bound", json_number(record.rdiam_bound)},
          {"rdiam_ok", record.rdiam_ok},
          {"passed", record.passed()}};
}

std::vector<std::vector<Vertex>> parse_partition(const json& doc) {
  const json* blocks = nullptr;
  if (doc.is_object() && doc.contains("blocks")) {
    blocks = &doc.at("blocks");
  } else if (doc.is_object() && doc.contains("result") && doc.at("result").contains("blocks")) {
    blocks = &doc.at("result").at("blocks");
  }
  if (!blocks || !blocks->is_array()) throw InvalidArgument("partition file has no \"blocks\" array");
  try {
    return blocks->get<std::vector<std::vector<Vertex>>>();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed partition blocks: ") + e.what());
  }
}

std::vector<std::vector<Vertex>> read_partition(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidArgument("partition file is not valid JSON: " + std::string(e.what()));
  }
  return parse_partition(doc);
}

void write_partition(const std::filesystem::path& path, const Partition& partition) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << json{{"blocks", partition.blocks}}.dump() << '\n';
}

}  // namespace resdecomp
