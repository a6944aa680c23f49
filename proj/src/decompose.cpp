#include "resdecomp/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "resdecomp/errors.hpp"
#include "resdecomp/sweep.hpp"

namespace resdecomp {
namespace {

constexpr double kDecompositionEpsilon = 0.25;

/// Resistance diameter of g[block]: exact below the size limit, otherwise
/// the certified 3 x estimate from the furthest-pair sketch.
BlockDiameter block_diameter(const WeightedGraph& g, const std::vector<Vertex>& block,
                             std::size_t exact_limit, const SketchConfig& cfg,
                             const SolverOptions& opts) {
  if (block.size() <= 1) return {0.0, true};
  InducedSubgraph sub = induced_subgraph(g, block);
  if (!is_connected(sub.graph)) return {std::numeric_limits<double>::infinity(), true};
  if (block.size() <= exact_limit) return {exact_rdiam(sub.graph), true};
  return {3.0 * furthest_pair(sub.graph, cfg, opts).estimate, false};
}

}  // namespace

DecompositionConfig DecompositionConfig::make(const WeightedGraph& g, double delta,
                                              const DecompositionOptions& options) {
  if (!(delta >= 2.0) || !std::isfinite(delta)) throw InvalidArgument("delta must be at least 2");
  if (!(options.c_r > 0.0) || !std::isfinite(options.c_r)) {
    throw InvalidArgument("c_r must be positive");
  }
  if (g.num_vertices() == 0) throw InvalidArgument("cannot partition an empty graph");

  DecompositionConfig cfg;
  cfg.delta = delta;
  cfg.epsilon = kDecompositionEpsilon;
  cfg.c_r = options.c_r;
  cfg.n_original = g.num_vertices();
  cfg.total_weight = g.total_weight();
  cfg.cut_budget = cfg.total_weight / delta;
  const double n = static_cast<double>(cfg.n_original);
  cfg.resistance_target = cfg.total_weight > 0.0
                              ? cfg.c_r * delta * delta * n / cfg.cut_budget
                              : std::numeric_limits<double>::infinity();
  cfg.prune_threshold = cfg.cut_budget / (2.0 * n);
  cfg.precondition_holds = cfg.c_r * delta * delta >= 4.0 / cfg.epsilon;
  if (options.enforce_precondition && !cfg.precondition_holds) {
    throw InvalidArgument("c_r * delta^2 = " + std::to_string(cfg.c_r * delta * delta) +
                          " is below 4 / epsilon = " + std::to_string(4.0 / cfg.epsilon) +
                          "; raise delta or c_r");
  }
  return cfg;
}

double DecompositionReport::psi_max() const {
  return psi.empty() ? 0.0 : *std::max_element(psi.begin(), psi.end());
}

double DecompositionReport::psi_weighted_sum(const WeightedGraph& g) const {
  double sum = 0.0;
  auto edges = g.edges();
  for (EdgeId e = 0; e < psi.size() && e < edges.size(); ++e) sum += psi[e] * edges[e].weight;
  return sum;
}

PruneResult prune_low_degree(const WeightedGraph& h, double threshold) {
  if (!(threshold >= 0.0)) throw InvalidArgument("prune threshold must be non-negative");
  const std::size_t n = h.num_vertices();
  std::vector<double> degree(h.degrees().begin(), h.degrees().end());
  std::vector<std::size_t> live_count(n);
  for (Vertex v = 0; v < n; ++v) live_count[v] = h.neighbors(v).size();
  std::vector<char> dead(h.num_edges(), 0);

  PruneResult out;
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    if (live_count[v] > 0 && degree[v] <= threshold) queue.push_back(v);
  }
  // FIFO over a growing vector keeps the removal order deterministic.
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    if (live_count[v] == 0) continue;
    for (const Neighbor& nb : h.neighbors(v)) {
      if (dead[nb.edge]) continue;
      dead[nb.edge] = 1;
      out.removed_weight += nb.weight;
      const Vertex u = nb.vertex;
      const bool was_light = degree[u] <= threshold;
      if (--live_count[u] == 0) {
        degree[u] = 0.0;
      } else {
        degree[u] -= nb.weight;
        if (!was_light && degree[u] <= threshold) queue.push_back(u);
      }
    }
    live_count[v] = 0;
    degree[v] = 0.0;
  }

  std::vector<Edge> kept;
  auto edges = h.edges();
  for (EdgeId e = 0; e < edges.size(); ++e) {
    if (!dead[e]) kept.push_back(edges[e]);
  }
  out.graph = WeightedGraph::build(n, kept);
  for (Vertex v = 0; v < n; ++v) {
    if (out.graph.neighbors(v).empty()) out.isolated.push_back(v);
  }
  return out;
}

double crossing_weight(const WeightedGraph& g, const std::vector<std::vector<Vertex>>& blocks) {
  constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> label(g.num_vertices(), kUnassigned);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (Vertex v : blocks[b]) {
      if (v < label.size()) label[v] = b;
    }
  }
  double cut = 0.0;
  for (const Edge& e : g.edges()) {
    if (label[e.u] != label[e.v]) cut += e.weight;
  }
  return cut;
}

DecompositionResult partition(const WeightedGraph& g, double delta, const SketchConfig& cfg,
                              const SolverOptions& opts, const DecompositionOptions& options) {
  cfg.validate();
  opts.validate();
  DecompositionReport report;
  report.config = DecompositionConfig::make(g, delta, options);
  const DecompositionConfig& conf = report.config;
  report.psi.assign(g.num_edges(), 0.0);
  report.charge_volumes.assign(g.num_edges(), {});

  struct Piece {
    std::vector<Vertex> vertices;  // root ids, sorted
    std::size_t depth;
  };
  struct Accepted {
    std::vector<Vertex> vertices;
    double estimate;  // furthest-pair estimate at acceptance, 0 for singletons
  };
  std::vector<Accepted> accepted;
  std::vector<Piece> stack;
  {
    std::vector<Vertex> all(g.num_vertices());
    for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
    stack.push_back({std::move(all), 0});
  }

  while (!stack.empty()) {
    Piece piece = std::move(stack.back());
    stack.pop_back();
    if (piece.depth > conf.n_original) {
      throw InternalError("recursion depth exceeded the vertex count; a cut failed to shrink");
    }
    report.max_depth = std::max(report.max_depth, piece.depth);

    // Everything inside a piece survived earlier prunes and cuts, so the
    // current graph H is exactly the root graph induced on the piece.
    const InducedSubgraph h = induced_subgraph(g, piece.vertices);
    PruneResult pruned = prune_low_degree(h.graph, conf.prune_threshold);
    report.type_i_weight += pruned.removed_weight;
    for (Vertex v : pruned.isolated) {
      if (!h.graph.neighbors(v).empty()) ++report.pruned_vertices;
      accepted.push_back({{h.to_parent[v]}, 0.0});
    }

    for (const auto& comp : connected_components(pruned.graph)) {
      if (comp.size() < 2) continue;
      const InducedSubgraph part = induced_subgraph(pruned.graph, comp);
      std::vector<Vertex> root_ids(comp.size());
      for (Vertex i = 0; i < comp.size(); ++i) root_ids[i] = h.to_parent[part.to_parent[i]];

      const FurthestPair pair = furthest_pair(part.graph, cfg, opts);
      if (pair.estimate <= conf.resistance_target) {
        accepted.push_back({std::move(root_ids), pair.estimate});
        continue;
      }

      const CutResult cut = find_sparse_cut(part.graph, conf.epsilon, pair, opts);
      ++report.sparse_cuts;
      report.type_ii_weight += cut.stats.boundary_weight;

      std::vector<char> in_u(comp.size(), 0);
      for (Vertex v : cut.stats.subset) in_u[v] = 1;
      double internal_weight = 0.0;
      for (const Edge& e : part.graph.edges()) {
        if (in_u[e.u] && in_u[e.v]) internal_weight += e.weight;
      }
      auto root_edge = [&](const Edge& e) {
        auto id = g.find_edge(root_ids[e.u], root_ids[e.v]);
        if (!id) throw InternalError("sub-graph edge missing from the root graph");
        return *id;
      };
      if (internal_weight > 0.0) {
        const double increment = cut.stats.boundary_weight / internal_weight;
        for (const Edge& e : part.graph.edges()) {
          if (!(in_u[e.u] && in_u[e.v])) continue;
          const EdgeId id = root_edge(e);
          report.psi[id] += increment;
          report.charge_volumes[id].push_back(cut.stats.volume);
        }
      } else {
        ++report.boundary_charged_cuts;
        for (const Edge& e : part.graph.edges()) {
          if (in_u[e.u] != in_u[e.v]) report.psi[root_edge(e)] += 1.0;
        }
      }

      std::vector<Vertex> side_u, side_rest;
      for (Vertex i = 0; i < comp.size(); ++i) (in_u[i] ? side_u : side_rest).push_back(root_ids[i]);
      // LIFO: the smaller-volume side U is processed first.
      stack.push_back({std::move(side_rest), piece.depth + 1});
      stack.push_back({std::move(side_u), piece.depth + 1});
    }
  }

  std::sort(accepted.begin(), accepted.end(),
            [](const Accepted& a, const Accepted& b) { return a.vertices.front() < b.vertices.front(); });
  DecompositionResult result;
  for (Accepted& block : accepted) {
    BlockDiameter diameter;
    if (block.vertices.size() <= 1) {
      diameter = {0.0, true};
    } else if (block.vertices.size() <= options.exact_rdiam_limit) {
      diameter = {exact_rdiam(induced_subgraph(g, block.vertices).graph), true};
    } else {
      diameter = {3.0 * block.estimate, false};
    }
    report.block_rdiam.push_back(diameter);
    result.partition.blocks.push_back(std::move(block.vertices));
  }
  result.partition.cut_weight = crossing_weight(g, result.partition.blocks);
  report.cut_weight = result.partition.cut_weight;
  report.loss_fraction = conf.total_weight > 0.0 ? report.cut_weight / conf.total_weight : 0.0;
  result.report = std::move(report);
  return result;
}

VerificationRecord verify_partition(const WeightedGraph& g,
                                    const std::vector<std::vector<Vertex>>& blocks, double delta,
                                    const VerifyOptions& options) {
  if (!(delta > 0.0)) throw InvalidArgument("delta must be positive");
  const std::size_t n = g.num_vertices();
  std::vector<char> seen(n, 0);
  std::size_t covered = 0;
  for (const auto& block : blocks) {
    if (block.empty()) throw InvalidArgument("partition contains an empty block");
    for (Vertex v : block) {
      if (v >= n) throw InvalidArgument("partition names vertex " + std::to_string(v) + " outside the graph");
      if (seen[v]) throw InvalidArgument("vertex " + std::to_string(v) + " appears in two blocks");
      seen[v] = 1;
      ++covered;
    }
  }
  if (covered != n) throw InvalidArgument("partition does not cover every vertex");

  VerificationRecord rec;
  rec.cut_weight = crossing_weight(g, blocks);
  const double total = g.total_weight();
  rec.loss_fraction = total > 0.0 ? rec.cut_weight / total : 0.0;
  rec.loss_bound = options.c_loss / delta;
  rec.loss_ok = rec.loss_fraction <= rec.loss_bound;
  rec.rdiam_bound = total > 0.0 ? options.c_res * delta * delta * delta * static_cast<double>(n) / total
                                : std::numeric_limits<double>::infinity();
  for (const auto& block : blocks) {
    std::vector<Vertex> sorted = normalize_subset(n, block);
    BlockDiameter d =
        block_diameter(g, sorted, options.exact_rdiam_limit, options.sketch, options.solver);
    rec.max_rdiam = std::max(rec.max_rdiam, d.value);
    rec.block_rdiam.push_back(d);
  }
  rec.rdiam_ok = rec.max_rdiam <= rec.rdiam_bound;
  return rec;
}

}  // namespace resdecomp
