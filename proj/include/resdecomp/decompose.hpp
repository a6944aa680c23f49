#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "resdecomp/graph.hpp"
#include "resdecomp/laplacian.hpp"
#include "resdecomp/sketch.hpp"

namespace resdecomp {

/// Loss and resistance constants used by verify_partition.
inline constexpr double kLossConstant = 8.0;
inline constexpr double kResistanceConstant = 32.0;

struct DecompositionOptions {
  double c_r = 1.0;
  /// Reject configurations with c_r * delta^2 < 4 / epsilon.
  bool enforce_precondition = true;
  /// Blocks up to this size get an exact resistance diameter in the report.
  std::size_t exact_rdiam_limit = kDenseSolverLimit;
};

/// Parameters of one decomposition run, frozen from the root graph.
struct DecompositionConfig {
  double delta = 0.0;
  double epsilon = 0.25;
  double c_r = 1.0;
  std::size_t n_original = 0;
  double total_weight = 0.0;
  /// Cut-weight budget W = w(E) / delta.
  double cut_budget = 0.0;
  /// R = c_r * delta^2 * n / W = c_r * delta^3 * n / w(E).
  double resistance_target = 0.0;
  /// Vertices at or below this degree get their edges deleted: W / (2n).
  double prune_threshold = 0.0;
  /// Whether c_r * delta^2 >= 4 / epsilon holds.
  bool precondition_holds = false;

  /// Throws InvalidArgument for delta < 2, c_r <= 0, an empty graph, or (when
  /// enforced) a failed precondition.
  static DecompositionConfig make(const WeightedGraph& g, double delta,
                                  const DecompositionOptions& options = {});
};

struct Partition {
  std::vector<std::vector<Vertex>> blocks;  // each sorted, ordered by first id
  /// Weight of edges whose endpoints lie in different blocks.
  double cut_weight = 0.0;
};

struct BlockDiameter {
  double value = 0.0;
  bool exact = false;  // false: 3 x sketch estimate, an upper bound
};

struct DecompositionReport {
  DecompositionConfig config;
  double cut_weight = 0.0;
  double loss_fraction = 0.0;
  double type_i_weight = 0.0;   // removed by low-degree pruning
  double type_ii_weight = 0.0;  // removed by sparse level-set cuts
  std::vector<BlockDiameter> block_rdiam;  // aligned with Partition::blocks
  /// Token total per root edge id.
  std::vector<double> psi;
  /// Per root edge, vol_H(U) of every cut side that charged it, in order.
  std::vector<std::vector<double>> charge_volumes;
  std::size_t sparse_cuts = 0;
  /// Cuts whose small side had no internal edge; their boundary edges carry
  /// the tokens instead.
  std::size_t boundary_charged_cuts = 0;
  std::size_t pruned_vertices = 0;
  std::size_t max_depth = 0;

  double psi_max() const;
  /// sum_e psi(e) * w(e) over the root graph's edges.
  double psi_weighted_sum(const WeightedGraph& g) const;
};

struct DecompositionResult {
  Partition partition;
  DecompositionReport report;
};

struct PruneResult {
  WeightedGraph graph;
  double removed_weight = 0.0;
  /// Vertices with no remaining edge, ascending (includes ones isolated on input).
  std::vector<Vertex> isolated;
};

/// Repeatedly deletes every edge at a vertex whose current degree is
/// <= threshold until no vertex with positive degree is that light.
PruneResult prune_low_degree(const WeightedGraph& h, double threshold);

/// Recursive effective-resistance partitioning. Each piece is pruned, split
/// into components, and either accepted (furthest-pair estimate <= R) or cut
/// at its best potential level set with epsilon = 1/4.
DecompositionResult partition(const WeightedGraph& g, double delta, const SketchConfig& cfg = {},
                              const SolverOptions& opts = {},
                              const DecompositionOptions& options = {});

struct VerifyOptions {
  double c_loss = kLossConstant;
  double c_res = kResistanceConstant;
  std::size_t exact_rdiam_limit = kDenseSolverLimit;
  SketchConfig sketch;
  SolverOptions solver;
};

struct VerificationRecord {
  double cut_weight = 0.0;
  double loss_fraction = 0.0;
  double loss_bound = 0.0;  // c_loss / delta
  bool loss_ok = false;
  /// Infinite for a block that is disconnected in g.
  std::vector<BlockDiameter> block_rdiam;
  double max_rdiam = 0.0;
  double rdiam_bound = 0.0;  // c_res * delta^3 * n / w(E)
  bool rdiam_ok = false;

  bool passed() const { return loss_ok && rdiam_ok; }
};

/// Throws InvalidArgument when the blocks are not a partition of V(g).
VerificationRecord verify_partition(const WeightedGraph& g,
                                    const std::vector<std::vector<Vertex>>& blocks, double delta,
                                    const VerifyOptions& options = {});

/// Total weight of edges crossing between blocks.
double crossing_weight(const WeightedGraph& g, const std::vector<std::vector<Vertex>>& blocks);

}  // namespace resdecomp
