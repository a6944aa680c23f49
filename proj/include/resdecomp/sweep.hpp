#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <vector>

#include "resdecomp/graph.hpp"
#include "resdecomp/laplacian.hpp"
#include "resdecomp/sketch.hpp"

namespace resdecomp {

enum class SweepSide { Prefix, Complement };

/// One level set of a potential sweep, reported on its smaller-volume side.
struct SweepEntry {
  double threshold = 0.0;  // potential of the last vertex in the prefix
  std::size_t prefix_length = 0;
  SweepSide side = SweepSide::Prefix;
  double boundary_weight = 0.0;
  double volume = 0.0;  // volume of the reported side, <= w(E)
  double conductance = 0.0;
  /// conductance * volume^(1/2 - epsilon)
  double score = 0.0;
};

struct Sweep {
  /// Vertices by potential, descending; ties by ascending id.
  std::vector<Vertex> order;
  std::vector<SweepEntry> entries;  // entries[k-1] describes prefix length k
  double epsilon = 0.25;

  /// Reported side of entry i, sorted.
  std::vector<Vertex> subset(std::size_t i) const;
  /// Index of the smallest score. Scores within kScoreTieTolerance of the
  /// minimum tie, and the earliest tied entry wins.
  std::size_t best() const;
};

/// Relative gap below which two sweep scores count as equal.
inline constexpr double kScoreTieTolerance = 1e-9;

/// Potentials closer than this fraction of (max - min) sort as equal.
inline constexpr double kPotentialTieBand = 1e-10;

/// Sweeps all n-1 prefixes of the sorted order, updating boundary and volume
/// in O(deg v) per step. Throws DegeneratePotentialError on a constant vector.
Sweep sweep_level_sets(const WeightedGraph& g, const Eigen::VectorXd& potentials, double epsilon);
Sweep sweep_level_sets(const WeightedGraph& g, const PotentialVector& p, double epsilon);

/// Constant K in Reff(s, t) <= K * (deg(s)^-2e + deg(t)^-2e) / (e c^2), for
/// graphs whose potential level sets all score at least c. Taken from the
/// geometric doubling argument: K = 4e / (1 - 2^-2e).
double resistance_bound_constant(double epsilon);

struct CutResult {
  CutStats stats;
  double epsilon = 0.25;
  /// Achieved score Phi(U) * vol(U)^(1/2 - epsilon).
  double certificate_c = 0.0;
  /// Score every level set must beat if Reff(u, v) really is as large as
  /// the estimate says.
  double target_c = 0.0;
  Vertex source = 0;
  Vertex sink = 0;
  double reff_estimate = 0.0;
  double eta = 0.0;
  double zeta = 0.0;
  /// Extra resistance term eta (48 m^(1/2-e) ln n + 2c) / c admitted by
  /// sweeping an approximate potential.
  double robustness_term = 0.0;
  std::size_t sweep_index = 0;

  bool sparse_cut_found() const { return certificate_c < target_c; }
};

/// furthest pair -> target score -> solver accuracy -> s-t potential -> sweep,
/// returning the level set with the smallest score. Needs a connected graph
/// with n >= 2 and 0 < epsilon < 1/2.
CutResult find_sparse_cut(const WeightedGraph& g, double epsilon, const SketchConfig& cfg = {},
                          const SolverOptions& opts = {});
/// Same, reusing a furthest pair computed by the caller.
CutResult find_sparse_cut(const WeightedGraph& g, double epsilon, const FurthestPair& pair,
                          const SolverOptions& opts = {});

}  // namespace resdecomp
