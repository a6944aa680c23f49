#pragma once

#include <Eigen/Core>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>

#include "resdecomp/graph.hpp"
#include "resdecomp/laplacian.hpp"

namespace resdecomp {

/// Multiplier C in probe_count = ceil(C * ln n / beta^2).
inline constexpr double kProbeConstant = 8.0;

struct SketchConfig {
  /// Two-sided multiplicative accuracy: e^-beta R <= A <= e^beta R.
  double beta = std::log(1.5);
  std::uint64_t seed = 0;
  /// Number of random projections; derived from n and beta when empty.
  std::optional<std::size_t> probe_count;

  void validate() const;
  std::size_t probes_for(std::size_t n) const;
};

struct SourceResistances {
  Vertex source = 0;
  Eigen::VectorXd estimates;  // estimates[v] approximates Reff(source, v)
  std::size_t probes = 0;
  /// True when the probes spanned every edge direction, making the
  /// estimates exact up to rounding.
  bool full_rank = false;
  /// Entries recomputed by an exact single-pair solve after a bad probe.
  std::size_t fallbacks = 0;
};

/// Random-projection estimate of Reff(u, .) on a connected graph.
///
/// Reff(u, v) = ||W^{1/2} B L^+ (e_u - e_v)||^2, and the projection Q W^{1/2} B
/// with Q a k x m Rademacher matrix scaled by 1/sqrt(k) preserves these
/// norms within e^{+-beta} with high probability. When k >= m, Q is replaced
/// by an orthonormalized m x m matrix (Q^T Q = I) and the estimates become
/// exact. Deterministic for a fixed seed.
SourceResistances approx_reff_from_source(const WeightedGraph& g, Vertex u,
                                          const SketchConfig& cfg = {},
                                          const SolverOptions& opts = {});

struct FurthestPair {
  Vertex u = 0;
  Vertex v = 0;
  double estimate = 0.0;  // approximate Reff(u, v)
};

/// Fixes u = 0 and returns the vertex maximizing the estimate from u.
/// With beta <= ln(3/2), Reff(u, v) >= R_diam / 3, and 3 * estimate is an
/// upper bound on R_diam.
FurthestPair furthest_pair(const WeightedGraph& g, const SketchConfig& cfg = {},
                           const SolverOptions& opts = {});

}  // namespace resdecomp
