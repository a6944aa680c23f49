#include "resdecomp/sketch.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <string>

#include "random.hpp"
#include "resdecomp/errors.hpp"

namespace resdecomp {
namespace {

// Estimates within this relative distance of the maximum count as ties.
constexpr double kTieTolerance = 1e-9;

Eigen::MatrixXd rademacher_matrix(Eigen::Index rows, Eigen::Index cols, detail::Rng& rng) {
  Eigen::MatrixXd q(rows, cols);
  // Row-major fill order keeps the stream layout independent of Eigen's storage.
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) q(i, j) = detail::rademacher(rng);
  }
  return q;
}

}  // namespace

void SketchConfig::validate() const {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw InvalidArgument("sketch beta must be positive");
  if (probe_count && *probe_count == 0) throw InvalidArgument("probe_count must be positive");
}

std::size_t SketchConfig::probes_for(std::size_t n) const {
  if (probe_count) return *probe_count;
  const double log_n = std::log(static_cast<double>(std::max<std::size_t>(n, 2)));
  return static_cast<std::size_t>(std::ceil(kProbeConstant * log_n / (beta * beta)));
}

SourceResistances approx_reff_from_source(const WeightedGraph& g, Vertex u,
                                          const SketchConfig& cfg, const SolverOptions& opts) {
  cfg.validate();
  const std::size_t n = g.num_vertices();
  if (u >= n) throw InvalidArgument("source vertex outside the graph");
  if (!is_connected(g)) throw DisconnectedGraphError("resistance sketch needs a connected graph");

  SourceResistances out;
  out.source = u;
  out.estimates = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  if (n == 1) return out;

  const auto m = static_cast<Eigen::Index>(g.num_edges());
  const std::size_t wanted = cfg.probes_for(n);
  detail::Rng rng(cfg.seed);
  Eigen::MatrixXd projection;
  if (wanted >= static_cast<std::size_t>(m)) {
    // Gram correction: orthonormalize a square sign matrix so that Q^T Q = I.
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(rademacher_matrix(m, m, rng));
    projection = qr.householderQ();
    out.full_rank = true;
  } else {
    const auto k = static_cast<Eigen::Index>(wanted);
    projection = rademacher_matrix(k, m, rng) / std::sqrt(static_cast<double>(k));
  }
  const Eigen::Index k = projection.rows();
  out.probes = static_cast<std::size_t>(k);

  // Each column of rhs is B^T W^{1/2} q_i for one projection row q_i.
  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), k);
  auto edges = g.edges();
  for (Eigen::Index e = 0; e < m; ++e) {
    const Edge& edge = edges[static_cast<std::size_t>(e)];
    const double root_w = std::sqrt(edge.weight);
    rhs.row(static_cast<Eigen::Index>(edge.u)) += root_w * projection.col(e).transpose();
    rhs.row(static_cast<Eigen::Index>(edge.v)) -= root_w * projection.col(e).transpose();
  }

  LaplacianSolver solver(assemble_laplacian(g), opts);
  const Eigen::MatrixXd embedding = solver.solve(rhs);
  const auto src = static_cast<Eigen::Index>(u);
  for (Eigen::Index v = 0; v < static_cast<Eigen::Index>(n); ++v) {
    if (v == src) continue;
    out.estimates[v] = (embedding.row(src) - embedding.row(v)).squaredNorm();
  }
  for (Vertex v = 0; v < n; ++v) {
    const auto i = static_cast<Eigen::Index>(v);
    if (v != u && !(out.estimates[i] > 0.0 && std::isfinite(out.estimates[i]))) {
      out.estimates[i] = st_potential(g, solver, u, v).drop();
      ++out.fallbacks;
    }
  }
  return out;
}

FurthestPair furthest_pair(const WeightedGraph& g, const SketchConfig& cfg,
                           const SolverOptions& opts) {
  if (g.num_vertices() < 2) throw InvalidArgument("furthest pair needs at least two vertices");
  const SourceResistances from_zero = approx_reff_from_source(g, 0, cfg, opts);
  const double best = from_zero.estimates.maxCoeff();
  FurthestPair pair;
  for (Eigen::Index v = 1; v < from_zero.estimates.size(); ++v) {
    if (from_zero.estimates[v] >= best * (1.0 - kTieTolerance)) {
      pair.v = static_cast<Vertex>(v);
      pair.estimate = from_zero.estimates[v];
      break;
    }
  }
  return pair;
}

}  // namespace resdecomp
