#include "resdecomp/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "resdecomp/errors.hpp"

namespace resdecomp {
namespace {

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) throw InvalidArgument("epsilon must lie in (0, 1/2)");
}

}  // namespace

std::vector<Vertex> Sweep::subset(std::size_t i) const {
  const SweepEntry& e = entries.at(i);
  std::vector<Vertex> out;
  if (e.side == SweepSide::Prefix) {
    out.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(e.prefix_length));
  } else {
    out.assign(order.begin() + static_cast<std::ptrdiff_t>(e.prefix_length), order.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Sweep::best() const {
  if (entries.empty()) throw InvalidArgument("empty sweep");
  double lowest = entries.front().score;
  for (const SweepEntry& e : entries) lowest = std::min(lowest, e.score);
  const double cutoff = lowest * (1.0 + kScoreTieTolerance);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].score <= cutoff) return i;
  }
  return 0;
}

Sweep sweep_level_sets(const WeightedGraph& g, const Eigen::VectorXd& potentials, double epsilon) {
  check_epsilon(epsilon);
  const std::size_t n = g.num_vertices();
  if (static_cast<std::size_t>(potentials.size()) != n) {
    throw InvalidArgument("potential vector length does not match the graph");
  }
  if (!is_connected(g)) throw DisconnectedGraphError("sweep needs a connected graph");
  const double hi = n ? potentials.maxCoeff() : 0.0;
  const double lo = n ? potentials.minCoeff() : 0.0;
  if (!(hi > lo)) throw DegeneratePotentialError("all potentials are equal");

  // Quantize to a band relative to the potential range so that rounding
  // noise does not reorder vertices that are tied in exact arithmetic.
  std::vector<std::int64_t> level(n);
  for (Vertex v = 0; v < n; ++v) {
    const double x = (potentials[static_cast<Eigen::Index>(v)] - lo) / (hi - lo);
    level[v] = std::llround(x / kPotentialTieBand);
  }
  Sweep sweep;
  sweep.epsilon = epsilon;
  sweep.order.resize(n);
  std::iota(sweep.order.begin(), sweep.order.end(), Vertex{0});
  std::sort(sweep.order.begin(), sweep.order.end(), [&](Vertex a, Vertex b) {
    return level[a] != level[b] ? level[a] > level[b] : a < b;
  });

  const double total_volume = 2.0 * g.total_weight();
  const double exponent = 0.5 - epsilon;
  std::vector<char> inside(n, 0);
  double boundary = 0.0;
  double volume = 0.0;
  sweep.entries.reserve(n - 1);
  for (std::size_t k = 1; k < n; ++k) {
    const Vertex v = sweep.order[k - 1];
    inside[v] = 1;
    volume += g.degree(v);
    for (const Neighbor& nb : g.neighbors(v)) boundary += inside[nb.vertex] ? -nb.weight : nb.weight;
    // Cancellation can leave a tiny negative boundary once a side closes up.
    boundary = std::max(boundary, 0.0);

    SweepEntry entry;
    entry.threshold = potentials[static_cast<Eigen::Index>(v)];
    entry.prefix_length = k;
    entry.boundary_weight = boundary;
    if (volume <= total_volume / 2.0) {
      entry.side = SweepSide::Prefix;
      entry.volume = volume;
    } else {
      entry.side = SweepSide::Complement;
      entry.volume = total_volume - volume;
    }
    entry.conductance = boundary / entry.volume;
    entry.score = entry.conductance * std::pow(entry.volume, exponent);
    sweep.entries.push_back(entry);
  }
  return sweep;
}

Sweep sweep_level_sets(const WeightedGraph& g, const PotentialVector& p, double epsilon) {
  return sweep_level_sets(g, p.values, epsilon);
}

double resistance_bound_constant(double epsilon) {
  check_epsilon(epsilon);
  return 4.0 * epsilon / (1.0 - std::pow(2.0, -2.0 * epsilon));
}

CutResult find_sparse_cut(const WeightedGraph& g, double epsilon, const SketchConfig& cfg,
                          const SolverOptions& opts) {
  check_epsilon(epsilon);
  if (g.num_vertices() < 2) throw InvalidArgument("sparse cut needs at least two vertices");
  if (!is_connected(g)) throw DisconnectedGraphError("sparse cut needs a connected graph");
  return find_sparse_cut(g, epsilon, furthest_pair(g, cfg, opts), opts);
}

CutResult find_sparse_cut(const WeightedGraph& g, double epsilon, const FurthestPair& pair,
                          const SolverOptions& opts) {
  check_epsilon(epsilon);
  opts.validate();
  const std::size_t n = g.num_vertices();
  if (n < 2) throw InvalidArgument("sparse cut needs at least two vertices");
  if (pair.u >= n || pair.v >= n || pair.u == pair.v) throw InvalidArgument("invalid vertex pair");
  if (!is_connected(g)) throw DisconnectedGraphError("sparse cut needs a connected graph");

  CutResult result;
  result.epsilon = epsilon;
  result.source = pair.u;
  result.sink = pair.v;
  result.reff_estimate = pair.estimate;

  const double degree_term =
      std::pow(g.degree(pair.u), -2.0 * epsilon) + std::pow(g.degree(pair.v), -2.0 * epsilon);
  const double c = std::sqrt(resistance_bound_constant(epsilon) * degree_term /
                             (pair.estimate * epsilon));
  result.target_c = c;

  const double m = static_cast<double>(g.num_edges());
  const double log_n = std::log(static_cast<double>(n));
  double eta = degree_term / (epsilon * c) / std::sqrt(96.0 * std::sqrt(m) * log_n);
  eta = std::max(eta, 1e-12 * pair.estimate);
  result.eta = eta;
  result.robustness_term = eta * (48.0 * std::pow(m, 0.5 - epsilon) * log_n + 2.0 * c) / c;

  SolverOptions tight = opts;
  tight.zeta = std::min(opts.zeta, required_solver_accuracy(g, eta));
  result.zeta = tight.zeta;

  const PotentialVector p = st_potential(g, pair.u, pair.v, tight);
  const Sweep sweep = sweep_level_sets(g, p, epsilon);
  const std::size_t best = sweep.best();
  result.sweep_index = best;
  result.stats = cut_stats(g, sweep.subset(best));
  result.certificate_c = sweep.entries[best].score;
  return result;
}

}  // namespace resdecomp
