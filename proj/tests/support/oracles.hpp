#pragma once

// Independent reference computations for tests. Nothing here calls the
// library's own solver or sketch code.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "resdecomp/graph.hpp"

namespace oracle {

using resdecomp::Edge;
using resdecomp::Vertex;
using resdecomp::WeightedGraph;

/// Connected graph on n in [n_min, n_max] vertices: a random spanning tree
/// plus each remaining pair with probability `extra`, weights uniform in
/// [w_lo, w_hi].
inline WeightedGraph random_connected(std::mt19937_64& rng, std::size_t n_min, std::size_t n_max,
                                      double extra = 0.3, double w_lo = 0.1, double w_hi = 10.0) {
  std::uniform_int_distribution<std::size_t> pick_n(n_min, n_max);
  std::uniform_real_distribution<double> weight(w_lo, w_hi);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const std::size_t n = pick_n(rng);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::set<std::pair<Vertex, Vertex>> used;
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> parent(0, i - 1);
    Vertex a = order[i], b = order[parent(rng)];
    used.insert({std::min(a, b), std::max(a, b)});
    edges.push_back({a, b, weight(rng)});
  }
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (!used.count({a, b}) && coin(rng) < extra) edges.push_back({a, b, weight(rng)});
    }
  }
  return resdecomp::build_graph(n, edges);
}

inline Eigen::MatrixXd dense_laplacian(const WeightedGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    auto u = static_cast<Eigen::Index>(e.u), v = static_cast<Eigen::Index>(e.v);
    L(u, u) += e.weight;
    L(v, v) += e.weight;
    L(u, v) -= e.weight;
    L(v, u) -= e.weight;
  }
  return L;
}

/// Pseudo-inverse from the spectral decomposition, dropping the null space.
inline Eigen::MatrixXd spectral_pseudoinverse(const WeightedGraph& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense_laplacian(g));
  const Eigen::VectorXd& lam = es.eigenvalues();
  const double cutoff = 1e-9 * std::max(1.0, lam.cwiseAbs().maxCoeff());
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(lam.size());
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    if (lam[i] > cutoff) inv[i] = 1.0 / lam[i];
  }
  return es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose();
}

inline Eigen::MatrixXd spectral_reff_matrix(const WeightedGraph& g) {
  Eigen::MatrixXd P = spectral_pseudoinverse(g);
  const Eigen::Index n = P.rows();
  Eigen::MatrixXd R(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) R(i, j) = P(i, i) + P(j, j) - 2.0 * P(i, j);
  }
  return R;
}

inline double spectral_lambda2(const WeightedGraph& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense_laplacian(g), Eigen::EigenvaluesOnly);
  return es.eigenvalues()[1];
}

/// Shortest-path distances from s with edge length 1 / w.
inline std::vector<double> inverse_weight_distances(const WeightedGraph& g, Vertex s) {
  std::vector<double> dist(g.num_vertices(), std::numeric_limits<double>::infinity());
  using Item = std::pair<double, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[s] = 0.0;
  pq.push({0.0, s});
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (d > dist[v]) continue;
    for (const auto& nb : g.neighbors(v)) {
      double nd = d + 1.0 / nb.weight;
      if (nd < dist[nb.vertex]) {
        dist[nb.vertex] = nd;
        pq.push({nd, nb.vertex});
      }
    }
  }
  return dist;
}

/// Boundary weight and volume of the vertex set encoded by `mask`.
inline std::pair<double, double> mask_cut(const WeightedGraph& g, std::uint64_t mask) {
  double boundary = 0.0, volume = 0.0;
  for (const Edge& e : g.edges()) {
    bool a = (mask >> e.u) & 1U, b = (mask >> e.v) & 1U;
    if (a != b) boundary += e.weight;
    if (a) volume += e.weight;
    if (b) volume += e.weight;
  }
  return {boundary, volume};
}

/// Minimum conductance boundary / min(vol S, vol V\S) over all proper subsets.
inline double brute_force_min_conductance(const WeightedGraph& g) {
  const std::size_t n = g.num_vertices();
  const double total = 2.0 * g.total_weight();
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
    auto [b, vol] = mask_cut(g, mask);
    double denom = std::min(vol, total - vol);
    if (denom > 0) best = std::min(best, b / denom);
  }
  return best;
}

/// Union-find component labels, independent of the library's BFS.
inline std::vector<std::size_t> component_labels(const WeightedGraph& g) {
  std::vector<std::size_t> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : g.edges()) parent[find(e.u)] = find(e.v);
  std::vector<std::size_t> label(g.num_vertices());
  for (std::size_t v = 0; v < label.size(); ++v) label[v] = find(v);
  return label;
}

}  // namespace oracle
