#include "resdecomp/generators.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "random.hpp"
#include "resdecomp/errors.hpp"

namespace resdecomp {

WeightedGraph hypercube(std::size_t dimension) {
  if (dimension < 1 || dimension > 24) throw InvalidArgument("hypercube dimension must be in [1, 24]");
  const std::size_t n = std::size_t{1} << dimension;
  std::vector<Edge> edges;
  edges.reserve(n * dimension / 2);
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t bit = 0; bit < dimension; ++bit) {
      Vertex u = v ^ (std::size_t{1} << bit);
      if (v < u) edges.push_back({v, u, 1.0});
    }
  }
  return WeightedGraph::build(n, edges);
}

WeightedGraph grid2d(std::size_t side) {
  if (side < 2) throw InvalidArgument("grid side must be at least 2");
  std::vector<Edge> edges;
  auto id = [side](std::size_t r, std::size_t c) { return r * side + c; };
  for (std::size_t r = 0; r < side; ++r) {
    for (std::size_t c = 0; c < side; ++c) {
      if (c + 1 < side) edges.push_back({id(r, c), id(r, c + 1), 1.0});
      if (r + 1 < side) edges.push_back({id(r, c), id(r + 1, c), 1.0});
    }
  }
  return WeightedGraph::build(side * side, edges);
}

WeightedGraph complete_graph(std::size_t n) {
  if (n < 1) throw InvalidArgument("complete graph needs at least one vertex");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, 1.0});
  }
  return WeightedGraph::build(n, edges);
}

WeightedGraph random_regular(std::size_t n, std::size_t degree, std::uint64_t seed) {
  if (degree < 1 || degree >= n) throw InvalidArgument("random regular graph needs 1 <= d < n");
  if ((n * degree) % 2 != 0) throw InvalidArgument("n * d must be even");

  // Pairing model: repeatedly join two random free stubs when that keeps the
  // graph simple; restart from scratch if the remaining stubs admit no pair.
  detail::Rng rng(seed);
  constexpr int kRestarts = 1000;
  for (int attempt = 0; attempt < kRestarts; ++attempt) {
    std::vector<Vertex> stubs;
    stubs.reserve(n * degree);
    for (Vertex v = 0; v < n; ++v) stubs.insert(stubs.end(), degree, v);
    std::set<std::pair<Vertex, Vertex>> taken;
    std::vector<Edge> edges;
    bool stuck = false;
    while (!stubs.empty() && !stuck) {
      bool placed = false;
      for (int tries = 0; tries < 64 && !placed; ++tries) {
        auto i = detail::uniform_below(rng, stubs.size());
        auto j = detail::uniform_below(rng, stubs.size());
        Vertex a = stubs[i], b = stubs[j];
        if (i == j || a == b || taken.count({std::min(a, b), std::max(a, b)})) continue;
        taken.insert({std::min(a, b), std::max(a, b)});
        edges.push_back({a, b, 1.0});
        // Remove the higher index first so the lower one stays valid.
        for (auto k : {std::max(i, j), std::min(i, j)}) {
          stubs[k] = stubs.back();
          stubs.pop_back();
        }
        placed = true;
      }
      if (!placed) {
        // Exhaustive check before giving up on this attempt.
        stuck = true;
        for (std::size_t i = 0; i < stubs.size() && stuck; ++i) {
          for (std::size_t j = i + 1; j < stubs.size(); ++j) {
            Vertex a = stubs[i], b = stubs[j];
            if (a != b && !taken.count({std::min(a, b), std::max(a, b)})) {
              stuck = false;
              break;
            }
          }
        }
      }
    }
    if (!stuck) return WeightedGraph::build(n, edges);
  }
  throw Error("random regular generation failed after " + std::to_string(kRestarts) +
              " restarts");
}

WeightedGraph barbell(std::size_t clique_size) {
  if (clique_size < 2) throw InvalidArgument("barbell clique size must be at least 2");
  const std::size_t c = clique_size;
  std::vector<Edge> edges;
  for (std::size_t side = 0; side < 2; ++side) {
    for (Vertex u = 0; u < c; ++u) {
      for (Vertex v = u + 1; v < c; ++v) edges.push_back({side * c + u, side * c + v, 1.0});
    }
  }
  edges.push_back({c - 1, c, 1.0});
  return WeightedGraph::build(2 * c, edges);
}

WeightedGraph generate(const GraphFamily& family) {
  struct Visitor {
    WeightedGraph operator()(const Hypercube& f) const { return hypercube(f.dimension); }
    WeightedGraph operator()(const Grid2d& f) const { return grid2d(f.side); }
    WeightedGraph operator()(const Complete& f) const { return complete_graph(f.n); }
    WeightedGraph operator()(const RandomRegular& f) const {
      return random_regular(f.n, f.degree, f.seed);
    }
    WeightedGraph operator()(const Barbell& f) const { return barbell(f.clique_size); }
  };
  return std::visit(Visitor{}, family);
}

}  // namespace resdecomp
