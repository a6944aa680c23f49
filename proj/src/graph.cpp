#include "resdecomp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "resdecomp/errors.hpp"

namespace resdecomp {

WeightedGraph WeightedGraph::build(std::size_t n, std::span<const Edge> edges) {
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u >= n || e.v >= n) {
      throw InvalidEdgeError(i, "edge " + std::to_string(i) + " has an endpoint outside [0, " +
                                    std::to_string(n) + ")");
    }
    if (!std::isfinite(e.weight) || e.weight <= 0.0) {
      throw InvalidEdgeError(i, "edge " + std::to_string(i) +
                                    " has a non-positive or non-finite weight");
    }
    if (e.u == e.v) continue;
    canon.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.weight});
  }
  // Stable so that parallel weights are summed in input order.
  std::stable_sort(canon.begin(), canon.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });

  WeightedGraph g;
  for (const Edge& e : canon) {
    if (!g.edges_.empty() && g.edges_.back().u == e.u && g.edges_.back().v == e.v) {
      g.edges_.back().weight += e.weight;
    } else {
      g.edges_.push_back(e);
    }
  }

  std::vector<std::size_t> counts(n + 1, 0);
  for (const Edge& e : g.edges_) {
    ++counts[e.u + 1];
    ++counts[e.v + 1];
  }
  std::partial_sum(counts.begin(), counts.end(), counts.begin());
  g.offsets_ = counts;
  g.adjacency_.resize(2 * g.edges_.size());
  g.degrees_.assign(n, 0.0);
  std::vector<std::size_t> cursor(counts.begin(), counts.end() - 1);
  for (EdgeId id = 0; id < g.edges_.size(); ++id) {
    const Edge& e = g.edges_[id];
    g.adjacency_[cursor[e.u]++] = {e.v, e.weight, id};
    g.adjacency_[cursor[e.v]++] = {e.u, e.weight, id};
    g.degrees_[e.u] += e.weight;
    g.degrees_[e.v] += e.weight;
    g.total_weight_ += e.weight;
  }
  // Edges are sorted by (u, v); the lists fill in ascending neighbor order
  // except where a vertex appears as `v` before it appears as `u`.
  for (Vertex v = 0; v < n; ++v) {
    std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]),
              [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
  }
  if (!g.edges_.empty()) {
    auto [lo, hi] = std::minmax_element(
        g.edges_.begin(), g.edges_.end(),
        [](const Edge& a, const Edge& b) { return a.weight < b.weight; });
    g.min_weight_ = lo->weight;
    g.max_weight_ = hi->weight;
  }
  return g;
}

std::optional<EdgeId> WeightedGraph::find_edge(Vertex u, Vertex v) const {
  if (u >= num_vertices() || v >= num_vertices()) return std::nullopt;
  auto adj = neighbors(u);
  auto it = std::lower_bound(adj.begin(), adj.end(), v,
                             [](const Neighbor& a, Vertex x) { return a.vertex < x; });
  if (it == adj.end() || it->vertex != v) return std::nullopt;
  return it->edge;
}

WeightedGraph WeightedGraph::scaled(double factor) const {
  if (!std::isfinite(factor) || factor <= 0.0) {
    throw InvalidArgument("scale factor must be positive and finite");
  }
  std::vector<Edge> es(edges_.begin(), edges_.end());
  for (Edge& e : es) e.weight *= factor;
  return build(num_vertices(), es);
}

std::vector<Vertex> normalize_subset(std::size_t n, std::span<const Vertex> subset) {
  std::vector<Vertex> s(subset.begin(), subset.end());
  for (Vertex v : s) {
    if (v >= n) {
      throw InvalidArgument("vertex " + std::to_string(v) + " outside [0, " + std::to_string(n) +
                            ")");
    }
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

CutStats cut_stats(const WeightedGraph& g, std::span<const Vertex> subset) {
  CutStats stats;
  stats.subset = normalize_subset(g.num_vertices(), subset);
  std::vector<char> inside(g.num_vertices(), 0);
  for (Vertex v : stats.subset) inside[v] = 1;
  for (Vertex v : stats.subset) {
    stats.volume += g.degree(v);
    for (const Neighbor& nb : g.neighbors(v)) {
      if (!inside[nb.vertex]) stats.boundary_weight += nb.weight;
    }
  }
  if (stats.volume > 0.0) stats.conductance = stats.boundary_weight / stats.volume;
  return stats;
}

InducedSubgraph induced_subgraph(const WeightedGraph& g, std::span<const Vertex> subset) {
  InducedSubgraph out;
  out.to_parent = normalize_subset(g.num_vertices(), subset);
  constexpr Vertex kAbsent = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> to_child(g.num_vertices(), kAbsent);
  for (Vertex i = 0; i < out.to_parent.size(); ++i) to_child[out.to_parent[i]] = i;

  std::vector<Edge> es;
  for (Vertex i = 0; i < out.to_parent.size(); ++i) {
    for (const Neighbor& nb : g.neighbors(out.to_parent[i])) {
      Vertex j = to_child[nb.vertex];
      if (j != kAbsent && i < j) es.push_back({i, j, nb.weight});
    }
  }
  out.graph = WeightedGraph::build(out.to_parent.size(), es);
  return out;
}

std::vector<std::vector<Vertex>> connected_components(const WeightedGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<Vertex>> comps;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> comp;
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (const Neighbor& nb : g.neighbors(v)) {
        if (!seen[nb.vertex]) {
          seen[nb.vertex] = 1;
          stack.push_back(nb.vertex);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const WeightedGraph& g) {
  return g.num_vertices() <= 1 || connected_components(g).size() == 1;
}

}  // namespace resdecomp
