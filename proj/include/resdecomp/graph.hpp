#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace resdecomp {

using Vertex = std::size_t;
using EdgeId = std::size_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  double weight = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  Vertex vertex;
  double weight;
  EdgeId edge;  // index into WeightedGraph::edges()
};

/// Immutable simple undirected graph with strictly positive edge weights.
///
/// Stored in CSR form. Each adjacency list is sorted by neighbor id, and
/// edges are numbered in (min endpoint, max endpoint) lexicographic order so
/// that `edges()` and edge ids are canonical for a given edge set.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  /// Merges parallel entries by summing their weights and drops self-loops.
  /// Throws InvalidEdgeError naming the first offending input edge.
  static WeightedGraph build(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const noexcept { return degrees_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  std::span<const Neighbor> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  double degree(Vertex v) const { return degrees_[v]; }
  std::span<const double> degrees() const noexcept { return degrees_; }

  /// Canonical edge list, `u < v` on every entry.
  std::span<const Edge> edges() const noexcept { return edges_; }

  double total_weight() const noexcept { return total_weight_; }
  /// Smallest and largest edge weight; 0 for an edgeless graph.
  double min_weight() const noexcept { return min_weight_; }
  double max_weight() const noexcept { return max_weight_; }

  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;

  /// Same topology with every weight multiplied by `factor` (> 0).
  WeightedGraph scaled(double factor) const;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> adjacency_;
  std::vector<double> degrees_;
  std::vector<Edge> edges_;
  double total_weight_ = 0.0;
  double min_weight_ = 0.0;
  double max_weight_ = 0.0;
};

inline WeightedGraph build_graph(std::size_t n, std::span<const Edge> edges) {
  return WeightedGraph::build(n, edges);
}

struct CutStats {
  std::vector<Vertex> subset;  // sorted, duplicates removed
  double boundary_weight = 0.0;
  double volume = 0.0;
  /// w(boundary) / vol; empty when the volume is zero.
  std::optional<double> conductance;
};

CutStats cut_stats(const WeightedGraph& g, std::span<const Vertex> subset);

/// Induced subgraph on a vertex set. New ids follow ascending old ids.
struct InducedSubgraph {
  WeightedGraph graph;
  std::vector<Vertex> to_parent;  // new id -> id in the parent graph
};

InducedSubgraph induced_subgraph(const WeightedGraph& g, std::span<const Vertex> subset);

/// Components ordered by smallest member; each component is sorted.
std::vector<std::vector<Vertex>> connected_components(const WeightedGraph& g);

bool is_connected(const WeightedGraph& g);

/// Sorted, deduplicated copy of `subset`; throws InvalidArgument on ids >= n.
std::vector<Vertex> normalize_subset(std::size_t n, std::span<const Vertex> subset);

}  // namespace resdecomp
