#pragma once

#include <initializer_list>
#include <vector>

#include "resdecomp/graph.hpp"

namespace fixture {

using resdecomp::Edge;
using resdecomp::WeightedGraph;

inline WeightedGraph make(std::size_t n, std::initializer_list<Edge> edges) {
  std::vector<Edge> list(edges);
  return resdecomp::build_graph(n, list);
}

inline WeightedGraph path(std::size_t n, double w = 1.0) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, w});
  return resdecomp::build_graph(n, edges);
}

inline WeightedGraph triangle() { return make(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}); }

inline WeightedGraph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.push_back({0, i, 1.0});
  return resdecomp::build_graph(leaves + 1, edges);
}

/// Two unit triangles {0,1,2} and {3,4,5} joined by the edge 2-3.
inline WeightedGraph bridged_triangles() {
  return make(6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1}, {2, 3, 1}});
}

}  // namespace fixture
