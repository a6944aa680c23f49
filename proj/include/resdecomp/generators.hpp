#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>

#include "resdecomp/graph.hpp"

namespace resdecomp {

// Unit-weight synthetic families.

struct Hypercube {
  std::size_t dimension;
};
struct Grid2d {
  std::size_t side;  // side x side lattice
};
struct Complete {
  std::size_t n;
};
struct RandomRegular {
  std::size_t n;
  std::size_t degree;
  std::uint64_t seed;
};
/// Two cliques of `clique_size` joined by one edge between vertex
/// clique_size-1 and vertex clique_size.
struct Barbell {
  std::size_t clique_size;
};

using GraphFamily = std::variant<Hypercube, Grid2d, Complete, RandomRegular, Barbell>;

WeightedGraph generate(const GraphFamily& family);

WeightedGraph hypercube(std::size_t dimension);
WeightedGraph grid2d(std::size_t side);
WeightedGraph complete_graph(std::size_t n);
WeightedGraph random_regular(std::size_t n, std::size_t degree, std::uint64_t seed);
WeightedGraph barbell(std::size_t clique_size);

}  // namespace resdecomp
