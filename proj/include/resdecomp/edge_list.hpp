#pragma once

#include <filesystem>
#include <iosfwd>

#include "resdecomp/graph.hpp"

namespace resdecomp {

// Text format: one "u v w" edge per line, 0-based ids, '#' starts a comment
// line, and an optional "n <count>" header fixes the vertex count (otherwise
// n = 1 + largest id).

WeightedGraph read_edge_list(std::istream& in);
WeightedGraph read_edge_list(const std::filesystem::path& path);

/// Writes the header only when n cannot be recovered from the edges.
void write_edge_list(std::ostream& out, const WeightedGraph& g);
void write_edge_list(const std::filesystem::path& path, const WeightedGraph& g);

}  // namespace resdecomp
