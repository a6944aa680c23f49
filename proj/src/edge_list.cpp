#include "resdecomp/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "resdecomp/errors.hpp"

namespace resdecomp {
namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> tokens;
  for (std::string tok; ss >> tok;) tokens.push_back(tok);
  return tokens;
}

std::optional<std::size_t> parse_index(const std::string& tok) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

std::optional<double> parse_real(const std::string& tok) {
  try {
    std::size_t used = 0;
    double value = std::stod(tok, &used);
    if (used != tok.size()) return std::nullopt;
    return value;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

WeightedGraph read_edge_list(std::istream& in) {
  std::optional<std::size_t> header_n;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;
  std::size_t max_id = 0;
  bool any_edge = false;
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto tokens = split_ws(line);
    if (tokens[0] == "n") {
      if (header_n || any_edge) throw GraphFormatError(lineno, "header must precede all edges");
      auto count = tokens.size() == 2 ? parse_index(tokens[1]) : std::nullopt;
      if (!count) throw GraphFormatError(lineno, "expected \"n <count>\"");
      header_n = *count;
      continue;
    }
    if (tokens.size() != 3) throw GraphFormatError(lineno, "expected \"u v w\"");
    auto u = parse_index(tokens[0]);
    auto v = parse_index(tokens[1]);
    auto w = parse_real(tokens[2]);
    if (!u || !v) throw GraphFormatError(lineno, "vertex ids must be non-negative integers");
    if (!w) throw GraphFormatError(lineno, "weight is not a real number");
    if (header_n && (*u >= *header_n || *v >= *header_n)) {
      throw GraphFormatError(lineno, "vertex id exceeds the declared count");
    }
    edges.push_back({*u, *v, *w});
    edge_lines.push_back(lineno);
    max_id = std::max({max_id, *u, *v});
    any_edge = true;
  }
  std::size_t n = header_n ? *header_n : (any_edge ? max_id + 1 : 0);
  try {
    return WeightedGraph::build(n, edges);
  } catch (const InvalidEdgeError& e) {
    throw GraphFormatError(edge_lines[e.edge_index()], e.what());
  }
}

WeightedGraph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const WeightedGraph& g) {
  auto edges = g.edges();
  std::size_t implied = 0;
  for (const Edge& e : edges) implied = std::max(implied, e.v + 1);
  if (implied != g.num_vertices()) out << "n " << g.num_vertices() << '\n';
  auto flags = out.flags();
  auto prec = out.precision(std::numeric_limits<double>::max_digits10);
  for (const Edge& e : edges) out << e.u << ' ' << e.v << ' ' << e.weight << '\n';
  out.precision(prec);
  out.flags(flags);
}

void write_edge_list(const std::filesystem::path& path, const WeightedGraph& g) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  write_edge_list(out, g);
}

}  // namespace resdecomp
