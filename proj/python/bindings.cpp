#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "resdecomp/cli.hpp"
#include "resdecomp/decompose.hpp"
#include "resdecomp/edge_list.hpp"
#include "resdecomp/errors.hpp"
#include "resdecomp/generators.hpp"
#include "resdecomp/graph.hpp"
#include "resdecomp/laplacian.hpp"
#include "resdecomp/sketch.hpp"
#include "resdecomp/sweep.hpp"

namespace py = pybind11;
using namespace resdecomp;

namespace {

WeightedGraph from_tuples(std::size_t n, const std::vector<std::tuple<Vertex, Vertex, double>>& es) {
  std::vector<Edge> edges;
  edges.reserve(es.size());
  for (const auto& [u, v, w] : es) edges.push_back({u, v, w});
  return build_graph(n, edges);
}

SketchConfig sketch_config(double beta, std::uint64_t seed) {
  SketchConfig c;
  c.beta = beta;
  c.seed = seed;
  return c;
}

SolverOptions solver_options(double zeta) {
  SolverOptions o;
  o.zeta = zeta;
  return o;
}

}  // namespace

PYBIND11_MODULE(_resdecomp, m) {
  m.doc() = "Effective-resistance graph clustering";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<GraphFormatError>(m, "GraphFormatError", base.ptr());
  auto disconnected = py::register_exception<DisconnectedGraphError>(m, "DisconnectedGraphError", base.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
  py::register_exception<DegeneratePotentialError>(m, "DegeneratePotentialError", base.ptr());
  // Registered last so the more specific translator wins.
  py::register_exception<InfiniteResistanceError>(m, "InfiniteResistanceError", disconnected.ptr());

  py::class_<WeightedGraph>(m, "Graph")
      .def(py::init(&from_tuples), py::arg("n"), py::arg("edges"),
           "Build from (u, v, weight) triples; parallel edges merge, self-loops drop.")
      .def_property_readonly("n", &WeightedGraph::num_vertices)
      .def_property_readonly("m", &WeightedGraph::num_edges)
      .def_property_readonly("total_weight", &WeightedGraph::total_weight)
      .def_property_readonly("min_weight", &WeightedGraph::min_weight)
      .def_property_readonly("max_weight", &WeightedGraph::max_weight)
      .def("degree", &WeightedGraph::degree, py::arg("v"))
      .def("edges",
           [](const WeightedGraph& g) {
             std::vector<std::tuple<Vertex, Vertex, double>> out;
             for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v, e.weight);
             return out;
           })
      .def("scaled", &WeightedGraph::scaled, py::arg("factor"))
      .def("__repr__", [](const WeightedGraph& g) {
        std::ostringstream s;
        s << "Graph(n=" << g.num_vertices() << ", m=" << g.num_edges() << ")";
        return s.str();
      });

  m.def("read_edge_list", py::overload_cast<const std::filesystem::path&>(&read_edge_list),
        py::arg("path"));
  m.def("write_edge_list",
        py::overload_cast<const std::filesystem::path&, const WeightedGraph&>(&write_edge_list),
        py::arg("path"), py::arg("graph"));

  m.def("hypercube", &hypercube, py::arg("dimension"));
  m.def("grid2d", &grid2d, py::arg("side"));
  m.def("complete_graph", &complete_graph, py::arg("n"));
  m.def("random_regular", &random_regular, py::arg("n"), py::arg("degree"), py::arg("seed"));
  m.def("barbell", &barbell, py::arg("clique_size"));

  py::class_<CutStats>(m, "CutStats")
      .def_readonly("subset", &CutStats::subset)
      .def_readonly("boundary_weight", &CutStats::boundary_weight)
      .def_readonly("volume", &CutStats::volume)
      .def_readonly("conductance", &CutStats::conductance);
  m.def(
      "cut_stats",
      [](const WeightedGraph& g, const std::vector<Vertex>& s) { return cut_stats(g, s); },
      py::arg("graph"), py::arg("subset"));
  m.def("connected_components", &connected_components, py::arg("graph"));

  m.def("exact_reff", &exact_reff, py::arg("graph"), py::arg("s"), py::arg("t"));
  m.def("exact_reff_matrix", &exact_reff_matrix, py::arg("graph"));
  m.def("exact_rdiam", &exact_rdiam, py::arg("graph"));
  m.def(
      "st_potential",
      [](const WeightedGraph& g, Vertex s, Vertex t, double zeta) {
        return st_potential(g, s, t, solver_options(zeta)).values;
      },
      py::arg("graph"), py::arg("s"), py::arg("t"), py::arg("zeta") = SolverOptions{}.zeta,
      "Potentials of a unit s-t current, zero at t.");
  m.def(
      "approx_reff_from_source",
      [](const WeightedGraph& g, Vertex u, double beta, std::uint64_t seed) {
        return approx_reff_from_source(g, u, sketch_config(beta, seed)).estimates;
      },
      py::arg("graph"), py::arg("source"), py::arg("beta") = SketchConfig{}.beta,
      py::arg("seed") = 0);
  m.def(
      "furthest_pair",
      [](const WeightedGraph& g, double beta, std::uint64_t seed) {
        FurthestPair p = furthest_pair(g, sketch_config(beta, seed));
        return py::make_tuple(p.u, p.v, p.estimate);
      },
      py::arg("graph"), py::arg("beta") = SketchConfig{}.beta, py::arg("seed") = 0,
      "(u, v, estimated Reff(u, v))");

  py::class_<CutResult>(m, "CutResult")
      .def_property_readonly("subset", [](const CutResult& c) { return c.stats.subset; })
      .def_property_readonly("conductance",
                             [](const CutResult& c) { return c.stats.conductance; })
      .def_property_readonly("boundary_weight",
                             [](const CutResult& c) { return c.stats.boundary_weight; })
      .def_property_readonly("volume", [](const CutResult& c) { return c.stats.volume; })
      .def_readonly("certificate_c", &CutResult::certificate_c)
      .def_readonly("target_c", &CutResult::target_c)
      .def_readonly("source", &CutResult::source)
      .def_readonly("sink", &CutResult::sink)
      .def_readonly("reff_estimate", &CutResult::reff_estimate)
      .def_property_readonly("sparse_cut_found", &CutResult::sparse_cut_found);
  m.def(
      "find_sparse_cut",
      [](const WeightedGraph& g, double epsilon, std::uint64_t seed) {
        return find_sparse_cut(g, epsilon, sketch_config(SketchConfig{}.beta, seed));
      },
      py::arg("graph"), py::arg("epsilon") = 0.25, py::arg("seed") = 0);

  py::class_<DecompositionResult>(m, "Decomposition")
      .def_property_readonly("blocks",
                             [](const DecompositionResult& r) { return r.partition.blocks; })
      .def_property_readonly("cut_weight",
                             [](const DecompositionResult& r) { return r.report.cut_weight; })
      .def_property_readonly("loss_fraction",
                             [](const DecompositionResult& r) { return r.report.loss_fraction; })
      .def_property_readonly("type_i_weight",
                             [](const DecompositionResult& r) { return r.report.type_i_weight; })
      .def_property_readonly("type_ii_weight",
                             [](const DecompositionResult& r) { return r.report.type_ii_weight; })
      .def_property_readonly("psi", [](const DecompositionResult& r) { return r.report.psi; })
      .def_property_readonly("resistance_target",
                             [](const DecompositionResult& r) {
                               return r.report.config.resistance_target;
                             })
      .def_property_readonly("block_rdiam", [](const DecompositionResult& r) {
        std::vector<double> out;
        for (const BlockDiameter& d : r.report.block_rdiam) out.push_back(d.value);
        return out;
      });
  m.def(
      "partition",
      [](const WeightedGraph& g, double delta, std::uint64_t seed, double c_r) {
        DecompositionOptions options;
        options.c_r = c_r;
        return partition(g, delta, sketch_config(SketchConfig{}.beta, seed), {}, options);
      },
      py::arg("graph"), py::arg("delta"), py::arg("seed") = 0, py::arg("c_r") = 1.0);

  py::class_<VerificationRecord>(m, "Verification")
      .def_readonly("cut_weight", &VerificationRecord::cut_weight)
      .def_readonly("loss_fraction", &VerificationRecord::loss_fraction)
      .def_readonly("loss_ok", &VerificationRecord::loss_ok)
      .def_readonly("max_rdiam", &VerificationRecord::max_rdiam)
      .def_readonly("rdiam_bound", &VerificationRecord::rdiam_bound)
      .def_readonly("rdiam_ok", &VerificationRecord::rdiam_ok)
      .def_property_readonly("passed", &VerificationRecord::passed);
  m.def(
      "verify_partition",
      [](const WeightedGraph& g, const std::vector<std::vector<Vertex>>& blocks, double delta) {
        return verify_partition(g, blocks, delta);
      },
      py::arg("graph"), py::arg("blocks"), py::arg("delta"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::execute(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run a CLI subcommand; returns (exit_code, stdout, stderr).");
}
