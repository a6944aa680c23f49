#include "resdecomp/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <typeinfo>

#include "CLI11.hpp"
#include "json.hpp"
#include "resdecomp/decompose.hpp"
#include "resdecomp/edge_list.hpp"
#include "resdecomp/errors.hpp"
#include "resdecomp/generators.hpp"
#include "resdecomp/graph.hpp"
#include "resdecomp/laplacian.hpp"
#include "resdecomp/report.hpp"
#include "resdecomp/sketch.hpp"
#include "resdecomp/sweep.hpp"

namespace resdecomp::cli {
namespace {

using nlohmann::json;

struct CommonFlags {
  std::string out;
  bool timing = false;
};

struct GenFlags {
  std::string family;
  std::size_t dim = 0, side = 0, n = 0, degree = 0, clique_size = 0;
  std::uint64_t seed = 0;
};

struct SolverFlags {
  double zeta = SolverOptions{}.zeta;
  std::size_t max_iterations = SolverOptions{}.max_iterations;
  std::string method = "auto";

  SolverOptions options(std::uint64_t seed) const {
    SolverOptions o;
    o.zeta = zeta;
    o.max_iterations = max_iterations;
    o.method = method == "dense"       ? SolverMethod::Dense
               : method == "iterative" ? SolverMethod::Iterative
                                       : SolverMethod::Auto;
    o.seed = seed;
    return o;
  }
  json echo() const { return {{"zeta", json_number(zeta)}, {"solver", method}}; }
};

struct SketchFlags {
  double beta = SketchConfig{}.beta;
  std::uint64_t seed = 0;
  std::size_t probes = 0;  // 0: derived from n and beta

  SketchConfig config() const {
    SketchConfig c;
    c.beta = beta;
    c.seed = seed;
    if (probes > 0) c.probe_count = probes;
    return c;
  }
  json echo(std::size_t n) const {
    SketchConfig c = config();
    return {{"beta", json_number(beta)}, {"seed", seed}, {"probes", c.probes_for(n)}};
  }
};

struct ReffFlags {
  std::string graph;
  Vertex s = 0, t = 0;
  bool exact = false;
};

struct CutFlags {
  std::string graph;
  double epsilon = 0.25;
};

struct DecomposeFlags {
  std::string graph;
  double delta = 0.0;
  double c_r = 1.0;
  bool exact_verify = false;
  bool skip_precondition = false;
  std::size_t exact_limit = kDenseSolverLimit;
  std::string partition_out;
};

struct VerifyFlags {
  std::string graph;
  std::string partition;
  double delta = 0.0;
  double c_loss = kLossConstant;
  double c_res = kResistanceConstant;
  std::size_t exact_limit = kDenseSolverLimit;
};

json echo_args(const std::vector<std::string>& args) {
  json a = json::array();
  for (const std::string& s : args) a.push_back(s);
  return a;
}

std::string error_type(const std::exception& e) {
  if (dynamic_cast<const GraphFormatError*>(&e)) return "GraphFormatError";
  if (dynamic_cast<const InvalidEdgeError*>(&e)) return "InvalidEdgeError";
  if (dynamic_cast<const InvalidArgument*>(&e)) return "InvalidArgument";
  if (dynamic_cast<const InfiniteResistanceError*>(&e)) return "InfiniteResistanceError";
  if (dynamic_cast<const DisconnectedGraphError*>(&e)) return "DisconnectedGraphError";
  if (dynamic_cast<const ConvergenceError*>(&e)) return "ConvergenceError";
  if (dynamic_cast<const DegeneratePotentialError*>(&e)) return "DegeneratePotentialError";
  if (dynamic_cast<const InternalError*>(&e)) return "InternalError";
  if (dynamic_cast<const Error*>(&e)) return "Error";
  return "std::exception";
}

void check_vertex(const WeightedGraph& g, Vertex v, const char* flag) {
  if (v >= g.num_vertices()) {
    throw InvalidArgument(std::string(flag) + " = " + std::to_string(v) +
                          " is not a vertex (n = " + std::to_string(g.num_vertices()) + ")");
  }
}

WeightedGraph generate_family(const GenFlags& f) {
  auto need = [&](std::size_t value, const char* flag) {
    if (value == 0) throw InvalidArgument("--family " + f.family + " needs " + flag);
    return value;
  };
  if (f.family == "hypercube") return hypercube(need(f.dim, "--dim"));
  if (f.family == "grid2d") return grid2d(need(f.side, "--side"));
  if (f.family == "complete") return complete_graph(need(f.n, "--n"));
  if (f.family == "random-regular") {
    return random_regular(need(f.n, "--n"), need(f.degree, "--degree"), f.seed);
  }
  if (f.family == "barbell") return barbell(need(f.clique_size, "--clique-size"));
  throw InvalidArgument("unknown family " + f.family);
}

json gen_config(const GenFlags& f) {
  json c = {{"family", f.family}};
  if (f.family == "hypercube") c["dim"] = f.dim;
  if (f.family == "grid2d") c["side"] = f.side;
  if (f.family == "complete") c["n"] = f.n;
  if (f.family == "random-regular") {
    c["n"] = f.n;
    c["degree"] = f.degree;
    c["seed"] = f.seed;
  }
  if (f.family == "barbell") c["clique_size"] = f.clique_size;
  return c;
}

json run_reff(const ReffFlags& f, const SolverFlags& sf, json& report) {
  WeightedGraph g = read_edge_list(f.graph);
  report["input"] = graph_digest(g);
  report["config"] = sf.echo();
  report["config"]["exact"] = f.exact;
  check_vertex(g, f.s, "-s");
  check_vertex(g, f.t, "-t");
  json result = {{"s", f.s}, {"t", f.t}};
  if (f.exact) {
    result["reff"] = json_number(exact_reff(g, f.s, f.t));
    result["method"] = "exact";
    return result;
  }
  auto comps = connected_components(g);
  auto holder = std::find_if(comps.begin(), comps.end(), [&](const std::vector<Vertex>& c) {
    return std::binary_search(c.begin(), c.end(), f.s);
  });
  if (!std::binary_search(holder->begin(), holder->end(), f.t)) {
    throw InfiniteResistanceError("vertices " + std::to_string(f.s) + " and " +
                                  std::to_string(f.t) + " are in different components");
  }
  result["method"] = "solver";
  if (f.s == f.t) {
    result["reff"] = 0.0;
    return result;
  }
  InducedSubgraph sub = induced_subgraph(g, *holder);
  auto local = [&](Vertex v) {
    return static_cast<Vertex>(std::lower_bound(holder->begin(), holder->end(), v) - holder->begin());
  };
  PotentialVector p = st_potential(sub.graph, local(f.s), local(f.t), sf.options(0));
  result["reff"] = json_number(p.drop());
  result["eta"] = json_number(p.eta);
  result["zeta"] = json_number(p.zeta);
  return result;
}

json run_cut(const CutFlags& f, const SketchFlags& kf, const SolverFlags& sf, json& report) {
  WeightedGraph g = read_edge_list(f.graph);
  report["input"] = graph_digest(g);
  report["config"] = kf.echo(g.num_vertices());
  report["config"].update(sf.echo());
  report["config"]["epsilon"] = json_number(f.epsilon);
  report["config"]["resistance_bound_constant"] = json_number(resistance_bound_constant(f.epsilon));
  CutResult cut = find_sparse_cut(g, f.epsilon, kf.config(), sf.options(kf.seed));
  return to_json(cut);
}

json run_decompose(const DecomposeFlags& f, const SketchFlags& kf, const SolverFlags& sf,
                   json& report) {
  WeightedGraph g = read_edge_list(f.graph);
  report["input"] = graph_digest(g);
  report["config"] = kf.echo(g.num_vertices());
  report["config"].update(sf.echo());
  report["config"]["delta"] = json_number(f.delta);
  report["config"]["c_r"] = json_number(f.c_r);
  report["config"]["epsilon"] = 0.25;
  report["config"]["precondition_enforced"] = !f.skip_precondition;
  report["config"]["c_loss"] = json_number(kLossConstant);
  report["config"]["c_res"] = json_number(kResistanceConstant);

  DecompositionOptions options;
  options.c_r = f.c_r;
  options.enforce_precondition = !f.skip_precondition;
  options.exact_rdiam_limit = f.exact_limit;
  SolverOptions solver = sf.options(kf.seed);
  DecompositionResult result = partition(g, f.delta, kf.config(), solver, options);
  json payload = to_json(result, g);
  if (!f.partition_out.empty()) write_partition(f.partition_out, result.partition);
  if (f.exact_verify) {
    VerifyOptions vo;
    vo.exact_rdiam_limit = std::numeric_limits<std::size_t>::max();
    vo.sketch = kf.config();
    vo.solver = solver;
    payload["verification"] = to_json(verify_partition(g, result.partition.blocks, f.delta, vo));
  }
  return payload;
}

json run_verify(const VerifyFlags& f, const SketchFlags& kf, const SolverFlags& sf,
                json& report) {
  WeightedGraph g = read_edge_list(f.graph);
  report["input"] = graph_digest(g);
  report["config"] = kf.echo(g.num_vertices());
  report["config"].update(sf.echo());
  report["config"]["delta"] = json_number(f.delta);
  report["config"]["c_loss"] = json_number(f.c_loss);
  report["config"]["c_res"] = json_number(f.c_res);
  report["config"]["exact_limit"] = f.exact_limit;
  auto blocks = read_partition(f.partition);
  VerifyOptions vo;
  vo.c_loss = f.c_loss;
  vo.c_res = f.c_res;
  vo.exact_rdiam_limit = f.exact_limit;
  vo.sketch = kf.config();
  vo.solver = sf.options(kf.seed);
  json payload = to_json(verify_partition(g, blocks, f.delta, vo));
  payload["block_count"] = blocks.size();
  return payload;
}

void add_common(CLI::App* cmd, CommonFlags& c) {
  cmd->add_option("--out", c.out, "Write the JSON report to this file instead of stdout");
  cmd->add_flag("--timing", c.timing, "Include wall-clock timing in the report");
}

void add_solver(CLI::App* cmd, SolverFlags& s) {
  cmd->add_option("--zeta", s.zeta, "Relative solver accuracy in the Laplacian norm")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--max-iterations", s.max_iterations, "Iteration cap for the iterative solver");
  cmd->add_option("--solver", s.method, "Solver backend")
      ->check(CLI::IsMember({"auto", "dense", "iterative"}));
}

void add_sketch(CLI::App* cmd, SketchFlags& k) {
  cmd->add_option("--seed", k.seed, "Seed for the random projections");
  cmd->add_option("--beta", k.beta, "Sketch accuracy: estimates within a factor e^beta");
  cmd->add_option("--probes", k.probes, "Number of random projections (default: derived)");
}

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Effective-resistance graph clustering", "resdecomp"};
  app.require_subcommand(1);

  CommonFlags common;
  SolverFlags solver;
  SketchFlags sketch;

  GenFlags gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Write a synthetic graph as an edge list");
  gen_cmd->add_option("--family", gen.family, "Graph family")
      ->required()
      ->check(CLI::IsMember({"hypercube", "grid2d", "complete", "random-regular", "barbell"}));
  gen_cmd->add_option("--dim", gen.dim, "Hypercube dimension");
  gen_cmd->add_option("--side", gen.side, "Grid side length");
  gen_cmd->add_option("--n", gen.n, "Vertex count (complete, random-regular)");
  gen_cmd->add_option("--degree", gen.degree, "Degree (random-regular)");
  gen_cmd->add_option("--clique-size", gen.clique_size, "Clique size (barbell)");
  gen_cmd->add_option("--seed", gen.seed, "Seed (random-regular)");
  gen_cmd->add_option("--out", common.out, "Edge-list destination; stdout when omitted");
  gen_cmd->add_flag("--timing", common.timing, "Include wall-clock timing in the report");

  ReffFlags reff;
  CLI::App* reff_cmd = app.add_subcommand("reff", "Effective resistance between two vertices");
  reff_cmd->add_option("--graph", reff.graph, "Edge-list file")->required();
  reff_cmd->add_option("-s", reff.s, "First vertex")->required();
  reff_cmd->add_option("-t", reff.t, "Second vertex")->required();
  reff_cmd->add_flag("--exact", reff.exact, "Use the dense pseudo-inverse instead of the solver");
  add_solver(reff_cmd, solver);
  add_common(reff_cmd, common);

  CutFlags cut;
  CLI::App* cut_cmd = app.add_subcommand("cut", "Low-conductance level-set cut");
  cut_cmd->add_option("--graph", cut.graph, "Edge-list file")->required();
  cut_cmd->add_option("--epsilon", cut.epsilon, "Score exponent, 0 < epsilon < 1/2");
  add_sketch(cut_cmd, sketch);
  add_solver(cut_cmd, solver);
  add_common(cut_cmd, common);

  DecomposeFlags dec;
  CLI::App* dec_cmd = app.add_subcommand("decompose", "Partition into low-resistance blocks");
  dec_cmd->add_option("--graph", dec.graph, "Edge-list file")->required();
  dec_cmd->add_option("--delta", dec.delta, "Loss parameter, delta >= 2")->required();
  dec_cmd->add_option("--c-r", dec.c_r, "Resistance target multiplier");
  dec_cmd->add_flag("--exact-verify", dec.exact_verify,
                    "Verify the result with exact block diameters");
  dec_cmd->add_flag("--no-precondition-check", dec.skip_precondition,
                    "Allow c_r * delta^2 < 16");
  dec_cmd->add_option("--exact-limit", dec.exact_limit,
                      "Largest block whose diameter is computed exactly");
  dec_cmd->add_option("--partition-out", dec.partition_out, "Also write the blocks to this file");
  add_sketch(dec_cmd, sketch);
  add_solver(dec_cmd, solver);
  add_common(dec_cmd, common);

  VerifyFlags ver;
  CLI::App* ver_cmd = app.add_subcommand("verify", "Check a partition against the bounds");
  ver_cmd->add_option("--graph", ver.graph, "Edge-list file")->required();
  ver_cmd->add_option("--partition", ver.partition, "Partition JSON file")->required();
  ver_cmd->add_option("--delta", ver.delta, "Loss parameter the partition was built for")
      ->required();
  ver_cmd->add_option("--c-loss", ver.c_loss, "Loss constant");
  ver_cmd->add_option("--c-res", ver.c_res, "Resistance constant");
  ver_cmd->add_option("--exact-limit", ver.exact_limit,
                      "Largest block whose diameter is computed exactly");
  add_sketch(ver_cmd, sketch);
  add_solver(ver_cmd, solver);
  add_common(ver_cmd, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* cmd = app.get_subcommands().front();
  const std::string name = cmd->get_name();
  json report = {{"schema", kReportSchema}, {"command", name}, {"argv", echo_args(args)}};
  const auto started = std::chrono::steady_clock::now();
  int status = kExitOk;
  try {
    if (name == "gen") {
      WeightedGraph g = generate_family(gen);
      if (common.out.empty()) {
        write_edge_list(out, g);
        return kExitOk;
      }
      write_edge_list(common.out, g);
      report["config"] = gen_config(gen);
      report["result"] = graph_digest(g);
      report["result"]["path"] = common.out;
    } else if (name == "reff") {
      report["result"] = run_reff(reff, solver, report);
    } else if (name == "cut") {
      report["result"] = run_cut(cut, sketch, solver, report);
    } else if (name == "decompose") {
      report["result"] = run_decompose(dec, sketch, solver, report);
    } else {
      report["result"] = run_verify(ver, sketch, solver, report);
    }
  } catch (const std::exception& e) {
    json error = {{"type", error_type(e)}, {"message", e.what()}};
    if (auto* fe = dynamic_cast<const GraphFormatError*>(&e)) error["line"] = fe->line();
    report["error"] = error;
    status = kExitFailure;
  }
  if (common.timing) {
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
    report["timing"] = {{"seconds", elapsed.count()}};
  }

  const std::string text = report.dump(2) + "\n";
  if (name != "gen" && !common.out.empty()) {
    std::ofstream file(common.out);
    if (!file) {
      err << "cannot write " << common.out << "\n";
      return kExitFailure;
    }
    file << text;
  } else {
    out << text;
  }
  if (status != kExitOk) err << report["error"]["message"].get<std::string>() << "\n";
  return status;
}

}  // namespace resdecomp::cli
