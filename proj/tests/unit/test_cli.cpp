#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "json.hpp"
#include "resdecomp/cli.hpp"
#include "resdecomp/edge_list.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = resdecomp::cli::execute(args, out, err);
  return {code, out.str(), err.str()};
}

class Scratch {
 public:
  Scratch() {
    static int counter = 0;
    dir_ = fs::temp_directory_path() /
           ("resdecomp_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / name) << text;
    return path(name);
  }

 private:
  fs::path dir_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("gen writes an edge list and a report") {
  Scratch tmp;
  Run r = run({"gen", "--family", "hypercube", "--dim", "3", "--out", tmp.path("h3.txt")});
  REQUIRE(r.code == 0);
  std::string text = slurp(tmp.path("h3.txt"));
  CHECK(std::count(text.begin(), text.end(), '\n') == 12);
  json rep = r.report();
  CHECK(rep["schema"] == 1);
  CHECK(rep["command"] == "gen");
  CHECK(rep["result"]["m"] == 12);

  Run piped = run({"gen", "--family", "complete", "--n", "4"});
  CHECK(piped.code == 0);
  CHECK(std::count(piped.out.begin(), piped.out.end(), '\n') == 6);
}

TEST_CASE("generated files round-trip through every reader") {
  Scratch tmp;
  for (std::vector<std::string> family :
       {std::vector<std::string>{"--family", "grid2d", "--side", "5"},
        {"--family", "random-regular", "--n", "30", "--degree", "3", "--seed", "4"},
        {"--family", "barbell", "--clique-size", "5"}}) {
    std::vector<std::string> args{"gen", "--out", tmp.path("g.txt")};
    args.insert(args.end(), family.begin(), family.end());
    Run gen = run(args);
    REQUIRE(gen.code == 0);
    json made = gen.report()["result"];
    Run cut = run({"cut", "--graph", tmp.path("g.txt")});
    REQUIRE(cut.code == 0);
    json digest = cut.report()["input"];
    for (const char* key : {"n", "m", "total_weight", "min_weight", "max_weight"}) {
      CHECK(digest[key] == made[key]);
    }
  }
}

TEST_CASE("reff on a unit path") {
  Scratch tmp;
  std::string g = tmp.write("p3.txt", "0 1 1\n1 2 1\n");
  Run exact = run({"reff", "--graph", g, "-s", "0", "-t", "2", "--exact"});
  REQUIRE(exact.code == 0);
  CHECK(exact.report()["result"]["reff"] == 2.0);
  Run solved = run({"reff", "--graph", g, "-s", "0", "-t", "2"});
  REQUIRE(solved.code == 0);
  CHECK(solved.report()["result"]["reff"].get<double>() == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("reff across components is a computation error") {
  Scratch tmp;
  std::string g = tmp.write("split.txt", "0 1 1\n2 3 1\n");
  for (bool exact : {false, true}) {
    std::vector<std::string> args{"reff", "--graph", g, "-s", "0", "-t", "3"};
    if (exact) args.push_back("--exact");
    Run r = run(args);
    CHECK(r.code == 2);
    CHECK(r.report()["error"]["type"] == "InfiniteResistanceError");
  }
  Run inside = run({"reff", "--graph", g, "-s", "2", "-t", "3"});
  CHECK(inside.code == 0);
  CHECK(inside.report()["result"]["reff"].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("usage errors exit with 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"reff", "--graph", "x.txt", "-s", "0"}).code == 1);
  CHECK(run({"gen", "--family", "moebius"}).code == 1);
  CHECK(run({"cut", "--graph", "x.txt", "--zeta", "2"}).code == 1);
  CHECK(run({"decompose", "--graph", "x.txt"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("input problems are reported in the error payload") {
  Scratch tmp;
  std::string bad = tmp.write("bad.txt", "0 1 1\n1 2 oops\n");
  Run malformed = run({"cut", "--graph", bad});
  CHECK(malformed.code == 2);
  json err = malformed.report()["error"];
  CHECK(err["type"] == "GraphFormatError");
  CHECK(err["line"] == 2);
  CHECK_FALSE(malformed.err.empty());

  Run missing = run({"cut", "--graph", tmp.path("nope.txt")});
  CHECK(missing.code == 2);
  CHECK(missing.report()["error"]["type"] == "Error");

  std::string h = tmp.write("tri.txt", "0 1 1\n1 2 1\n0 2 1\n");
  Run low = run({"decompose", "--graph", h, "--delta", "3"});
  CHECK(low.code == 2);
  CHECK(low.report()["error"]["type"] == "InvalidArgument");
  Run family = run({"gen", "--family", "hypercube"});
  CHECK(family.code == 2);
}

TEST_CASE("decompose then verify") {
  Scratch tmp;
  REQUIRE(run({"gen", "--family", "hypercube", "--dim", "6", "--out", tmp.path("h6.txt")}).code == 0);
  Run dec = run({"decompose", "--graph", tmp.path("h6.txt"), "--delta", "8", "--out",
                 tmp.path("report.json"), "--partition-out", tmp.path("blocks.json")});
  REQUIRE(dec.code == 0);
  CHECK(dec.out.empty());
  json rep = json::parse(slurp(tmp.path("report.json")));
  for (const char* key : {"blocks", "loss_fraction", "block_rdiam", "psi_max"}) {
    CHECK(rep["result"].contains(key));
  }
  CHECK(rep["config"]["seed"] == 0);

  for (const std::string& file : {tmp.path("report.json"), tmp.path("blocks.json")}) {
    Run ver = run({"verify", "--graph", tmp.path("h6.txt"), "--partition", file, "--delta", "8"});
    REQUIRE(ver.code == 0);
    json result = ver.report()["result"];
    CHECK(result["partition_valid"] == true);
    CHECK(result["passed"] == true);
  }
}

TEST_CASE("decompose with exact verification on a cutting run") {
  Scratch tmp;
  REQUIRE(run({"gen", "--family", "barbell", "--clique-size", "6", "--out", tmp.path("b.txt")}).code == 0);
  Run dec = run({"decompose", "--graph", tmp.path("b.txt"), "--delta", "2", "--c-r", "0.25",
                 "--no-precondition-check", "--exact-verify"});
  REQUIRE(dec.code == 0);
  json result = dec.report()["result"];
  CHECK(result["block_count"] == 2);
  CHECK(result["verification"]["block_rdiam"][0]["exact"] == true);
  CHECK(result["psi_weighted_sum"] == result["type_ii_weight"]);
}

TEST_CASE("verify rejects a non-partition") {
  Scratch tmp;
  std::string g = tmp.write("tri.txt", "0 1 1\n1 2 1\n0 2 1\n");
  std::string p = tmp.write("p.json", R"({"blocks": [[0, 1], [1, 2]]})");
  Run r = run({"verify", "--graph", g, "--partition", p, "--delta", "4"});
  CHECK(r.code == 2);
  CHECK(r.report()["error"]["type"] == "InvalidArgument");
  std::string junk = tmp.write("junk.json", "{\"parts\": 3}");
  CHECK(run({"verify", "--graph", g, "--partition", junk, "--delta", "4"}).code == 2);
}

TEST_CASE("reports are byte-identical across runs") {
  Scratch tmp;
  REQUIRE(run({"gen", "--family", "random-regular", "--n", "40", "--degree", "3", "--seed", "2",
               "--out", tmp.path("r.txt")})
              .code == 0);
  for (std::vector<std::string> args :
       {std::vector<std::string>{"cut", "--graph", tmp.path("r.txt"), "--seed", "5"},
        {"decompose", "--graph", tmp.path("r.txt"), "--delta", "2", "--c-r", "0.05",
         "--no-precondition-check", "--seed", "5"}}) {
    Run a = run(args), b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("timing") == std::string::npos);
  }
  Run timed = run({"cut", "--graph", tmp.path("r.txt"), "--timing"});
  CHECK(timed.report()["timing"]["seconds"].get<double>() >= 0.0);
}

TEST_CASE("numbers are printed with at most 12 significant digits") {
  Scratch tmp;
  std::string g = tmp.write("third.txt", "0 1 3\n");
  Run r = run({"reff", "--graph", g, "-s", "0", "-t", "1", "--exact"});
  REQUIRE(r.code == 0);
  CHECK(r.report()["result"]["reff"] == 0.333333333333);
  CHECK(r.out.find("0.3333333333333") == std::string::npos);
}
