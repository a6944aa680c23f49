#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "resdecomp/errors.hpp"
#include "resdecomp/generators.hpp"
#include "resdecomp/sketch.hpp"

using namespace resdecomp;

namespace {

SketchConfig seeded(std::uint64_t seed) {
  SketchConfig c;
  c.seed = seed;
  return c;
}

}  // namespace

TEST_CASE("probe count follows n and beta") {
  SketchConfig c;
  CHECK(c.probes_for(100) ==
        static_cast<std::size_t>(std::ceil(8 * std::log(100.0) / (c.beta * c.beta))));
  c.probe_count = 5;
  CHECK(c.probes_for(100) == 5);
  SketchConfig bad;
  bad.beta = 0.0;
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
}

TEST_CASE("sketch on tiny graphs stays within e^beta") {
  const double hi = 1.5, lo = 1 / 1.5;
  SourceResistances edge = approx_reff_from_source(fixture::path(2), 0);
  CHECK(edge.estimates[0] == 0.0);
  CHECK(edge.estimates[1] >= lo);
  CHECK(edge.estimates[1] <= hi);
  SourceResistances path = approx_reff_from_source(fixture::path(3), 0);
  CHECK(path.estimates[2] >= 2 * lo);
  CHECK(path.estimates[2] <= 2 * hi);
}

TEST_CASE("sketch with fewer probes than edges is still accurate on random graphs") {
  std::mt19937_64 rng(31);
  const double bound = std::exp(SketchConfig{}.beta);
  int within = 0, with_projection = 0;
  for (int trial = 0; trial < 50; ++trial) {
    WeightedGraph g = oracle::random_connected(rng, 30, 40, 0.4);
    Eigen::MatrixXd R = oracle::spectral_reff_matrix(g);
    SourceResistances est = approx_reff_from_source(g, 0, seeded(trial));
    if (!est.full_rank) ++with_projection;
    double worst = 1.0;
    for (Vertex v = 1; v < g.num_vertices(); ++v) {
      double ratio = est.estimates[static_cast<Eigen::Index>(v)] / R(0, v);
      worst = std::max({worst, ratio, 1 / ratio});
    }
    if (worst <= bound) ++within;
  }
  CHECK(with_projection > 0);
  CHECK(within >= 49);
}

TEST_CASE("sketch estimates are positive away from the source") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 30; ++trial) {
    WeightedGraph g = oracle::random_connected(rng, 2, 12);
    const Vertex u = rng() % g.num_vertices();
    SourceResistances est = approx_reff_from_source(g, u, seeded(trial));
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      const double a = est.estimates[static_cast<Eigen::Index>(v)];
      if (v == u) {
        CHECK(std::abs(a) <= 1e-9);
      } else {
        CHECK(a > 1e-9);
      }
    }
  }
}

TEST_CASE("sketch is deterministic for a fixed seed") {
  WeightedGraph g = random_regular(200, 4, 3);
  SourceResistances a = approx_reff_from_source(g, 5, seeded(9));
  SourceResistances b = approx_reff_from_source(g, 5, seeded(9));
  CHECK_FALSE(a.full_rank);
  CHECK(a.estimates == b.estimates);
  SourceResistances c = approx_reff_from_source(g, 5, seeded(10));
  CHECK(a.estimates != c.estimates);
}

TEST_CASE("sketch rejects bad inputs") {
  CHECK_THROWS_AS(approx_reff_from_source(fixture::make(3, {{0, 1, 1}}), 0),
                  DisconnectedGraphError);
  CHECK_THROWS_AS(approx_reff_from_source(fixture::path(3), 3), InvalidArgument);
  CHECK_THROWS_AS(furthest_pair(fixture::make(1, {})), InvalidArgument);
}

TEST_CASE("furthest pair examples") {
  FurthestPair edge = furthest_pair(fixture::path(2));
  CHECK(edge.u == 0);
  CHECK(edge.v == 1);
  CHECK(edge.estimate == doctest::Approx(1.0).epsilon(0.5));
  FurthestPair path = furthest_pair(fixture::path(5));
  CHECK(exact_reff(fixture::path(5), path.u, path.v) >= 4.0 / 3.0);
}

TEST_CASE("furthest pair is within a factor three of the diameter") {
  std::mt19937_64 rng(33);
  const double beta = SketchConfig{}.beta;
  for (int trial = 0; trial < 100; ++trial) {
    WeightedGraph g = oracle::random_connected(rng, 2, 12);
    Eigen::MatrixXd R = oracle::spectral_reff_matrix(g);
    FurthestPair p = furthest_pair(g, seeded(trial));
    CHECK(p.u == 0);
    CHECK(R(p.u, p.v) >= R.maxCoeff() / 3.0);
    CHECK(p.estimate <= std::exp(beta) * R(p.u, p.v) + 1e-12);
    CHECK(p.estimate >= std::exp(-beta) * R(p.u, p.v) - 1e-12);
    CHECK(3.0 * p.estimate >= R.maxCoeff() - 1e-12);
  }
}

TEST_CASE("furthest pair on a larger sketched graph") {
  WeightedGraph g = grid2d(12);
  FurthestPair p = furthest_pair(g, seeded(4));
  Eigen::MatrixXd R = exact_reff_matrix(g);
  CHECK(R(p.u, p.v) >= R.maxCoeff() / 3.0);
  CHECK(3.0 * p.estimate >= R.maxCoeff());
}
