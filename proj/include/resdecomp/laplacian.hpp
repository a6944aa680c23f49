#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <cstddef>
#include <cstdint>
#include <memory>

#include "resdecomp/graph.hpp"

namespace resdecomp {

/// L = D - W as a symmetric sparse matrix.
struct LaplacianMatrix {
  Eigen::SparseMatrix<double> entries;

  std::size_t order() const noexcept { return static_cast<std::size_t>(entries.rows()); }
  Eigen::MatrixXd dense() const { return Eigen::MatrixXd(entries); }
};

LaplacianMatrix assemble_laplacian(const WeightedGraph& g);

enum class SolverMethod { Auto, Dense, Iterative };

/// Graphs up to this order are solved by dense Cholesky under `Auto`.
inline constexpr std::size_t kDenseSolverLimit = 2048;
/// Floor and ceiling applied by required_solver_accuracy.
inline constexpr double kMinSolverAccuracy = 1e-15;
inline constexpr double kMaxSolverAccuracy = 0.5;

struct SolverOptions {
  /// Relative accuracy in the L-energy norm, 0 < zeta < 1.
  double zeta = 1e-10;
  std::size_t max_iterations = 100000;
  SolverMethod method = SolverMethod::Auto;
  /// Reserved for randomized solver internals; both current methods are
  /// deterministic.
  std::uint64_t seed = 0;

  void validate() const;
};

/// Solver for L x = b restricted to the complement of the all-ones vector.
///
/// Every returned x is orthogonal to 1 and satisfies
///   ||x - L^+ b||_L <= zeta * ||L^+ b||_L.
/// The dense path factors once at construction; the iterative path is
/// Jacobi-preconditioned conjugate gradient. `solve` is const and may be
/// called concurrently.
class LaplacianSolver {
 public:
  LaplacianSolver(const LaplacianMatrix& laplacian, const SolverOptions& opts);
  ~LaplacianSolver();
  LaplacianSolver(LaplacianSolver&&) noexcept;
  LaplacianSolver& operator=(LaplacianSolver&&) noexcept;

  Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const;
  /// Solves every column of `rhs`.
  Eigen::MatrixXd solve(const Eigen::MatrixXd& rhs) const;

  SolverMethod method() const noexcept { return method_; }
  std::size_t order() const noexcept { return order_; }
  /// Residual target ||b - L x|| / ||b|| used by the iterative path.
  double relative_residual_target() const noexcept { return residual_target_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  SolverMethod method_ = SolverMethod::Dense;
  std::size_t order_ = 0;
  double residual_target_ = 0.0;
};

Eigen::VectorXd solve_laplacian(const LaplacianMatrix& laplacian, const Eigen::VectorXd& rhs,
                                const SolverOptions& opts);

/// Electric potentials of a unit s-t current, shifted so that values[sink] == 0.
struct PotentialVector {
  Eigen::VectorXd values;
  Vertex source = 0;
  Vertex sink = 0;
  /// Additive per-entry error bound implied by `zeta`.
  double eta = 0.0;
  double zeta = 0.0;

  double drop() const { return values[static_cast<Eigen::Index>(source)]; }
};

PotentialVector st_potential(const WeightedGraph& g, Vertex s, Vertex t, const SolverOptions& opts);
PotentialVector st_potential(const WeightedGraph& g, const LaplacianSolver& solver, Vertex s,
                             Vertex t);

// Dense oracles. Cubic in the component size.

/// L^+ of a connected graph, via (L + J/n)^{-1} - J/n.
Eigen::MatrixXd exact_pseudoinverse(const WeightedGraph& g);
/// All-pairs effective resistance of a connected graph.
Eigen::MatrixXd exact_reff_matrix(const WeightedGraph& g);
/// Throws InfiniteResistanceError when s and t are in different components.
double exact_reff(const WeightedGraph& g, Vertex s, Vertex t);
/// Largest pairwise effective resistance of a connected graph; 0 when n <= 1.
double exact_rdiam(const WeightedGraph& g);

/// min_e w(e) * (min_e w(e) / w(E))^2, the eigenvalue bound with its
/// universal constant fixed at 1.
double lambda2_lower_bound(const WeightedGraph& g);

/// Solver accuracy zeta = eta * min_w^2 / (w(E) sqrt(m)) that keeps every
/// potential within `eta` of the exact one, clamped to
/// [kMinSolverAccuracy, kMaxSolverAccuracy].
double required_solver_accuracy(const WeightedGraph& g, double eta);
/// Inverse of required_solver_accuracy (without clamping).
double additive_accuracy(const WeightedGraph& g, double zeta);

}  // namespace resdecomp
