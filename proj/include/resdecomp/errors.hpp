#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace resdecomp {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (range, sign, shape).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An input edge carried a bad weight or an out-of-range endpoint.
class InvalidEdgeError : public InvalidArgument {
 public:
  InvalidEdgeError(std::size_t edge_index, const std::string& what)
      : InvalidArgument(what), edge_index_(edge_index) {}
  std::size_t edge_index() const noexcept { return edge_index_; }

 private:
  std::size_t edge_index_;
};

/// Malformed edge-list text. `line()` is 1-based.
class GraphFormatError : public Error {
 public:
  GraphFormatError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// The operation needs a connected graph (Laplacian pseudo-inverse, lambda_2).
class DisconnectedGraphError : public Error {
 public:
  using Error::Error;
};

/// The two vertices live in different components.
class InfiniteResistanceError : public DisconnectedGraphError {
 public:
  using DisconnectedGraphError::DisconnectedGraphError;
};

/// The iterative solver ran out of iterations before meeting its tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(double residual, std::size_t iterations, const std::string& what)
      : Error(what), residual_(residual), iterations_(iterations) {}
  double residual() const noexcept { return residual_; }
  std::size_t iterations() const noexcept { return iterations_; }

 private:
  double residual_;
  std::size_t iterations_;
};

/// Every vertex has the same potential, so no level set separates anything.
class DegeneratePotentialError : public Error {
 public:
  using Error::Error;
};

/// Broken internal invariant. Seeing one of these is a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace resdecomp
