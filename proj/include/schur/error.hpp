#pragma once

#include <stdexcept>
#include <string>

namespace schur {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A coloring entry lies outside 1..num_colors, the length is zero, or a
/// subset is empty while empty subsets are forbidden.
class MalformedColoring : public Error {
 public:
  using Error::Error;
};

/// Arguments outside an operation's domain (a <= b for the row layout, a
/// special color out of range, a tail that is too long, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A search that cannot be completed exhaustively within the configured
/// budget. Exact oracles refuse rather than return a partial answer.
class IntractableError : public Error {
 public:
  IntractableError(const std::string& what, double estimated_nodes)
      : Error(what), estimated_nodes_(estimated_nodes) {}

  double estimated_nodes() const noexcept { return estimated_nodes_; }

 private:
  double estimated_nodes_;
};

}  // namespace schur
