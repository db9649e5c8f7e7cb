#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace arb {

// Bad user-supplied configuration (counts, ranges, hyperparameters).
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Malformed input file; line is 1-based.
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t line_no)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}
  std::size_t line;
};

// Structurally valid input violating a domain invariant; names the field.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Instance too large for an exhaustive routine.
struct SizeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Simplex numerical breakdown; carries pivot count and the last basis.
struct SolverError : std::runtime_error {
  SolverError(const std::string& what, int iters, std::vector<int> last_basis)
      : std::runtime_error(what), iterations(iters), basis(std::move(last_basis)) {}
  int iterations;
  std::vector<int> basis;
};

// Non-finite value produced mid-computation; message names the site.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace arb
