#pragma once

#include <limits>
#include <vector>

#include "arb/matrix.hpp"

namespace arb {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// maximize c.x  subject to  A x <= b,  l <= x <= u.
// All entries finite except u, which may be +inf. Lower bounds are always
// finite, which keeps the feasible set pointed (the vertex oracle relies on
// this).
struct LPProblem {
  std::vector<double> c;
  Matrix a;
  std::vector<double> b;
  std::vector<double> l;
  std::vector<double> u;

  std::size_t num_vars() const { return c.size(); }
  std::size_t num_rows() const { return b.size(); }

  void validate() const;  // throws ValidationError
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPSolution {
  LPStatus status = LPStatus::Infeasible;
  std::vector<double> x;   // present iff Optimal
  double objective = 0.0;  // present iff Optimal
  int iterations = 0;      // pivot count
};

const char* to_string(LPStatus s);

// Two-phase dense tableau simplex. Dantzig pricing, Bland's rule after
// 2(M+N) pivots without objective improvement. Deterministic: ties are broken
// by lowest index everywhere. Throws SolverError on numerical breakdown.
LPSolution simplex_solve(const LPProblem& lp);

// Absolute tolerance per row and per bound.
bool check_feasible(const LPProblem& lp, const std::vector<double>& x, double tolerance);
double evaluate_objective(const LPProblem& lp, const std::vector<double>& x);

// Brute-force reference: enumerates every basic solution (all N-subsets of
// {rows, active bounds}), keeps the feasible ones, and checks the recession
// cone for unboundedness. Exponential; only for cross-checking the simplex on
// small instances. Throws SizeError above 8 variables.
LPSolution enumerate_vertices_oracle(const LPProblem& lp);

}  // namespace arb
