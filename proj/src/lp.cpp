#include "arb/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "arb/errors.hpp"
#include "arb/tolerances.hpp"

namespace arb {

namespace {

bool finite(double v) { return std::isfinite(v); }

}  // namespace

void LPProblem::validate() const {
  const std::size_t n = c.size();
  const std::size_t m = b.size();
  if (a.rows() != m || a.cols() != n) {
    throw ValidationError("A: expected " + std::to_string(m) + "x" + std::to_string(n) +
                          ", have " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  if (l.size() != n || u.size() != n) throw ValidationError("l/u: length mismatch");
  for (double v : c)
    if (!finite(v)) throw ValidationError("c: non-finite entry");
  for (double v : b)
    if (!finite(v)) throw ValidationError("b: non-finite entry");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!finite(a(i, j))) throw ValidationError("A: non-finite entry");
  for (std::size_t j = 0; j < n; ++j) {
    if (!finite(l[j])) throw ValidationError("l: must be finite");
    if (std::isnan(u[j]) || u[j] == -kInf) throw ValidationError("u: must be finite or +inf");
    if (l[j] > u[j]) throw ValidationError("bounds: l > u at variable " + std::to_string(j));
  }
}

const char* to_string(LPStatus s) {
  switch (s) {
    case LPStatus::Optimal: return "optimal";
    case LPStatus::Infeasible: return "infeasible";
    case LPStatus::Unbounded: return "unbounded";
  }
  return "?";
}

bool check_feasible(const LPProblem& lp, const std::vector<double>& x, double tolerance) {
  if (x.size() != lp.num_vars()) {
    throw ValidationError("x: expected length " + std::to_string(lp.num_vars()) + ", got " +
                          std::to_string(x.size()));
  }
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] < lp.l[j] - tolerance || x[j] > lp.u[j] + tolerance) return false;
  }
  for (std::size_t i = 0; i < lp.num_rows(); ++i) {
    double lhs = 0.0;
    const double* row = lp.a.row(i);
    for (std::size_t j = 0; j < x.size(); ++j) lhs += row[j] * x[j];
    if (lhs > lp.b[i] + tolerance) return false;
  }
  return true;
}

double evaluate_objective(const LPProblem& lp, const std::vector<double>& x) {
  if (x.size() != lp.num_vars()) {
    throw ValidationError("x: expected length " + std::to_string(lp.num_vars()) + ", got " +
                          std::to_string(x.size()));
  }
  double v = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) v += lp.c[j] * x[j];
  return v;
}

// ---------------------------------------------------------------------------
// Two-phase tableau simplex.
//
// Internally solves max c.y, A' y <= b', y >= 0 after the shift y = x - l
// (l is always finite) and after turning finite upper bounds into rows.
// Column layout: [0,N) structural, [N,N+M) slacks, [N+M,..) phase-1
// artificials. The objective lives in a z-row (initialized to -c, kept
// canonical by elimination), so "all z-row entries >= -tol" means optimal and
// the z-row rhs is the current objective value.
// ---------------------------------------------------------------------------

namespace {

class Tableau {
 public:
  Tableau(const LPProblem& lp) : lp_(lp) {
    const std::size_t n = lp.num_vars();
    shift_ = lp.l;

    // Rows: original rows with rhs b - A l, then one row per finite upper bound.
    for (std::size_t i = 0; i < lp.num_rows(); ++i) {
      double rhs = lp.b[i];
      for (std::size_t j = 0; j < n; ++j) rhs -= lp.a(i, j) * shift_[j];
      rows_rhs_.push_back(rhs);
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (lp.u[j] != kInf) {
        bound_rows_.push_back(j);
        rows_rhs_.push_back(lp.u[j] - lp.l[j]);
      }
    }

    n_ = n;
    m_ = rows_rhs_.size();
    num_artificial_ = 0;
    for (double rhs : rows_rhs_)
      if (rhs < 0) ++num_artificial_;

    width_ = n_ + m_ + num_artificial_ + 1;  // +1 for rhs
    tab_.assign(m_ * width_, 0.0);
    basis_.resize(m_);

    std::size_t next_art = n_ + m_;
    for (std::size_t i = 0; i < m_; ++i) {
      double* row = tab_.data() + i * width_;
      const double sign = rows_rhs_[i] < 0 ? -1.0 : 1.0;
      if (i < lp.num_rows()) {
        for (std::size_t j = 0; j < n_; ++j) row[j] = sign * lp.a(i, j);
      } else {
        row[bound_rows_[i - lp.num_rows()]] = sign;
      }
      row[n_ + i] = sign;  // slack
      row[width_ - 1] = sign * rows_rhs_[i];
      if (sign < 0) {
        row[next_art] = 1.0;
        basis_[i] = static_cast<int>(next_art);
        ++next_art;
      } else {
        basis_[i] = static_cast<int>(n_ + i);
      }
    }
  }

  LPSolution solve() {
    LPSolution sol;
    if (num_artificial_ > 0) {
      // Phase 1: maximize -sum(artificials).
      std::vector<double> phase1(width_ - 1, 0.0);
      for (std::size_t j = n_ + m_; j < width_ - 1; ++j) phase1[j] = -1.0;
      set_objective(phase1);
      const PivotOutcome out = optimize(width_ - 1);
      if (out == PivotOutcome::Unbounded) {
        // Phase-1 objective is bounded above by 0; this cannot happen.
        throw SolverError("phase 1 reported unbounded", iterations_, basis_);
      }
      if (zrhs_ < -tol::kFeasibility) {
        sol.status = LPStatus::Infeasible;
        sol.iterations = iterations_;
        return sol;
      }
      evict_artificials();
    }

    // Phase 2: original objective over structural + slack columns only.
    std::vector<double> phase2(width_ - 1, 0.0);
    for (std::size_t j = 0; j < n_; ++j) phase2[j] = lp_.c[j];
    set_objective(phase2);
    const PivotOutcome out = optimize(n_ + m_);
    if (out == PivotOutcome::Unbounded) {
      sol.status = LPStatus::Unbounded;
      sol.iterations = iterations_;
      return sol;
    }

    sol.status = LPStatus::Optimal;
    sol.iterations = iterations_;
    sol.x = shift_;
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] >= 0 && static_cast<std::size_t>(basis_[i]) < n_) {
        sol.x[basis_[i]] += rhs(i);
      }
    }
    sol.objective = evaluate_objective(lp_, sol.x);
    return sol;
  }

 private:
  enum class PivotOutcome { Optimal, Unbounded };

  double& at(std::size_t i, std::size_t j) { return tab_[i * width_ + j]; }
  double at(std::size_t i, std::size_t j) const { return tab_[i * width_ + j]; }
  double rhs(std::size_t i) const { return tab_[i * width_ + width_ - 1]; }

  void set_objective(const std::vector<double>& c) {
    zrow_.assign(width_, 0.0);
    for (std::size_t j = 0; j < c.size(); ++j) zrow_[j] = -c[j];
    zrhs_ = 0.0;
    for (std::size_t i = 0; i < m_; ++i) {
      const double factor = zrow_[basis_[i]];
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < width_ - 1; ++j) zrow_[j] -= factor * at(i, j);
      zrhs_ += factor * rhs(i);  // z-row rhs carries +objective
      zrow_[basis_[i]] = 0.0;
    }
  }

  void pivot(std::size_t prow, std::size_t pcol) {
    const double piv = at(prow, pcol);
    double* pr = tab_.data() + prow * width_;
    for (std::size_t j = 0; j < width_; ++j) pr[j] /= piv;
    pr[pcol] = 1.0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == prow) continue;
      const double f = at(i, pcol);
      if (f == 0.0) continue;
      double* ri = tab_.data() + i * width_;
      for (std::size_t j = 0; j < width_; ++j) ri[j] -= f * pr[j];
      ri[pcol] = 0.0;
    }
    const double f = zrow_[pcol];
    if (f != 0.0) {
      for (std::size_t j = 0; j < width_ - 1; ++j) zrow_[j] -= f * pr[j];
      zrhs_ -= f * pr[width_ - 1] * -1.0;  // zrhs tracks +objective
      zrow_[pcol] = 0.0;
    }
    basis_[prow] = static_cast<int>(pcol);
    ++iterations_;
  }

  // Runs the pivot loop over columns [0, allowed_cols).
  PivotOutcome optimize(std::size_t allowed_cols) {
    const int bland_trigger = 2 * static_cast<int>(m_ + n_);
    int stalled = 0;
    bool bland = false;
    const int iteration_cap = 10000 + 200 * static_cast<int>(m_ + n_);

    for (;;) {
      if (iterations_ > iteration_cap) {
        throw SolverError("iteration cap exceeded", iterations_, basis_);
      }
      // Entering column: z-row entry < -kReducedCost.
      std::size_t enter = width_;
      if (!bland) {
        double best = -tol::kReducedCost;
        for (std::size_t j = 0; j < allowed_cols; ++j) {
          if (zrow_[j] < best) {
            best = zrow_[j];
            enter = j;
          }
        }
      } else {
        for (std::size_t j = 0; j < allowed_cols; ++j) {
          if (zrow_[j] < -tol::kReducedCost) {
            enter = j;
            break;
          }
        }
      }
      if (enter == width_) return PivotOutcome::Optimal;

      // Ratio test.
      std::size_t leave = m_;
      double best_ratio = kInf;
      double col_max = 0.0;
      for (std::size_t i = 0; i < m_; ++i) {
        const double d = at(i, enter);
        col_max = std::max(col_max, d);
        if (d <= tol::kPivot) continue;
        const double ratio = rhs(i) / d;
        bool better = ratio < best_ratio - 1e-12;
        if (!better && ratio < best_ratio + 1e-12 && leave < m_) {
          // Tie: lowest row index under Dantzig, lowest basic variable under Bland.
          better = bland ? basis_[i] < basis_[leave] : false;
        }
        if (leave == m_ || better) {
          leave = i;
          best_ratio = std::min(best_ratio, ratio);
        }
      }
      if (leave == m_) {
        if (col_max > 0.0) {
          throw SolverError("pivot magnitude below tolerance", iterations_, basis_);
        }
        return PivotOutcome::Unbounded;
      }

      const double before = zrhs_;
      pivot(leave, enter);
      if (!std::isfinite(zrhs_)) {
        throw SolverError("objective became non-finite", iterations_, basis_);
      }
      if (zrhs_ > before + 1e-12) {
        stalled = 0;
      } else if (!bland && ++stalled >= bland_trigger) {
        bland = true;  // stays on for the rest of the phase
      }
    }
  }

  // After phase 1, pivot basic artificials out on any usable structural или
  // slack entry; a row with none is redundant and its artificial stays basic
  // at zero.
  void evict_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (static_cast<std::size_t>(basis_[i]) < n_ + m_) continue;
      std::size_t best = width_;
      double best_mag = tol::kPivot;
      for (std::size_t j = 0; j < n_ + m_; ++j) {
        const double mag = std::abs(at(i, j));
        if (mag > best_mag) {
          best_mag = mag;
          best = j;
        }
      }
      if (best < width_) pivot(i, best);
    }
  }

  const LPProblem& lp_;
  std::vector<double> shift_;
  std::vector<double> rows_rhs_;
  std::vector<std::size_t> bound_rows_;
  std::size_t n_ = 0, m_ = 0, num_artificial_ = 0, width_ = 0;
  std::vector<double> tab_;
  std::vector<int> basis_;
  std::vector<double> zrow_;
  double zrhs_ = 0.0;
  int iterations_ = 0;
};

}  // namespace

LPSolution simplex_solve(const LPProblem& lp) {
  lp.validate();
  Tableau tableau(lp);
  return tableau.solve();
}

// ---------------------------------------------------------------------------
// Vertex enumeration oracle.
// ---------------------------------------------------------------------------

namespace {

struct HalfSpace {
  std::vector<double> normal;  // normal . x <= offset
  double offset;
};

// Solves the square system (rows of `active`) by Gaussian elimination with
// partial pivoting. Returns false if near-singular.
bool solve_active_set(const std::vector<const HalfSpace*>& active, std::vector<double>& out) {
  const std::size_t n = active.size();
  Matrix g(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g(i, j) = active[i]->normal[j];
    g(i, n) = active[i]->offset;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t i = col + 1; i < n; ++i) {
      if (std::abs(g(i, col)) > std::abs(g(piv, col))) piv = i;
    }
    if (std::abs(g(piv, col)) < 1e-11) return false;
    if (piv != col) {
      for (std::size_t j = 0; j <= n; ++j) std::swap(g(piv, j), g(col, j));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col) continue;
      const double f = g(i, col) / g(col, col);
      if (f == 0.0) continue;
      for (std::size_t j = col; j <= n; ++j) g(i, j) -= f * g(col, j);
    }
  }
  out.resize(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = g(i, n) / g(i, i);
  return true;
}

struct VertexScan {
  bool found = false;
  double objective = 0.0;
  std::vector<double> x;
};

// Enumerates all N-subsets of half-spaces, solves each as an equality system,
// and keeps the best point satisfying every half-space within kFeasibility.
VertexScan best_vertex(const std::vector<HalfSpace>& pool, const std::vector<double>& c) {
  const std::size_t n = c.size();
  const std::size_t p = pool.size();
  VertexScan best;
  if (p < n) return best;

  // Combination counter guard.
  double combos = 1.0;
  for (std::size_t i = 0; i < n; ++i) combos = combos * double(p - i) / double(i + 1);
  if (combos > 5e6) throw SizeError("vertex oracle: too many constraint subsets");

  std::vector<std::size_t> pick(n);
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  std::vector<const HalfSpace*> active(n);
  std::vector<double> x;

  for (;;) {
    for (std::size_t i = 0; i < n; ++i) active[i] = &pool[pick[i]];
    if (solve_active_set(active, x)) {
      bool ok = true;
      for (const auto& h : pool) {
        double lhs = 0.0;
        for (std::size_t j = 0; j < n; ++j) lhs += h.normal[j] * x[j];
        if (lhs > h.offset + tol::kFeasibility) {
          ok = false;
          break;
        }
      }
      if (ok) {
        double obj = 0.0;
        for (std::size_t j = 0; j < n; ++j) obj += c[j] * x[j];
        if (!best.found || obj > best.objective) {
          best.found = true;
          best.objective = obj;
          best.x = x;
        }
      }
    }
    // Next combination (lexicographic).
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (pick[i] != i + p - n) break;
      if (i == 0) return best;
    }
    ++pick[i];
    for (std::size_t j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

LPSolution enumerate_vertices_oracle(const LPProblem& lp) {
  lp.validate();
  const std::size_t n = lp.num_vars();
  if (n > 8) throw SizeError("vertex oracle: limited to 8 variables, got " + std::to_string(n));

  std::vector<HalfSpace> pool;
  for (std::size_t i = 0; i < lp.num_rows(); ++i) {
    HalfSpace h{std::vector<double>(n, 0.0), lp.b[i]};
    for (std::size_t j = 0; j < n; ++j) h.normal[j] = lp.a(i, j);
    pool.push_back(std::move(h));
  }
  for (std::size_t j = 0; j < n; ++j) {
    HalfSpace lo{std::vector<double>(n, 0.0), -lp.l[j]};
    lo.normal[j] = -1.0;
    pool.push_back(std::move(lo));
    if (lp.u[j] != kInf) {
      HalfSpace hi{std::vector<double>(n, 0.0), lp.u[j]};
      hi.normal[j] = 1.0;
      pool.push_back(std::move(hi));
    }
  }

  LPSolution sol;
  const VertexScan main_scan = best_vertex(pool, lp.c);
  if (!main_scan.found) {
    // Every variable carries a finite lower bound, so a nonempty feasible set
    // has a vertex; none found means infeasible.
    sol.status = LPStatus::Infeasible;
    return sol;
  }

  // Recession cone, boxed to [0,1]^n: A d <= 0, d >= 0, d_j = 0 where u_j is
  // finite. A direction with positive objective value proves unboundedness.
  std::vector<HalfSpace> cone;
  for (std::size_t i = 0; i < lp.num_rows(); ++i) {
    HalfSpace h{std::vector<double>(n, 0.0), 0.0};
    for (std::size_t j = 0; j < n; ++j) h.normal[j] = lp.a(i, j);
    cone.push_back(std::move(h));
  }
  for (std::size_t j = 0; j < n; ++j) {
    HalfSpace lo{std::vector<double>(n, 0.0), 0.0};
    lo.normal[j] = -1.0;
    cone.push_back(std::move(lo));
    HalfSpace hi{std::vector<double>(n, 0.0), lp.u[j] == kInf ? 1.0 : 0.0};
    hi.normal[j] = 1.0;
    cone.push_back(std::move(hi));
  }
  const VertexScan ray = best_vertex(cone, lp.c);
  if (ray.found && ray.objective > tol::kReducedCost) {
    sol.status = LPStatus::Unbounded;
    return sol;
  }

  sol.status = LPStatus::Optimal;
  sol.x = main_scan.x;
  sol.objective = main_scan.objective;
  return sol;
}

}  // namespace arb
