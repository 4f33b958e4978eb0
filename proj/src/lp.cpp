#include "attackset/lp.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "attackset/errors.hpp"

namespace attackset {
namespace {

constexpr double kPivotEps = 1e-11;

// Dictionary-form tableau: basis columns of `a` are kept as identity, rhs
// stays nonnegative, `obj` holds reduced costs (maximization) and `value`
// the current objective.
struct Tableau {
  Eigen::MatrixXd a;
  Eigen::VectorXd rhs;
  Eigen::RowVectorXd obj;
  double value = 0.0;
  std::vector<int> basis;

  void pivot(int row, int col) {
    a.row(row) /= a(row, col);
    rhs(row) /= a(row, col);
    a(row, col) = 1.0;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row || std::abs(a(i, col)) < kPivotEps) {
        continue;
      }
      const double f = a(i, col);
      a.row(i) -= f * a.row(row);
      rhs(i) -= f * rhs(row);
      a(i, col) = 0.0;
      if (rhs(i) < 0.0 && rhs(i) > -1e-13) {
        rhs(i) = 0.0;
      }
    }
    const double d = obj(col);
    obj -= d * a.row(row);
    value += d * rhs(row);
    obj(col) = 0.0;
    basis[static_cast<size_t>(row)] = col;
  }
};

enum class RunStatus { kOptimal, kUnbounded };

// Primal simplex loop on a feasible dictionary. `allowed` masks the columns
// that may enter (used to lock artificials out in phase 2 cleanup).
RunStatus run_simplex(Tableau& t, const std::vector<bool>& allowed, double opt_eps) {
  const int cols = static_cast<int>(t.a.cols());
  const int rows = static_cast<int>(t.a.rows());
  const long bland_after = 50L * (rows + cols + 10);
  const long hard_cap = 500L * (rows + cols + 10) + 20000;

  for (long iter = 0;; ++iter) {
    if (iter > hard_cap) {
      throw NumericalError("simplex: iteration cap exceeded (possible cycling)");
    }
    const bool bland = iter > bland_after;

    int enter = -1;
    double best = opt_eps;
    for (int j = 0; j < cols; ++j) {
      if (!allowed[static_cast<size_t>(j)]) {
        continue;
      }
      if (t.obj(j) > best) {
        enter = j;
        if (bland) {
          break;  // first improving column
        }
        best = t.obj(j);
      }
    }
    if (enter < 0) {
      return RunStatus::kOptimal;
    }

    int leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < rows; ++i) {
      if (t.a(i, enter) <= kPivotEps) {
        continue;
      }
      const double ratio = t.rhs(i) / t.a(i, enter);
      if (ratio < best_ratio - 1e-12 ||
          (ratio < best_ratio + 1e-12 &&
           (leave < 0 || t.basis[static_cast<size_t>(i)] < t.basis[static_cast<size_t>(leave)]))) {
        best_ratio = ratio;
        leave = i;
      }
    }
    if (leave < 0) {
      return RunStatus::kUnbounded;
    }
    t.pivot(leave, enter);
  }
}

}  // namespace

LpResult lp_solve(const LpProblem& p, const Tolerances& tol) {
  const int n = static_cast<int>(p.objective.size());
  const int m = static_cast<int>(p.normals.rows());
  if (n <= 0) {
    throw InputError("lp_solve: empty objective");
  }
  if (p.normals.cols() != n && m > 0) {
    throw InputError("lp_solve: constraint matrix width does not match objective length");
  }
  if (p.offsets.size() != m) {
    throw InputError("lp_solve: offsets length does not match constraint count");
  }

  // Columns: x+ (n), x- (n), slack (m), artificial (k), with x = x+ - x-.
  std::vector<int> art_rows;
  for (int i = 0; i < m; ++i) {
    if (p.offsets(i) < 0.0) {
      art_rows.push_back(i);
    }
  }
  const int k = static_cast<int>(art_rows.size());
  const int cols = 2 * n + m + k;

  Tableau t;
  t.a.setZero(m, cols);
  t.rhs.resize(m);
  t.basis.assign(static_cast<size_t>(m), -1);
  int next_art = 0;
  for (int i = 0; i < m; ++i) {
    const double sgn = p.offsets(i) < 0.0 ? -1.0 : 1.0;
    t.a.block(i, 0, 1, n) = sgn * p.normals.row(i);
    t.a.block(i, n, 1, n) = -sgn * p.normals.row(i);
    t.a(i, 2 * n + i) = sgn;
    t.rhs(i) = sgn * p.offsets(i);
    if (sgn < 0.0) {
      t.a(i, 2 * n + m + next_art) = 1.0;
      t.basis[static_cast<size_t>(i)] = 2 * n + m + next_art;
      ++next_art;
    } else {
      t.basis[static_cast<size_t>(i)] = 2 * n + i;
    }
  }

  std::vector<bool> allowed(static_cast<size_t>(cols), true);

  // Phase 1: maximize -(sum of artificials).
  if (k > 0) {
    t.obj.setZero(cols);
    t.value = 0.0;
    for (int r = 0; r < m; ++r) {
      if (t.basis[static_cast<size_t>(r)] >= 2 * n + m) {
        t.obj += t.a.row(r);
        t.value += t.rhs(r);
      }
    }
    for (int j = 2 * n + m; j < cols; ++j) {
      t.obj(j) = 0.0;  // reduced cost of a basic artificial
    }
    t.value = -t.value;
    // obj currently holds sum of artificial rows; in maximize convention the
    // reduced costs of -(sum a) over nonbasic columns are exactly these sums.
    run_simplex(t, allowed, tol.lp);
    if (t.value < -tol.feas) {
      return LpResult{LpStatus::kInfeasible, 0.0, Eigen::VectorXd()};
    }
    // Pivot leftover artificials out of the (degenerate) basis.
    for (int r = 0; r < m; ++r) {
      if (t.basis[static_cast<size_t>(r)] < 2 * n + m) {
        continue;
      }
      int col = -1;
      for (int j = 0; j < 2 * n + m; ++j) {
        if (std::abs(t.a(r, j)) > 1e-9) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        t.pivot(r, col);
      }
      // else: the row is redundant; its artificial stays basic at zero and
      // is locked out below, so it can never become positive again.
    }
    for (int j = 2 * n + m; j < cols; ++j) {
      allowed[static_cast<size_t>(j)] = false;
    }
  }

  // Phase 2: original objective over x+ - x-.
  t.obj.setZero(cols);
  t.obj.segment(0, n) = p.objective.transpose();
  t.obj.segment(n, n) = -p.objective.transpose();
  t.value = 0.0;
  for (int r = 0; r < m; ++r) {
    const int b = t.basis[static_cast<size_t>(r)];
    const double cb = b < n ? p.objective(b) : (b < 2 * n ? -p.objective(b - n) : 0.0);
    if (cb != 0.0) {
      t.obj -= cb * t.a.row(r);
      t.value += cb * t.rhs(r);
    }
  }
  for (int r = 0; r < m; ++r) {
    t.obj(t.basis[static_cast<size_t>(r)]) = 0.0;
  }

  if (run_simplex(t, allowed, tol.lp) == RunStatus::kUnbounded) {
    return LpResult{LpStatus::kUnbounded, 0.0, Eigen::VectorXd()};
  }

  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  for (int r = 0; r < m; ++r) {
    const int b = t.basis[static_cast<size_t>(r)];
    if (b < n) {
      x(b) += t.rhs(r);
    } else if (b < 2 * n) {
      x(b - n) -= t.rhs(r);
    }
  }
  return LpResult{LpStatus::kOptimal, t.value, std::move(x)};
}

}  // namespace attackset
