#ifndef ATTACKSET_LP_HPP
#define ATTACKSET_LP_HPP

#include <Eigen/Dense>

#include "attackset/tolerances.hpp"

namespace attackset {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

/// maximize objective . x  subject to  normals * x <= offsets,  x free.
struct LpProblem {
  Eigen::VectorXd objective;
  Eigen::MatrixXd normals;
  Eigen::VectorXd offsets;
};

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  double value = 0.0;      ///< valid when status == kOptimal
  Eigen::VectorXd point;   ///< valid when status == kOptimal
};

/// Dense two-phase simplex. Free variables are split into positive parts;
/// pivoting switches from Dantzig to Bland's rule after an iteration
/// threshold, and an absolute cap raises NumericalError instead of returning
/// a wrong status.
LpResult lp_solve(const LpProblem& p, const Tolerances& tol = default_tolerances());

}  // namespace attackset

#endif  // ATTACKSET_LP_HPP
