#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace sgipsm {

struct NewtonOptions {
  double step_tolerance = 1e-13;      // max-norm of the accepted correction, relative to max(1, |x|)
  double residual_tolerance = 1e-13;  // max-norm of the residual
  int max_iterations = 200;
  int max_backtracks = 30;            // step halvings per iteration
  double armijo = 1e-4;
};

struct NewtonReport {
  Eigen::VectorXd x;
  int iterations = 0;
  double residual_norm = 0.0;
  std::vector<double> step_norms;  // max-norm of every accepted correction, in order
  bool converged = false;
};

using ResidualFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;
using JacobianFn = std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>;

/// Damped Newton iteration for F(x) = 0 with Armijo backtracking on 0.5 |F|_2^2.
///
/// Stops when the accepted step or the residual drops below tolerance. A line
/// search that cannot reduce the merit function is accepted as convergence only
/// when the full Newton step is already below the step tolerance (the rounding
/// floor); otherwise SolveError(NonConvergence) is thrown, as it is when the
/// iteration cap is hit. A singular Jacobian raises SolveError(SingularMatrix).
NewtonReport newton_solve(const ResidualFn& residual, const JacobianFn& jacobian, Eigen::VectorXd x0,
                          const NewtonOptions& options = {});

}  // namespace sgipsm
