#pragma once

#include <Eigen/Dense>

namespace sgipsm {

/// Maximum absolute row sum.
double inf_norm(const Eigen::MatrixXd& a);

/// ||A||_inf * ||A^-1||_inf with A^-1 formed explicitly from an LU factorization.
double condition_number_inf(const Eigen::MatrixXd& a);

struct DenseSolution {
  Eigen::VectorXd x;
  double kappa_inf = 0.0;  // only filled when requested
};

/// Solves A x = rhs by LU with partial pivoting. Throws SolveError
/// (SingularMatrix) when a pivot vanishes or the solution is not finite.
DenseSolution solve_dense(const Eigen::MatrixXd& a, const Eigen::VectorXd& rhs, bool with_condition = false);

}  // namespace sgipsm
