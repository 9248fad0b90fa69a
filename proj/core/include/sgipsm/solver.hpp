#pragma once

#include <Eigen/Dense>

#include "sgipsm/integration.hpp"
#include "sgipsm/newton.hpp"
#include "sgipsm/problem.hpp"

namespace sgipsm {

/// Integral reformulation of the problem with Phi = y'' at the shifted nodes.
///   H     = I + alpha2 diag(1/x) Q1b
///   xbar  = ((delta - gamma alpha1)/beta) 1 + alpha1 (x - b 1)
///   Theta = Q2b - 1 (row0(Q2b) + (gamma/beta) row0(Q1b))
/// so that y = xbar + Theta Phi at the nodes. xbar and Theta need beta != 0 and
/// are left empty otherwise.
struct CoreMatrices {
  Eigen::MatrixXd h;
  Eigen::VectorXd xbar;
  Eigen::MatrixXd theta;
};

CoreMatrices assemble_core(const ProblemSpec& spec, const IntegrationOperators& ops);

/// Nonlinear problem with beta != 0: damped Newton on
///   H Phi + f(x, xbar + Theta Phi) = -alpha1 alpha2 / x
/// from Phi = 0, retried once from the solution of the system linearized about
/// y = xbar if the first run fails to converge.
SolverResult solve_nonlinear_a1(const ProblemSpec& spec, const IntegrationOperators& ops,
                                const NewtonOptions& options = {});

/// Linear problem with beta != 0: (H + diag(p) Theta) Phi = g - alpha1 alpha2/x - p xbar.
SolverResult solve_linear_a1(const ProblemSpec& spec, const IntegrationOperators& ops);

/// Nonlinear problem with beta = 0. Unknowns Psi = [Phi; y0]; the last row
/// enforces y'(b) = delta/gamma.
SolverResult solve_nonlinear_a2(const ProblemSpec& spec, const IntegrationOperators& ops,
                                const NewtonOptions& options = {});

/// Linear problem with beta = 0:
///   [[H + diag(p) Q2b, p], [row0(Q1b), 0]] Psi = [g - alpha1 alpha2/x - alpha1 p x; delta/gamma - alpha1].
SolverResult solve_linear_a2(const ProblemSpec& spec, const IntegrationOperators& ops);

/// Dispatches on the kind of term and on beta.
SolverResult solve(const ProblemSpec& spec, const IntegrationOperators& ops, const NewtonOptions& options = {});

/// y(0) = (delta - gamma (alpha1 + row0(Q1b) Phi))/beta - alpha1 b - row0(Q2b) Phi.
double recover_y0_a1(const Eigen::VectorXd& phi, const ProblemSpec& spec, const IntegrationOperators& ops);

/// Residual of the differential equation at the nodes,
///   R = y'' + (alpha2/x) y' + f(x, y),
/// with y'' = Phi and y, y' the recovered node values.
Eigen::VectorXd compute_residual(const SolverResult& result, const ProblemSpec& spec, const IntegrationOperators& ops);

/// Evaluates a solved approximation anywhere in [0, b]: the recovered y(0) at
/// x = 0, the node value when x is a node, the shifted Lagrange interpolant
/// through the node values otherwise.
class SolutionEvaluator {
public:
  SolutionEvaluator(const SolverResult& result, const IntegrationOperators& ops);

  [[nodiscard]] double operator()(double x) const;

private:
  Eigen::VectorXd nodes_;
  Eigen::VectorXd values_;
  double y0_;
  Interpolator interpolant_;
};

double evaluate_solution(const SolverResult& result, const IntegrationOperators& ops, double x);

}  // namespace sgipsm
