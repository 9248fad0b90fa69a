#pragma once

#include "sgipsm/gegenbauer.hpp"

namespace sgipsm {

/// Derivative sup-norms and problem constants that feed the a priori bounds.
/// Which derivative A, A0 and A1 stand for depends on the bound:
///   Q1 quadrature of f:       A  = |f^(n+1)|
///   Q2 quadrature of f:       A0 = |f^(n)|,    A1 = |f^(n+1)|
///   solution and residuals:   A0 = |y^(n+2)|,  A1 = |y^(n+3)|
///   derivative (beta = 0):    A  = |y^(n+3)|
/// lambda_lip is the Lipschitz constant of f in y, M the sup of |p|.
struct BoundInputs {
  double A = 0.0;
  double A0 = 0.0;
  double A1 = 0.0;
  double lambda_lip = 0.0;
  double M = 0.0;
  double alpha2 = 0.0;
  int n = 0;
  double alpha = 0.0;
  double b = 1.0;

  /// Throws std::invalid_argument on negative sups, n < 0, b <= 0 or alpha <= -1/2.
  void validate() const;
};

enum class ResidualMode { NonlinearLipschitz, LinearSup };

/// Sup of |q_n| = |G_{n+1} - G_n| on [-1, 1]: 2 for alpha >= 0, a Gamma-ratio
/// expression split on the parity of n for -1/2 < alpha < 0 (an upper bound there).
double q_sup_norm(double alpha, int n);

/// Sup of |G_n| on [-1, 1]: 1 for alpha >= 0, Gamma-ratio expressions split on
/// parity for -1/2 < alpha < 0 (exact for even n, an upper bound for odd n).
double gegenbauer_sup_norm(double alpha, int n);

/// Common factor 2^(-2n-1) b^(n+1) G(n+2a+1) G(a+1) / ((n+1)! G(n+a+1) G(2a+1)) |q_n|.
double bound_prefactor(double alpha, int n, double b);

/// Integral of the shifted q_n over [0, x], x in [0, b].
double integrate_shifted_fggr_polynomial(double alpha, int n, double b, double x);

/// Error of the shifted first-order quadrature at node i: prefactor * A * x_i.
double bound_q1_error(const BoundInputs& in, const NodeSet& shifted, int node_index);

/// Error of the shifted second-order quadrature at node i:
/// prefactor * (A0 (n + 1) + b A1) * x_i.
double bound_q2_error(const BoundInputs& in, const NodeSet& shifted, int node_index);

/// Solution error at node i when beta != 0:
/// prefactor * (A1 b (x_i + |gamma/beta| + b) + A0 (n + 1) (x_i + b)).
double bound_solution_error_a1(const BoundInputs& in, const NodeSet& shifted, int node_index, double beta,
                               double gamma);

/// Derivative error at node i when beta = 0: prefactor * A * x_i, and 0 at the
/// constrained node 0.
double bound_derivative_error_a2(const BoundInputs& in, const NodeSet& shifted, int node_index);

/// Residual at node i when beta != 0, with L = lambda_lip or M:
/// prefactor * (A1 (b L (x_i + |gamma/beta| + b) + |alpha2|) + A0 L (n + 1) (x_i + b)).
double bound_residual(const BoundInputs& in, const NodeSet& shifted, int node_index, ResidualMode mode, double beta,
                      double gamma);

}  // namespace sgipsm
