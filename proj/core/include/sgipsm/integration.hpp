#pragma once

#include <iosfwd>

#include <Eigen/Dense>

#include "sgipsm/gegenbauer.hpp"

namespace sgipsm {

/// Integral of G_j over [-1, x], from the closed-form antiderivative
///   int G_j = [ (j + 2a)/(j + 1) G_{j+1} - j/(j + 2a - 1) G_{j-1} ] / (2 (j + a)),  j >= 2,
/// with the j = 0 and j = 1 cases written out directly.
double integrate_basis(double alpha, int j, double x);

/// Integral of q_n = G_{n+1} - G_n over [-1, x].
double integrate_fggr_polynomial(double alpha, int n, double x);

/// First-order integration matrix on the FGGR nodes: row i applied to node
/// values of f approximates the integral of f over [-1, x_i].
Eigen::MatrixXd build_q1(const NodeSet& standard);

/// Second-order integration matrix, Q2(i, k) = (x_i - x_k) Q1(i, k).
Eigen::MatrixXd build_q2(const Eigen::MatrixXd& q1, const NodeSet& nodeset);

/// Integration operators on [-1, 1] together with their [0, b] counterparts.
struct IntegrationOperators {
  Eigen::MatrixXd q1;
  Eigen::MatrixXd q2;
  Eigen::MatrixXd q1_shifted;
  Eigen::MatrixXd q2_shifted;
  NodeSet nodeset;          // on [-1, 1]
  NodeSet shifted_nodeset;  // on [0, b]
  double b = 2.0;

  [[nodiscard]] int size() const noexcept { return nodeset.size(); }
};

IntegrationOperators shift_operators(const Eigen::MatrixXd& q1, const NodeSet& standard, double b);

/// Nodes, Q1, Q2 and their shifted versions for one (alpha, n, b).
IntegrationOperators build_operators(const BasisConfig& cfg, double b);

/// Shifted Lagrange interpolant through `values` at the shifted FGGR nodes,
/// evaluated at x in [0, b]. Throws std::invalid_argument outside [0, b].
double lagrange_interpolate(const NodeSet& shifted, const Eigen::VectorXd& values, double x);

/// Same interpolant with the node-side sums precomputed, for evaluating one
/// set of values at many points.
class Interpolator {
public:
  Interpolator(const NodeSet& shifted, const Eigen::VectorXd& values);

  [[nodiscard]] double operator()(double x) const;

private:
  double alpha_;
  int n_;
  Interval interval_;
  Eigen::VectorXd coefficients_;
};

/// Row-major CSV, 17 significant digits, LF line endings.
void write_matrix_csv(std::ostream& os, const Eigen::MatrixXd& m);

}  // namespace sgipsm
