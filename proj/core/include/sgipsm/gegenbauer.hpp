#pragma once

/// Gegenbauer polynomials under the standardization G_n(1) = 1, the flipped
/// Gegenbauer-Gauss-Radau (FGGR) nodes, their Christoffel numbers, and the
/// affine shift of a node set from [-1, 1] onto [0, b].

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace sgipsm {

/// Throws std::invalid_argument unless alpha > -1/2 and finite.
void require_valid_alpha(double alpha);

/// Gegenbauer parameter and truncation degree. Validated on construction.
class BasisConfig {
public:
  BasisConfig(double alpha, int n);

  [[nodiscard]] double alpha() const noexcept { return alpha_; }
  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] int size() const noexcept { return n_ + 1; }

private:
  double alpha_;
  int n_;
};

/// Closed interval carried by a node set: the reference [-1, 1] or [0, b].
struct Interval {
  double lower = -1.0;
  double upper = 1.0;

  static Interval standard() noexcept { return {-1.0, 1.0}; }
  static Interval shifted(double b);

  [[nodiscard]] bool is_standard() const noexcept { return lower == -1.0 && upper == 1.0; }
  [[nodiscard]] double length() const noexcept { return upper - lower; }
  [[nodiscard]] bool contains(double x) const noexcept { return x >= lower && x <= upper; }
};

/// FGGR (or shifted FGGR) abscissas with their Christoffel numbers and the
/// normalization factors lambda_j, j = 0..n. Abscissas are strictly descending,
/// so nodes[0] is the right endpoint.
struct NodeSet {
  double alpha = 0.0;
  int n = 0;
  Interval interval;
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
  Eigen::VectorXd lambdas;

  [[nodiscard]] int size() const noexcept { return n + 1; }
};

/// G_0(x), ..., G_m(x) by the three-term recurrence.
std::vector<double> eval_gegenbauer(double alpha, int max_degree, double x);

/// G'_0(x), ..., G'_m(x) by the differentiated recurrence.
std::vector<double> eval_gegenbauer_derivative(double alpha, int max_degree, double x);

/// Leading coefficient K_n of G_n, evaluated through log-gamma.
double leading_coefficient(double alpha, int n);

/// lambda_n = integral of G_n^2 against (1 - x^2)^(alpha - 1/2) over [-1, 1].
double normalization(double alpha, int n);

/// Zeros of q_n = G_{n+1} - G_n, descending, with nodes[0] == 1 exactly.
///
/// Newton iteration with implicit deflation against the roots already found,
/// started from the Chebyshev-Gauss-Radau points cos(2 pi k / (2n + 1)), then
/// polished on the undeflated q_n. Throws std::runtime_error when a root is not
/// reached within the iteration cap, two roots coincide, or q_n fails to change
/// sign between consecutive nodes.
Eigen::VectorXd fggr_nodes(const BasisConfig& cfg);

/// Christoffel numbers of the FGGR rule for the given (descending) nodes.
Eigen::VectorXd christoffel_weights(const BasisConfig& cfg, const Eigen::VectorXd& nodes);

/// Nodes, weights and lambdas on [-1, 1].
NodeSet make_nodeset(const BasisConfig& cfg);

/// Maps a reference node set onto [0, b]: x -> (b/2)(x + 1), and scales the
/// weights and lambdas by (b/2)^(2 alpha).
NodeSet shift_nodeset(const NodeSet& standard, double b);

/// G_{b,j}(x) = G_j(2x/b - 1) for j = 0..max_degree.
std::vector<double> eval_shifted_gegenbauer(double alpha, int max_degree, double b, double x);

}  // namespace sgipsm
