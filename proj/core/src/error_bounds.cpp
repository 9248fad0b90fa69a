#include "sgipsm/error_bounds.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "sgipsm/integration.hpp"

namespace sgipsm {

namespace {

const double kSqrtPi = std::sqrt(std::numbers::pi);

double node_abscissa(const BoundInputs& in, const NodeSet& shifted, int node_index) {
  in.validate();
  if (shifted.n != in.n || shifted.alpha != in.alpha || shifted.interval.lower != 0.0 ||
      shifted.interval.upper != in.b) {
    throw std::invalid_argument("node set does not match the bound inputs (n, alpha, b)");
  }
  if (node_index < 0 || node_index > shifted.n) {
    std::ostringstream os;
    os << "node index " << node_index << " out of range [0, " << shifted.n << "]";
    throw std::out_of_range(os.str());
  }
  return shifted.nodes[node_index];
}

}  // namespace

void BoundInputs::validate() const {
  require_valid_alpha(alpha);
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (!(b > 0.0) || !std::isfinite(b)) throw std::invalid_argument("b must be positive and finite");
  for (double v : {A, A0, A1, lambda_lip, M}) {
    if (!(v >= 0.0)) throw std::invalid_argument("derivative sups and Lipschitz constants must be nonnegative");
  }
}

double q_sup_norm(double alpha, int n) {
  require_valid_alpha(alpha);
  if (n < 0) throw std::invalid_argument("degree must be nonnegative");
  if (alpha >= 0.0) return 2.0;
  const double head = std::exp(std::lgamma(alpha + 0.5)) / kSqrtPi;
  if (n % 2 == 0) {
    const double m = (n + 1) / 2.0;
    return head * std::exp(std::lgamma(m) - std::lgamma(alpha + m)) *
           (1.0 + std::sqrt((n + 1.0) / (2.0 * alpha + n + 1.0)));
  }
  const double h = n / 2.0;
  return head * (std::sqrt(n * (2.0 * alpha + n)) + n) * std::exp(std::lgamma(h) - std::lgamma(h + alpha + 1.0)) /
         2.0;
}

double gegenbauer_sup_norm(double alpha, int n) {
  require_valid_alpha(alpha);
  if (n < 0) throw std::invalid_argument("degree must be nonnegative");
  if (alpha >= 0.0 || n == 0) return 1.0;
  const double h = n / 2.0;
  if (n % 2 == 0) {
    // binom(a + n/2 - 1, n/2) n! G(2a) / G(n + 2a); G(a) and G(2a) share their
    // (negative) sign, so the ratio is taken in absolute value.
    return std::exp(std::lgamma(alpha + h) - std::lgamma(h + 1.0) - std::lgamma(alpha) + std::lgamma(n + 1.0) +
                    std::lgamma(2.0 * alpha) - std::lgamma(n + 2.0 * alpha));
  }
  return n * std::exp(std::lgamma(alpha + 0.5) + std::lgamma(h) - std::lgamma(h + alpha)) /
         (kSqrtPi * std::sqrt(n * (2.0 * alpha + n)));
}

double bound_prefactor(double alpha, int n, double b) {
  require_valid_alpha(alpha);
  const double log_p = -(2.0 * n + 1.0) * std::numbers::ln2 + (n + 1.0) * std::log(b) +
                       std::lgamma(n + 2.0 * alpha + 1.0) + std::lgamma(alpha + 1.0) - std::lgamma(n + 2.0) -
                       std::lgamma(n + alpha + 1.0) - std::lgamma(2.0 * alpha + 1.0);
  return std::exp(log_p) * q_sup_norm(alpha, n);
}

double integrate_shifted_fggr_polynomial(double alpha, int n, double b, double x) {
  if (!(b > 0.0)) throw std::invalid_argument("b must be positive");
  return 0.5 * b * integrate_fggr_polynomial(alpha, n, 2.0 * x / b - 1.0);
}

double bound_q1_error(const BoundInputs& in, const NodeSet& shifted, int node_index) {
  const double x = node_abscissa(in, shifted, node_index);
  return bound_prefactor(in.alpha, in.n, in.b) * in.A * x;
}

double bound_q2_error(const BoundInputs& in, const NodeSet& shifted, int node_index) {
  const double x = node_abscissa(in, shifted, node_index);
  return bound_prefactor(in.alpha, in.n, in.b) * (in.A0 * (in.n + 1.0) + in.b * in.A1) * x;
}

double bound_solution_error_a1(const BoundInputs& in, const NodeSet& shifted, int node_index, double beta,
                               double gamma) {
  if (beta == 0.0) throw std::invalid_argument("the solution error bound needs beta != 0");
  const double x = node_abscissa(in, shifted, node_index);
  const double ratio = std::abs(gamma / beta);
  return bound_prefactor(in.alpha, in.n, in.b) *
         (in.A1 * in.b * (x + ratio + in.b) + in.A0 * (in.n + 1.0) * (x + in.b));
}

double bound_derivative_error_a2(const BoundInputs& in, const NodeSet& shifted, int node_index) {
  const double x = node_abscissa(in, shifted, node_index);
  if (node_index == 0) return 0.0;
  return bound_prefactor(in.alpha, in.n, in.b) * in.A * x;
}

double bound_residual(const BoundInputs& in, const NodeSet& shifted, int node_index, ResidualMode mode, double beta,
                      double gamma) {
  if (beta == 0.0) throw std::invalid_argument("the residual bound needs beta != 0");
  const double x = node_abscissa(in, shifted, node_index);
  const double ratio = std::abs(gamma / beta);
  const double l = mode == ResidualMode::NonlinearLipschitz ? in.lambda_lip : in.M;
  return bound_prefactor(in.alpha, in.n, in.b) *
         (in.A1 * (in.b * l * (x + ratio + in.b) + std::abs(in.alpha2)) + in.A0 * l * (in.n + 1.0) * (x + in.b));
}

}  // namespace sgipsm
