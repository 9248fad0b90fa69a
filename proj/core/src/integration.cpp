#include "sgipsm/integration.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "sgipsm/csv.hpp"

namespace sgipsm {

namespace {

// Antiderivative of G_j (any constant), valid for j >= 2 and also at alpha = 0,
// where it reduces to T_{j+1}/(2(j+1)) - T_{j-1}/(2(j-1)).
double antiderivative(double alpha, int j, const std::vector<double>& g) {
  const double up = (j + 2.0 * alpha) / (j + 1.0) * g[static_cast<std::size_t>(j) + 1];
  const double down = j / (j + 2.0 * alpha - 1.0) * g[static_cast<std::size_t>(j) - 1];
  return (up - down) / (2.0 * (j + alpha));
}

// Integrals of G_0..G_n over [-1, x], sharing one recurrence sweep at x.
void integrate_basis_all(double alpha, int n, double x, const std::vector<double>& g_at_minus_one,
                         double* out) {
  const std::vector<double> g = eval_gegenbauer(alpha, n + 1, x);
  out[0] = x + 1.0;
  if (n >= 1) out[1] = 0.5 * (x * x - 1.0);
  for (int j = 2; j <= n; ++j) out[j] = antiderivative(alpha, j, g) - antiderivative(alpha, j, g_at_minus_one);
}

}  // namespace

double integrate_basis(double alpha, int j, double x) {
  require_valid_alpha(alpha);
  if (j < 0) throw std::invalid_argument("basis degree must be nonnegative");
  if (j == 0) return x + 1.0;
  if (j == 1) return 0.5 * (x * x - 1.0);
  const std::vector<double> g = eval_gegenbauer(alpha, j + 1, x);
  const std::vector<double> g_left = eval_gegenbauer(alpha, j + 1, -1.0);
  return antiderivative(alpha, j, g) - antiderivative(alpha, j, g_left);
}

double integrate_fggr_polynomial(double alpha, int n, double x) {
  return integrate_basis(alpha, n + 1, x) - integrate_basis(alpha, n, x);
}

Eigen::MatrixXd build_q1(const NodeSet& standard) {
  if (!standard.interval.is_standard()) throw std::invalid_argument("build_q1 expects a node set on [-1, 1]");
  const int n = standard.n;
  const int size = n + 1;
  const double alpha = standard.alpha;

  // basis(k, j) = w_k G_j(x_k) / lambda_j
  Eigen::MatrixXd basis(size, size);
  for (int k = 0; k < size; ++k) {
    const std::vector<double> g = eval_gegenbauer(alpha, n, standard.nodes[k]);
    for (int j = 0; j < size; ++j) basis(k, j) = standard.weights[k] * g[static_cast<std::size_t>(j)] / standard.lambdas[j];
  }

  // integrals(i, j) = int_{-1}^{x_i} G_j
  const std::vector<double> g_left = eval_gegenbauer(alpha, n + 1, -1.0);
  Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> integrals(size, size);
  for (int i = 0; i < size; ++i) integrate_basis_all(alpha, n, standard.nodes[i], g_left, integrals.row(i).data());

  return integrals * basis.transpose();
}

Eigen::MatrixXd build_q2(const Eigen::MatrixXd& q1, const NodeSet& nodeset) {
  const Eigen::Index size = nodeset.nodes.size();
  if (q1.rows() != size || q1.cols() != size) {
    std::ostringstream os;
    os << "Q1 is " << q1.rows() << "x" << q1.cols() << " but the node set has " << size << " nodes";
    throw std::invalid_argument(os.str());
  }
  Eigen::MatrixXd q2(size, size);
  for (Eigen::Index i = 0; i < size; ++i) {
    for (Eigen::Index k = 0; k < size; ++k) q2(i, k) = (nodeset.nodes[i] - nodeset.nodes[k]) * q1(i, k);
  }
  return q2;
}

IntegrationOperators shift_operators(const Eigen::MatrixXd& q1, const NodeSet& standard, double b) {
  IntegrationOperators ops;
  ops.shifted_nodeset = shift_nodeset(standard, b);  // validates b
  ops.nodeset = standard;
  ops.b = b;
  ops.q1 = q1;
  ops.q2 = build_q2(q1, standard);
  ops.q1_shifted = (b / 2.0) * q1;
  ops.q2_shifted = build_q2(ops.q1_shifted, ops.shifted_nodeset);
  return ops;
}

IntegrationOperators build_operators(const BasisConfig& cfg, double b) {
  const NodeSet standard = make_nodeset(cfg);
  return shift_operators(build_q1(standard), standard, b);
}

double lagrange_interpolate(const NodeSet& shifted, const Eigen::VectorXd& values, double x) {
  if (values.size() != shifted.size()) throw std::invalid_argument("value count does not match the node count");
  if (!shifted.interval.contains(x)) {
    std::ostringstream os;
    os << "interpolation point " << x << " lies outside [" << shifted.interval.lower << ", "
       << shifted.interval.upper << "]";
    throw std::invalid_argument(os.str());
  }
  const double lo = shifted.interval.lower;
  const double len = shifted.interval.length();
  auto to_reference = [&](double t) { return 2.0 * (t - lo) / len - 1.0; };

  const std::vector<double> gx = eval_gegenbauer(shifted.alpha, shifted.n, to_reference(x));
  double total = 0.0;
  for (int k = 0; k <= shifted.n; ++k) {
    const std::vector<double> gk = eval_gegenbauer(shifted.alpha, shifted.n, to_reference(shifted.nodes[k]));
    double cardinal = 0.0;
    for (int j = 0; j <= shifted.n; ++j) {
      cardinal += gk[static_cast<std::size_t>(j)] * gx[static_cast<std::size_t>(j)] / shifted.lambdas[j];
    }
    total += values[k] * shifted.weights[k] * cardinal;
  }
  return total;
}

Interpolator::Interpolator(const NodeSet& shifted, const Eigen::VectorXd& values)
    : alpha_(shifted.alpha), n_(shifted.n), interval_(shifted.interval), coefficients_(Eigen::VectorXd::Zero(shifted.size())) {
  if (values.size() != shifted.size()) throw std::invalid_argument("value count does not match the node count");
  for (int k = 0; k <= n_; ++k) {
    const double s = 2.0 * (shifted.nodes[k] - interval_.lower) / interval_.length() - 1.0;
    const std::vector<double> gk = eval_gegenbauer(alpha_, n_, s);
    for (int j = 0; j <= n_; ++j) {
      coefficients_[j] += values[k] * shifted.weights[k] * gk[static_cast<std::size_t>(j)];
    }
  }
  for (int j = 0; j <= n_; ++j) coefficients_[j] /= shifted.lambdas[j];
}

double Interpolator::operator()(double x) const {
  if (!interval_.contains(x)) {
    std::ostringstream os;
    os << "interpolation point " << x << " lies outside [" << interval_.lower << ", " << interval_.upper << "]";
    throw std::invalid_argument(os.str());
  }
  const double s = 2.0 * (x - interval_.lower) / interval_.length() - 1.0;
  const std::vector<double> g = eval_gegenbauer(alpha_, n_, s);
  double total = 0.0;
  for (int j = 0; j <= n_; ++j) total += coefficients_[j] * g[static_cast<std::size_t>(j)];
  return total;
}

void write_matrix_csv(std::ostream& os, const Eigen::MatrixXd& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      if (k) os << ',';
      os << format_g17(m(i, k));
    }
    os << '\n';
  }
}

}  // namespace sgipsm
