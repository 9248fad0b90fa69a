#include "sgipsm/gegenbauer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace sgipsm {

namespace {

constexpr double kRootTolerance = 1e-14;
constexpr int kRootIterationCap = 100;

struct QValue {
  double q;
  double dq;
};

// q_n(x) = G_{n+1}(x) - G_n(x) and its derivative in a single sweep.
QValue eval_q(double alpha, int n, double x) {
  double g_prev = 1.0, g = x;
  double d_prev = 0.0, d = 1.0;
  for (int k = 1; k <= n; ++k) {
    const double denom = k + 2.0 * alpha;
    const double g_next = (2.0 * (k + alpha) * x * g - k * g_prev) / denom;
    const double d_next = (2.0 * (k + alpha) * (g + x * d) - k * d_prev) / denom;
    g_prev = g;
    g = g_next;
    d_prev = d;
    d = d_next;
  }
  // After the loop g = G_{n+1}, g_prev = G_n.
  return {g - g_prev, d - d_prev};
}

double log_two() { return std::numbers::ln2; }

}  // namespace

void require_valid_alpha(double alpha) {
  if (!std::isfinite(alpha) || alpha <= -0.5) {
    std::ostringstream os;
    os << "Gegenbauer parameter must satisfy alpha > -1/2, got " << alpha;
    throw std::invalid_argument(os.str());
  }
}

BasisConfig::BasisConfig(double alpha, int n) : alpha_(alpha), n_(n) {
  require_valid_alpha(alpha);
  if (n < 0) throw std::invalid_argument("truncation degree n must be nonnegative");
}

Interval Interval::shifted(double b) {
  if (!(b > 0.0) || !std::isfinite(b)) {
    std::ostringstream os;
    os << "interval length b must be positive and finite, got " << b;
    throw std::invalid_argument(os.str());
  }
  return {0.0, b};
}

std::vector<double> eval_gegenbauer(double alpha, int max_degree, double x) {
  require_valid_alpha(alpha);
  if (max_degree < 0) throw std::invalid_argument("max_degree must be nonnegative");
  std::vector<double> g(static_cast<std::size_t>(max_degree) + 1);
  g[0] = 1.0;
  if (max_degree >= 1) g[1] = x;
  for (int k = 1; k < max_degree; ++k) {
    g[k + 1] = (2.0 * (k + alpha) * x * g[k] - k * g[k - 1]) / (k + 2.0 * alpha);
  }
  return g;
}

std::vector<double> eval_gegenbauer_derivative(double alpha, int max_degree, double x) {
  const std::vector<double> g = eval_gegenbauer(alpha, max_degree, x);
  std::vector<double> d(g.size(), 0.0);
  if (max_degree >= 1) d[1] = 1.0;
  for (int k = 1; k < max_degree; ++k) {
    d[k + 1] = (2.0 * (k + alpha) * (g[k] + x * d[k]) - k * d[k - 1]) / (k + 2.0 * alpha);
  }
  return d;
}

std::vector<double> eval_shifted_gegenbauer(double alpha, int max_degree, double b, double x) {
  return eval_gegenbauer(alpha, max_degree, 2.0 * x / b - 1.0);
}

double leading_coefficient(double alpha, int n) {
  require_valid_alpha(alpha);
  if (n < 0) throw std::invalid_argument("degree must be nonnegative");
  if (n == 0) return 1.0;
  // Every gamma argument is positive once n >= 1.
  const double log_k = (n - 1) * log_two() + std::lgamma(n + alpha) + std::lgamma(2.0 * alpha + 1.0) -
                       std::lgamma(n + 2.0 * alpha) - std::lgamma(alpha + 1.0);
  return std::exp(log_k);
}

double normalization(double alpha, int n) {
  require_valid_alpha(alpha);
  if (n < 0) throw std::invalid_argument("degree must be nonnegative");
  if (n == 0) {
    // alpha * Gamma(2 alpha) = Gamma(2 alpha + 1) / 2 removes the 0 * inf at alpha = 0
    // and the sign of Gamma(2 alpha) for alpha < 0.
    if (alpha == 0.0) return std::numbers::pi;
    return std::exp(2.0 * alpha * log_two() + 2.0 * std::lgamma(alpha + 0.5) - std::lgamma(2.0 * alpha + 1.0));
  }
  const double log_lambda = (2.0 * alpha - 1.0) * log_two() + std::lgamma(n + 1.0) +
                            2.0 * std::lgamma(alpha + 0.5) - std::lgamma(n + 2.0 * alpha);
  return std::exp(log_lambda) / (n + alpha);
}

namespace {

// Deflated Newton from the Chebyshev-Gauss-Radau points. Returns false when a
// root misses the tolerance within the iteration cap.
bool deflated_newton_roots(double alpha, int n, std::vector<double>& roots) {
  const double pi = std::numbers::pi;
  for (int k = 1; k <= n; ++k) {
    double x = std::cos(2.0 * pi * k / (2.0 * n + 1.0));
    bool converged = false;
    for (int it = 0; it < kRootIterationCap; ++it) {
      const auto [q, dq] = eval_q(alpha, n, x);
      double pole_sum = 0.0;
      bool on_root = false;
      for (double r : roots) {
        if (x == r) {
          on_root = true;
          break;
        }
        pole_sum += 1.0 / (x - r);
      }
      if (on_root) {
        x += 1e-7;
        continue;
      }
      const double step = q / (dq - q * pole_sum);
      if (!std::isfinite(step)) break;
      x -= step;
      if (std::abs(step) <= kRootTolerance) {
        converged = true;
        break;
      }
    }
    if (!converged) return false;
    // One polishing step on the undeflated polynomial.
    const auto [q, dq] = eval_q(alpha, n, x);
    if (dq != 0.0 && std::abs(q / dq) <= 1e-10) x -= q / dq;
    roots.push_back(x);
  }
  return true;
}

// Sign changes of q_n on a fine grid uniform in theta = arccos(x), each refined
// by Newton safeguarded with bisection. Returns false unless exactly n interior
// brackets are found.
bool bracketed_roots(double alpha, int n, std::vector<double>& roots) {
  const double pi = std::numbers::pi;
  const int samples = 40 * (n + 1);
  // Start just inside x = 1, which is itself a root.
  double left = std::cos(0.5 * pi / samples);
  double q_left = eval_q(alpha, n, left).q;
  for (int s = 1; s <= samples; ++s) {
    const double right = s == samples ? -1.0 : std::cos((s + 0.5) * pi / samples);
    const double q_right = eval_q(alpha, n, right).q;
    if (q_left != 0.0 && std::signbit(q_left) != std::signbit(q_right)) {
      double hi = left, lo = right;  // q(hi) has the sign of q_left
      double x = 0.5 * (lo + hi);
      for (int it = 0; it < 4 * kRootIterationCap; ++it) {
        const auto [q, dq] = eval_q(alpha, n, x);
        if (q == 0.0) break;
        if (std::signbit(q) == std::signbit(q_left)) {
          hi = x;
        } else {
          lo = x;
        }
        double next = x - q / dq;
        if (!(next > std::min(lo, hi) && next < std::max(lo, hi))) next = 0.5 * (lo + hi);
        const bool done = std::abs(next - x) <= kRootTolerance;
        x = next;
        if (done) break;
      }
      if (right == -1.0 && x <= -1.0) return false;
      roots.push_back(x);
    }
    left = right;
    q_left = q_right;
  }
  return static_cast<int>(roots.size()) == n + 1;
}

}  // namespace

Eigen::VectorXd fggr_nodes(const BasisConfig& cfg) {
  const int n = cfg.n();
  const double alpha = cfg.alpha();
  std::vector<double> roots;
  roots.reserve(static_cast<std::size_t>(n) + 1);
  roots.push_back(1.0);

  if (!deflated_newton_roots(alpha, n, roots)) {
    roots.resize(1);
    if (!bracketed_roots(alpha, n, roots)) {
      std::ostringstream os;
      os << "FGGR roots for alpha=" << alpha << ", n=" << n << " did not converge within " << kRootIterationCap
         << " Newton iterations and could not be bracketed";
      throw std::runtime_error(os.str());
    }
  }

  std::sort(roots.begin() + 1, roots.end(), std::greater<>());
  for (std::size_t i = 1; i < roots.size(); ++i) {
    if (!(roots[i] < roots[i - 1]) || roots[i] <= -1.0) {
      std::ostringstream os;
      os << "FGGR root deflation failed for alpha=" << alpha << ", n=" << n << ": roots " << i - 1 << " and "
         << i << " coincide or leave (-1, 1]";
      throw std::runtime_error(os.str());
    }
  }

  // Sign alternation of q_n at the midpoints (and at -1) brackets every root.
  if (n >= 1) {
    auto sign_at = [&](double x) { return std::signbit(eval_q(alpha, n, x).q); };
    bool previous = sign_at(0.5 * (roots[0] + roots[1]));
    for (int k = 1; k <= n; ++k) {
      const double probe = (k < n) ? 0.5 * (roots[k] + roots[k + 1]) : -1.0;
      const bool current = sign_at(probe);
      if (current == previous) {
        std::ostringstream os;
        os << "FGGR root " << k << " for alpha=" << alpha << ", n=" << n << " is not bracketed by a sign change";
        throw std::runtime_error(os.str());
      }
      previous = current;
    }
  }

  return Eigen::Map<const Eigen::VectorXd>(roots.data(), static_cast<Eigen::Index>(roots.size()));
}

Eigen::VectorXd christoffel_weights(const BasisConfig& cfg, const Eigen::VectorXd& nodes) {
  const int n = cfg.n();
  const double alpha = cfg.alpha();
  if (nodes.size() != n + 1) {
    std::ostringstream os;
    os << "expected " << n + 1 << " FGGR nodes, got " << nodes.size();
    throw std::invalid_argument(os.str());
  }
  const double log_c = (2.0 * alpha - 1.0) * log_two() + 2.0 * std::lgamma(alpha + 0.5) + std::lgamma(n + 1.0) -
                       std::lgamma(n + 2.0 * alpha + 1.0);
  const double c = std::exp(log_c) / (n + alpha + 0.5);

  Eigen::VectorXd w(n + 1);
  for (int j = 0; j <= n; ++j) {
    const double gn = eval_gegenbauer(alpha, n, nodes[j])[static_cast<std::size_t>(n)];
    w[j] = c * (1.0 + nodes[j]) / (gn * gn);
  }
  w[0] *= alpha + 0.5;
  return w;
}

NodeSet make_nodeset(const BasisConfig& cfg) {
  NodeSet set;
  set.alpha = cfg.alpha();
  set.n = cfg.n();
  set.interval = Interval::standard();
  set.nodes = fggr_nodes(cfg);
  set.weights = christoffel_weights(cfg, set.nodes);
  set.lambdas.resize(cfg.size());
  for (int j = 0; j <= cfg.n(); ++j) set.lambdas[j] = normalization(cfg.alpha(), j);
  return set;
}

NodeSet shift_nodeset(const NodeSet& standard, double b) {
  if (!standard.interval.is_standard()) throw std::invalid_argument("shift_nodeset expects a node set on [-1, 1]");
  NodeSet shifted;
  shifted.alpha = standard.alpha;
  shifted.n = standard.n;
  shifted.interval = Interval::shifted(b);
  const double half = b / 2.0;
  const double scale = std::pow(half, 2.0 * standard.alpha);
  shifted.nodes = half * (standard.nodes.array() + 1.0);
  shifted.weights = scale * standard.weights;
  shifted.lambdas = scale * standard.lambdas;
  return shifted;
}

}  // namespace sgipsm
