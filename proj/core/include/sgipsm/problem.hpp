#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace sgipsm {

using ScalarFn = std::function<double(double)>;
using BivariateFn = std::function<double(double, double)>;

/// y'' + (alpha2/x) y' + f(x, y) = 0. df_dy may be left empty, in which case
/// the solver differentiates f numerically.
struct NonlinearTerm {
  BivariateFn f;
  BivariateFn df_dy;
};

/// y'' + (alpha2/x) y' + p(x) y = g(x), i.e. f(x, y) = p(x) y - g(x).
struct LinearTerm {
  ScalarFn p;
  ScalarFn g;
};

enum class Assumption { NonzeroBeta = 1, ZeroBeta = 2 };

/// Lane-Emden problem on [0, b]:
///   y'' + (alpha2/x) y' + f(x, y) = 0,  y'(0) = alpha1,  beta y(b) + gamma y'(b) = delta.
struct ProblemSpec {
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double beta = 1.0;
  double gamma = 0.0;
  double delta = 0.0;
  double b = 1.0;
  std::variant<NonlinearTerm, LinearTerm> term;

  /// Throws std::invalid_argument for b <= 0, beta = gamma = 0, non-finite data
  /// or missing functions.
  void validate() const;

  [[nodiscard]] Assumption assumption() const noexcept {
    return beta != 0.0 ? Assumption::NonzeroBeta : Assumption::ZeroBeta;
  }
  [[nodiscard]] bool is_linear() const noexcept { return std::holds_alternative<LinearTerm>(term); }

  /// f(x, y) for either kind of term.
  [[nodiscard]] double source(double x, double y) const;
  /// Partial derivative of f in y: p(x) for linear terms, the supplied df_dy or a
  /// central difference with step 1e-7 max(1, |y|) otherwise.
  [[nodiscard]] double source_dy(double x, double y) const;
};

struct SolverResult {
  Assumption assumption = Assumption::NonzeroBeta;
  Eigen::VectorXd nodes;           // shifted nodes, descending, nodes[0] = b
  Eigen::VectorXd phi;             // y'' at the nodes
  Eigen::VectorXd y_nodes;
  Eigen::VectorXd yprime_nodes;
  Eigen::VectorXd residual_nodes;
  double y0 = 0.0;
  std::optional<double> kappa_inf;  // linear problems
  std::optional<int> newton_iters;  // nonlinear problems
  std::vector<double> step_norms;   // Newton corrections, nonlinear problems
  bool converged = false;
};

}  // namespace sgipsm
