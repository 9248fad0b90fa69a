#include <doctest.h>

#include <cmath>

#include "sgipsm/errors.hpp"
#include "sgipsm/linalg.hpp"
#include "sgipsm/newton.hpp"

using namespace sgipsm;

TEST_CASE("quadratic convergence on a smooth system") {
  // x^2 + y^2 = 4, x y = 1.
  const ResidualFn f = [](const Eigen::VectorXd& v) {
    Eigen::VectorXd r(2);
    r << v(0) * v(0) + v(1) * v(1) - 4.0, v(0) * v(1) - 1.0;
    return r;
  };
  const JacobianFn j = [](const Eigen::VectorXd& v) {
    Eigen::MatrixXd m(2, 2);
    m << 2 * v(0), 2 * v(1), v(1), v(0);
    return m;
  };
  Eigen::VectorXd x0(2);
  x0 << 2.0, 0.3;
  const auto rep = newton_solve(f, j, x0);
  CHECK(rep.converged);
  CHECK(rep.residual_norm <= 1e-13);
  CHECK(f(rep.x).lpNorm<Eigen::Infinity>() <= 1e-13);
  REQUIRE(rep.step_norms.size() >= 3);
  // Last step still well above the rounding floor; the one after it must be
  // bounded by C s^2.
  const auto& s = rep.step_norms;
  std::size_t k = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] > 1e-7) {
      k = i;
    }
  }
  CHECK(s[k + 1] <= 10.0 * s[k] * s[k] + 1e-14);
}

TEST_CASE("singular Jacobian") {
  const ResidualFn f = [](const Eigen::VectorXd& v) {
    Eigen::VectorXd r(2);
    r << v(0) + v(1) - 1.0, 2 * v(0) + 2 * v(1) - 3.0;
    return r;
  };
  const JacobianFn j = [](const Eigen::VectorXd&) {
    Eigen::MatrixXd m(2, 2);
    m << 1, 1, 2, 2;
    return m;
  };
  try {
    newton_solve(f, j, Eigen::VectorXd::Zero(2));
    FAIL("expected SolveError");
  } catch (const SolveError& e) {
    CHECK(e.kind() == SolveError::Kind::SingularMatrix);
  }
}

TEST_CASE("no root") {
  // x^2 + 1 = 0 has no real solution.
  const ResidualFn f = [](const Eigen::VectorXd& v) {
    Eigen::VectorXd r(1);
    r << v(0) * v(0) + 1.0;
    return r;
  };
  const JacobianFn j = [](const Eigen::VectorXd& v) {
    Eigen::MatrixXd m(1, 1);
    m << 2 * v(0);
    return m;
  };
  Eigen::VectorXd x0(1);
  x0 << 0.7;
  NewtonOptions opts;
  opts.max_iterations = 50;
  try {
    newton_solve(f, j, x0, opts);
    FAIL("expected SolveError");
  } catch (const SolveError& e) {
    CHECK(e.kind() == SolveError::Kind::NonConvergence);
    CHECK(e.residual_norm() >= 1.0);
  }
}

TEST_CASE("dense solve and condition number") {
  Eigen::MatrixXd a(2, 2);
  a << 4, 1, 2, 3;
  Eigen::VectorXd rhs(2);
  rhs << 1, 2;
  const auto sol = solve_dense(a, rhs, true);
  CHECK((a * sol.x - rhs).lpNorm<Eigen::Infinity>() <= 1e-15);
  // inverse = [3 -1; -2 4]/10, so kappa = 5 * 0.6.
  CHECK(inf_norm(a) == 5.0);
  CHECK(sol.kappa_inf == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(condition_number_inf(Eigen::MatrixXd::Identity(4, 4)) == 1.0);

  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(2, 2);
  CHECK_THROWS_AS(solve_dense(s, rhs), SolveError);
}
