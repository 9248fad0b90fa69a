#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sgipsm/errors.hpp"
#include "sgipsm/registry.hpp"
#include "sgipsm/report.hpp"
#include "sgipsm/solver.hpp"

using namespace sgipsm;

namespace {

double relative_error(double approx, double exact) { return std::abs(approx - exact) / std::abs(exact); }

ProblemSpec linear_spec(double alpha1, double alpha2, double beta, double gamma, double delta, double b, ScalarFn p,
                        ScalarFn g) {
  ProblemSpec s;
  s.alpha1 = alpha1;
  s.alpha2 = alpha2;
  s.beta = beta;
  s.gamma = gamma;
  s.delta = delta;
  s.b = b;
  s.term = LinearTerm{std::move(p), std::move(g)};
  return s;
}

}  // namespace

TEST_CASE("core matrices") {
  const auto ops = build_operators(BasisConfig(0.4, 5), 1.0);
  auto spec = linear_spec(0, 0, 1, 0, 0, 1, [](double) { return 0.0; }, [](double) { return 0.0; });
  const auto core = assemble_core(spec, ops);
  CHECK(core.h == Eigen::MatrixXd::Identity(6, 6));
  CHECK(core.xbar.isZero(0.0));

  spec.b = 2.0;
  CHECK_THROWS_AS(assemble_core(spec, ops), std::invalid_argument);
}

TEST_CASE("example 1: linear, beta != 0") {
  const auto& ex = example(1);
  const auto ops = build_operators(BasisConfig(0.1, 5), ex.spec.b);
  const auto r = solve(ex.spec, ops);
  REQUIRE(r.kappa_inf.has_value());
  CHECK(r.y0 == doctest::Approx(2 * std::log(7.0 / 8.0)).epsilon(2e-5));
  CHECK(relative_error(r.y0, ex.exact(0.0)) == doctest::Approx(1.8405e-6).epsilon(0.01));
  CHECK(relative_error(evaluate_solution(r, ops, 0.2), ex.exact(0.2)) == doctest::Approx(9.0436e-6).epsilon(0.01));
  CHECK(std::abs(r.y_nodes(0) - ex.exact(1.0)) <= 1e-14);
  CHECK(r.residual_nodes.lpNorm<Eigen::Infinity>() <= 1e-12);

  for (int n : {3, 9, 17}) {
    for (double a : {-0.3, 0.0, 1.4}) {
      const auto o = build_operators(BasisConfig(a, n), ex.spec.b);
      CHECK(std::abs(solve(ex.spec, o).y_nodes(0) - ex.exact(1.0)) <= 1e-14);
    }
  }
}

TEST_CASE("example 3 relative error at 0.5") {
  const auto& ex = example(3);
  const auto ops = build_operators(BasisConfig(-0.2, 6), ex.spec.b);
  const auto r = solve(ex.spec, ops);
  CHECK(relative_error(evaluate_solution(r, ops, 0.5), ex.exact(0.5)) == doctest::Approx(7.4427e-8).epsilon(0.01));
  CHECK(std::abs(evaluate_solution(r, ops, 1.0) - ex.exact(1.0)) <= 1e-13);
}

TEST_CASE("example 2: nonlinear, beta != 0") {
  const auto& ex = example(2);
  const auto ops = build_operators(BasisConfig(1.4, 7), ex.spec.b);
  const auto r = solve(ex.spec, ops);
  CHECK(r.converged);
  REQUIRE(r.newton_iters.has_value());
  CHECK(relative_error(evaluate_solution(r, ops, 0.1), ex.exact(0.1)) == doctest::Approx(3.7718e-9).epsilon(0.01));
  CHECK(relative_error(r.y0, 1.0) == doctest::Approx(1.1021e-7).epsilon(0.01));
  CHECK(r.residual_nodes.lpNorm<Eigen::Infinity>() <= 1e-10);
}

TEST_CASE("example 4 at the right endpoint") {
  const auto& ex = example(4);
  const auto ops = build_operators(BasisConfig(0.9, 5), ex.spec.b);
  const auto r = solve(ex.spec, ops);
  CHECK(std::abs(evaluate_solution(r, ops, 1.5) - ex.exact(1.5)) <= 1e-15);
}

TEST_CASE("example 5: nonlinear, beta = 0") {
  const auto& ex = example(5);
  const auto ops = build_operators(BasisConfig(0.9, 7), ex.spec.b);
  const auto r = solve(ex.spec, ops);
  CHECK(r.assumption == Assumption::ZeroBeta);
  CHECK(relative_error(evaluate_solution(r, ops, 0.5), ex.exact(0.5)) <= 1e-13);
  CHECK(std::abs(evaluate_solution(r, ops, 1.0) - ex.exact(1.0)) <= 5e-15);
  CHECK(std::abs(r.yprime_nodes(0) + 1.0) <= 1e-12);
  CHECK(r.residual_nodes.lpNorm<Eigen::Infinity>() <= 1e-10);
}

TEST_CASE("y0 recovery") {
  const auto ops = build_operators(BasisConfig(0.6, 4), 1.3);
  auto spec = linear_spec(0, 1, 2.0, 0.5, 3.0, 1.3, [](double) { return 0.0; }, [](double) { return 0.0; });
  CHECK(recover_y0_a1(Eigen::VectorXd::Zero(5), spec, ops) == 1.5);

  // Both ways of forming y at the nodes agree: xbar + Theta Phi and y0 + alpha1 x + Q2b Phi.
  for (int id : {1, 2, 3, 4}) {
    const auto& ex = example(id);
    const auto o = build_operators(BasisConfig(0.7, 9), ex.spec.b);
    const auto r = solve(ex.spec, o);
    const Eigen::VectorXd direct =
        (r.y0 + ex.spec.alpha1 * o.shifted_nodeset.nodes.array()).matrix() + o.q2_shifted * r.phi;
    CHECK((direct - r.y_nodes).lpNorm<Eigen::Infinity>() <= 1e-13);
    CHECK(r.y0 == recover_y0_a1(r.phi, ex.spec, o));
  }
}

TEST_CASE("manufactured polynomial solution is reproduced") {
  // y = x^3 + 2 on [0, 1.5], y'' + (2/x) y' + (1 + x) y = g, Robin data at b.
  const double b = 1.5;
  auto y = [](double x) { return x * x * x + 2.0; };
  auto dy = [](double x) { return 3 * x * x; };
  auto g = [&](double x) { return 6 * x + 2.0 / x * dy(x) + (1 + x) * y(x); };
  const auto spec = linear_spec(0, 2, 1, 0.5, y(b) + 0.5 * dy(b), b, [](double x) { return 1 + x; }, g);
  for (double a : {-0.4, 0.0, 0.5, 2.0}) {
    const auto ops = build_operators(BasisConfig(a, 6), b);
    const auto r = solve(spec, ops);
    for (int i = 0; i <= 6; ++i) {
      const double x = ops.shifted_nodeset.nodes(i);
      CHECK(std::abs(r.y_nodes(i) - y(x)) <= 1e-12);
      CHECK(std::abs(r.yprime_nodes(i) - dy(x)) <= 1e-12);
    }
    CHECK(std::abs(r.y0 - 2.0) <= 1e-12);
    for (double x : {0.1, 0.7, 1.2}) {
      CHECK(std::abs(evaluate_solution(r, ops, x) - y(x)) <= 1e-11);
    }
  }
}

TEST_CASE("residual of the zero iterate") {
  // Phi = 0 on example 1 leaves y = xbar = 0 and y' = 0, so R = f(x, 0) = -g.
  const auto& ex = example(1);
  const auto ops = build_operators(BasisConfig(0.1, 5), ex.spec.b);
  SolverResult r;
  r.phi = Eigen::VectorXd::Zero(6);
  r.y_nodes = assemble_core(ex.spec, ops).xbar;
  r.yprime_nodes = Eigen::VectorXd::Zero(6);
  const auto res = compute_residual(r, ex.spec, ops);
  const auto& lin = std::get<LinearTerm>(ex.spec.term);
  for (int i = 0; i <= 5; ++i) {
    CHECK(res(i) == doctest::Approx(-lin.g(ops.shifted_nodeset.nodes(i))).epsilon(1e-15));
  }
}

TEST_CASE("Newton converges quadratically on example 2") {
  const auto& ex = example(2);
  const auto ops = build_operators(BasisConfig(0.8, 12), ex.spec.b);
  const auto r = solve(ex.spec, ops);
  const auto& s = r.step_norms;
  REQUIRE(s.size() >= 3);
  std::size_t k = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] > 1e-7) {
      k = i;
    }
  }
  CHECK(s[k + 1] <= 10.0 * s[k] * s[k] + 1e-14);
}

TEST_CASE("linear beta = 0") {
  // y'' = 0, y'(0) = -1, y'(1) = -1: y is linear, Phi = 0, but y0 is free.
  // With p = 0 the block matrix is singular.
  const auto ops = build_operators(BasisConfig(0.5, 5), 1.0);
  const auto homogeneous =
      linear_spec(-1, 0, 0, 1, -1, 1, [](double) { return 0.0; }, [](double) { return 0.0; });
  try {
    solve(homogeneous, ops);
    FAIL("expected SolveError");
  } catch (const SolveError& e) {
    CHECK(e.kind() == SolveError::Kind::SingularMatrix);
  }

  // p = 1 pins y0: y = 1 - x solves y'' + y = 1 - x.
  const auto pinned =
      linear_spec(-1, 0, 0, 1, -1, 1, [](double) { return 1.0; }, [](double x) { return 1.0 - x; });
  const auto r = solve(pinned, ops);
  CHECK(r.phi.lpNorm<Eigen::Infinity>() <= 1e-13);
  CHECK((r.yprime_nodes.array() + 1.0).abs().maxCoeff() <= 1e-13);
  CHECK(std::abs(r.y0 - 1.0) <= 1e-13);
  REQUIRE(r.kappa_inf.has_value());

  // y = x^2 + 1: y'' = 2, y'(0) = 0, y'(1) = 2, g = 2 + y.
  const auto quad = linear_spec(0, 0, 0, 1, 2, 1, [](double) { return 1.0; },
                                [](double x) { return 3.0 + x * x; });
  const auto q = solve(quad, ops);
  CHECK((q.phi.array() - 2.0).abs().maxCoeff() <= 1e-12);
  CHECK(std::abs(q.yprime_nodes(0) - 2.0) <= 1e-12);
  CHECK(std::abs(q.y0 - 1.0) <= 1e-12);
}

TEST_CASE("evaluator") {
  const auto& ex = example(3);
  const auto ops = build_operators(BasisConfig(0.2, 8), ex.spec.b);
  const auto r = solve(ex.spec, ops);
  const SolutionEvaluator eval(r, ops);
  CHECK(eval(0.0) == r.y0);
  for (int i = 0; i <= 8; ++i) {
    CHECK(eval(ops.shifted_nodeset.nodes(i)) == r.y_nodes(i));
  }
  CHECK_THROWS_AS((void)eval(1.01), std::invalid_argument);
}

TEST_CASE("spec validation") {
  const auto ops = build_operators(BasisConfig(0.5, 3), 1.0);
  auto bad = linear_spec(0, 0, 0, 0, 1, 1, [](double) { return 0.0; }, [](double) { return 0.0; });
  CHECK_THROWS_AS(solve(bad, ops), std::invalid_argument);
  bad.beta = 1.0;
  bad.b = -1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  ProblemSpec missing;
  missing.term = NonlinearTerm{};
  CHECK_THROWS_AS(missing.validate(), std::invalid_argument);
}
