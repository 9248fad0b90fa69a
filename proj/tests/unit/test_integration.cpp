#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "oracle.hpp"
#include "sgipsm/integration.hpp"

using namespace sgipsm;
using doctest::Approx;

namespace {

Eigen::VectorXd sample(const Eigen::VectorXd& x, const std::function<double(double)>& f) {
  Eigen::VectorXd v(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    v(i) = f(x(i));
  }
  return v;
}

}  // namespace

TEST_CASE("antiderivative closed forms") {
  for (double a : oracle::kAlphaGrid) {
    for (double x : {-1.0, -0.3, 0.6, 1.0}) {
      CHECK(integrate_basis(a, 0, x) == Approx(x + 1).epsilon(1e-15));
      CHECK(integrate_basis(a, 1, x) == Approx((x * x - 1) / 2).epsilon(1e-15));
    }
  }
  for (double x : {-0.8, 0.1, 0.9}) {
    CHECK(integrate_basis(0.0, 2, x) == Approx(2 * x * x * x / 3 - x - 1.0 / 3).epsilon(1e-14));
  }
}

TEST_CASE("antiderivative matches adaptive quadrature") {
  std::mt19937 rng(20240917);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (double a : oracle::kAlphaGrid) {
    for (int s = 0; s < 20; ++s) {
      const double x = dist(rng);
      for (int j = 0; j <= 24; ++j) {
        const double ref = oracle::integrate([&](double t) { return oracle::gegenbauer(a, j, t); }, -1.0, x);
        CAPTURE(a);
        CAPTURE(j);
        CAPTURE(x);
        CHECK(std::abs(integrate_basis(a, j, x) - ref) <= 1e-12);
      }
    }
  }
}

TEST_CASE("Q1 for n = 0") {
  const auto ops = build_operators(BasisConfig(0.5, 0), 2.0);
  REQUIRE(ops.q1.rows() == 1);
  CHECK(ops.q1(0, 0) == Approx(2.0).epsilon(1e-14));
}

TEST_CASE("Q1 and Q2 on low-degree data") {
  for (double a : oracle::kAlphaGrid) {
    const auto ops = build_operators(BasisConfig(a, 5), 2.0);
    const auto& x = ops.nodeset.nodes;
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(6);
    const Eigen::VectorXd i1 = ops.q1 * ones;
    const Eigen::VectorXd i2 = ops.q2 * ones;
    for (int i = 0; i <= 5; ++i) {
      CHECK(std::abs(i1(i) - (x(i) + 1)) <= 1e-12);
      CHECK(std::abs(i2(i) - (x(i) + 1) * (x(i) + 1) / 2) <= 1e-11);
      CHECK(ops.q2(i, i) == 0.0);
    }
  }

  const auto ops = build_operators(BasisConfig(1.1, 7), 2.0);
  const auto& x = ops.nodeset.nodes;
  const Eigen::VectorXd v = ops.q1 * sample(x, [](double t) { return t * t; });
  for (int i = 0; i <= 7; ++i) {
    CHECK(std::abs(v(i) - (std::pow(x(i), 3) + 1) / 3) <= 1e-11);
  }

  // Twofold integral of t over [-1, x]: (x + 1)^2 (x - 2)/6 + ... computed by nested quadrature.
  const auto ops6 = build_operators(BasisConfig(0.5, 6), 2.0);
  const auto& x6 = ops6.nodeset.nodes;
  const Eigen::VectorXd w = ops6.q2 * x6;
  for (int i = 0; i <= 6; ++i) {
    const double ref = oracle::integrate(
        [](double s) { return oracle::integrate([](double t) { return t; }, -1.0, s); }, -1.0, x6(i));
    CHECK(std::abs(w(i) - ref) <= 1e-11);
  }
}

// Componentwise relative error: near x = 0 the exact integral of x^d is far
// below the rounding of the row sum, so the sum of |terms| sets the scale.
TEST_CASE("shifted operators are exact on monomials") {
  for (double a : oracle::kAlphaGrid) {
    for (double b : {1.0, 1.5, 2.0}) {
      for (int n = 1; n <= 20; ++n) {
        const auto ops = build_operators(BasisConfig(a, n), b);
        const auto& x = ops.shifted_nodeset.nodes;
        double worst1 = 0.0;
        double worst2 = 0.0;
        for (int d = 0; d <= n; ++d) {
          const Eigen::VectorXd f = sample(x, [d](double t) { return std::pow(t, d); });
          const Eigen::VectorXd i1 = ops.q1_shifted * f;
          const Eigen::VectorXd i2 = ops.q2_shifted * f;
          const Eigen::VectorXd s1 = ops.q1_shifted.cwiseAbs() * f.cwiseAbs();
          const Eigen::VectorXd s2 = ops.q2_shifted.cwiseAbs() * f.cwiseAbs();
          for (int i = 0; i <= n; ++i) {
            const double e1 = std::pow(x(i), d + 1) / (d + 1);
            worst1 = std::max(worst1, std::abs(i1(i) - e1) / std::max(std::abs(e1), s1(i)));
            if (d <= n - 1) {
              const double e2 = std::pow(x(i), d + 2) / ((d + 1) * (d + 2));
              worst2 = std::max(worst2, std::abs(i2(i) - e2) / std::max(std::abs(e2), s2(i)));
            }
          }
        }
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(n);
        CHECK(worst1 <= 1e-11);
        CHECK(worst2 <= 1e-11);
      }
    }
  }
}

TEST_CASE("Q1 truncation error on the first inexact monomial") {
  // For f = x^(n+1) the interpolant misses exactly q_n / K_{n+1}.
  for (double a : oracle::kAlphaGrid) {
    for (int n : {3, 6, 9}) {
      const auto ops = build_operators(BasisConfig(a, n), 2.0);
      const auto& x = ops.nodeset.nodes;
      const Eigen::VectorXd i1 = ops.q1 * sample(x, [n](double t) { return std::pow(t, n + 1); });
      const double k = oracle::leading_coefficient(a, n + 1);
      for (int i = 0; i <= n; ++i) {
        const double exact = (std::pow(x(i), n + 2) - std::pow(-1.0, n + 2)) / (n + 2);
        const double predicted = integrate_fggr_polynomial(a, n, x(i)) / k;
        CHECK(std::abs((exact - i1(i)) - predicted) <= 1e-12);
      }
    }
  }
}

TEST_CASE("shift relations") {
  const auto st = make_nodeset(BasisConfig(0.3, 8));
  const Eigen::MatrixXd q1 = build_q1(st);
  const auto same = shift_operators(q1, st, 2.0);
  CHECK(same.q1_shifted == q1);
  for (double b : {0.5, 1.0, 1.5}) {
    const auto ops = shift_operators(q1, st, b);
    CHECK(ops.q1_shifted == (b / 2) * q1);
    for (int i = 0; i <= 8; ++i) {
      for (int k = 0; k <= 8; ++k) {
        CHECK(ops.q2_shifted(i, k) ==
              Approx((ops.shifted_nodeset.nodes(i) - ops.shifted_nodeset.nodes(k)) * ops.q1_shifted(i, k))
                  .epsilon(1e-14));
      }
    }
  }

  const auto o1 = build_operators(BasisConfig(0.1, 5), 1.0);
  const Eigen::VectorXd a1 = o1.q1_shifted * Eigen::VectorXd::Ones(6);
  for (int i = 0; i <= 5; ++i) {
    CHECK(std::abs(a1(i) - o1.shifted_nodeset.nodes(i)) <= 1e-12);
  }
  const auto o2 = build_operators(BasisConfig(0.9, 6), 1.5);
  const Eigen::VectorXd a2 = o2.q2_shifted * Eigen::VectorXd::Ones(7);
  for (int i = 0; i <= 6; ++i) {
    const double x = o2.shifted_nodeset.nodes(i);
    CHECK(std::abs(a2(i) - x * x / 2) <= 1e-11);
  }
}

TEST_CASE("interpolation") {
  for (double a : oracle::kAlphaGrid) {
    const auto ops = build_operators(BasisConfig(a, 6), 1.0);
    const auto& sh = ops.shifted_nodeset;
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(7);
    for (double x : {0.0, 0.13, 0.5, 0.999, 1.0}) {
      CHECK(std::abs(lagrange_interpolate(sh, ones, x) - 1.0) <= 1e-12);
    }
    Eigen::VectorXd v(7);
    v << 3.0, -1.0, 0.5, 2.0, 7.0, -4.0, 0.25;
    const Interpolator interp(sh, v);
    for (int k = 0; k <= 6; ++k) {
      CHECK(std::abs(lagrange_interpolate(sh, v, sh.nodes(k)) - v(k)) <= 1e-10);
      CHECK(std::abs(interp(sh.nodes(k)) - v(k)) <= 1e-10);
    }
  }
  const auto ops = build_operators(BasisConfig(0.5, 4), 1.0);
  const Eigen::VectorXd sq = sample(ops.shifted_nodeset.nodes, [](double t) { return t * t; });
  const Interpolator interp(ops.shifted_nodeset, sq);
  for (double x : {0.0, 0.2, 0.77}) {
    CHECK(std::abs(lagrange_interpolate(ops.shifted_nodeset, sq, x) - x * x) <= 1e-10);
    CHECK(std::abs(interp(x) - x * x) <= 1e-10);
  }
  CHECK_THROWS_AS(lagrange_interpolate(ops.shifted_nodeset, sq, 1.2), std::invalid_argument);
  CHECK_THROWS_AS(lagrange_interpolate(ops.shifted_nodeset, sq, -0.1), std::invalid_argument);
}

TEST_CASE("matrix CSV") {
  Eigen::MatrixXd m(2, 2);
  m << 1.0, 0.1, -2.5, 1e-20;
  std::ostringstream os;
  write_matrix_csv(os, m);
  CHECK(os.str() == "1,0.10000000000000001\n-2.5,9.9999999999999995e-21\n");
}
