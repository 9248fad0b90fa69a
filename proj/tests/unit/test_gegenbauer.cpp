#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "oracle.hpp"
#include "sgipsm/gegenbauer.hpp"

using namespace sgipsm;
using doctest::Approx;

namespace {

const std::vector<double> kNodeAlphas = {-0.4, -0.1, 0.0, 0.5, 1.1, 2.0};

double q(double alpha, int n, double x) {
  const auto g = eval_gegenbauer(alpha, n + 1, x);
  return g[n + 1] - g[n];
}

}  // namespace

TEST_CASE("small-degree values") {
  CHECK(eval_gegenbauer(0.3, 0, 0.77) == std::vector<double>{1.0});
  CHECK(eval_gegenbauer(0.0, 2, 0.5)[2] == Approx(-0.5).epsilon(1e-15));
  CHECK(eval_gegenbauer(0.5, 2, 0.5)[2] == Approx(-0.125).epsilon(1e-15));
  for (double a : {0.0, 0.25, 1.0, 3.5}) {
    for (double g : eval_gegenbauer(a, 30, 1.0)) {
      CHECK(g == Approx(1.0).epsilon(1e-14));
    }
  }
}

TEST_CASE("derivatives") {
  const auto d0 = eval_gegenbauer_derivative(0.9, 1, 0.3);
  CHECK(d0[0] == 0.0);
  CHECK(d0[1] == 1.0);
  CHECK(eval_gegenbauer_derivative(0.0, 2, 0.5)[2] == Approx(2.0).epsilon(1e-15));
  CHECK(eval_gegenbauer_derivative(0.5, 2, 0.2)[2] == Approx(0.6).epsilon(1e-15));

  // Central differences of the values.
  for (double a : oracle::kAlphaGrid) {
    const double x = 0.37;
    const double h = 1e-6;
    const auto d = eval_gegenbauer_derivative(a, 12, x);
    const auto up = eval_gegenbauer(a, 12, x + h);
    const auto dn = eval_gegenbauer(a, 12, x - h);
    for (int j = 0; j <= 12; ++j) {
      CHECK(d[j] == Approx((up[j] - dn[j]) / (2 * h)).epsilon(1e-6));
    }
  }
}

TEST_CASE("values agree with independent evaluations") {
  for (double a : oracle::kAlphaGrid) {
    for (double x : {-0.93, -0.4, 0.0, 0.21, 0.88}) {
      const auto g = eval_gegenbauer(a, 64, x);
      for (int n = 0; n <= 64; ++n) {
        CHECK(std::abs(g[n] - oracle::gegenbauer(a, n, x)) <= 1e-11 * std::max(1.0, std::abs(g[n])));
      }
    }
  }
}

TEST_CASE("recurrence residual") {
  for (double a : oracle::kAlphaGrid) {
    for (double x : {-0.7, 0.1, 0.95}) {
      const auto g = eval_gegenbauer(a, 64, x);
      for (int n = 1; n < 64; ++n) {
        const double lhs = (n + 2 * a) * g[n + 1];
        const double rhs = 2 * (n + a) * x * g[n] - n * g[n - 1];
        CHECK(std::abs(lhs - rhs) <= 1e-12 * (n + 1));
      }
    }
  }
}

TEST_CASE("leading coefficient and normalization") {
  CHECK(leading_coefficient(0.7, 0) == Approx(1.0).epsilon(1e-14));
  for (double a : oracle::kAlphaGrid) {
    CHECK(leading_coefficient(a, 1) == Approx(1.0).epsilon(1e-14));
    for (int n = 0; n <= 40; ++n) {
      CHECK(leading_coefficient(a, n) == Approx(oracle::leading_coefficient(a, n)).epsilon(1e-12));
    }
  }
  CHECK(leading_coefficient(0.5, 2) == Approx(1.5).epsilon(1e-14));
  CHECK(normalization(0.5, 0) == Approx(2.0).epsilon(1e-14));
  CHECK(normalization(0.0, 0) == Approx(std::numbers::pi).epsilon(1e-14));
  CHECK(normalization(0.0, 1) == Approx(std::numbers::pi / 2).epsilon(1e-14));
}

TEST_CASE("continuous orthogonality against quadrature") {
  for (double a : oracle::kAlphaGrid) {
    for (int m = 0; m <= 8; ++m) {
      for (int n = m; n <= 8; ++n) {
        const double v = oracle::weighted_integral(
            [&](double x) { return oracle::gegenbauer(a, m, x) * oracle::gegenbauer(a, n, x); }, a);
        const double expected = (m == n) ? normalization(a, n) : 0.0;
        CHECK(std::abs(v - expected) <= 1e-9 * std::max(1.0, std::abs(expected)));
      }
    }
  }
}

TEST_CASE("node sets for small n") {
  CHECK(fggr_nodes(BasisConfig(0.3, 0))(0) == 1.0);
  const auto n0 = fggr_nodes(BasisConfig(0.0, 1));
  CHECK(n0(0) == 1.0);
  CHECK(n0(1) == Approx(-0.5).epsilon(1e-14));
  const auto n1 = fggr_nodes(BasisConfig(0.5, 1));
  CHECK(n1(1) == Approx(-1.0 / 3.0).epsilon(1e-14));

  const auto s = shift_nodeset(make_nodeset(BasisConfig(0.0, 1)), 1.0);
  CHECK(s.nodes(0) == 1.0);
  CHECK(s.nodes(1) == Approx(0.25).epsilon(1e-14));
  const auto s2 = shift_nodeset(make_nodeset(BasisConfig(0.5, 1)), 1.5);
  CHECK(s2.nodes(0) == 1.5);
  CHECK(s2.nodes(1) == Approx(0.5).epsilon(1e-14));
}

TEST_CASE("Christoffel numbers") {
  const auto w0 = make_nodeset(BasisConfig(0.5, 0)).weights;
  CHECK(w0(0) == Approx(2.0).epsilon(1e-14));
  CHECK(make_nodeset(BasisConfig(0.0, 4)).weights.sum() == Approx(std::numbers::pi).epsilon(1e-13));
  const auto ns = make_nodeset(BasisConfig(0.5, 3));
  CHECK(std::abs(ns.weights.dot(ns.nodes)) <= 1e-13);
}

TEST_CASE("nodes are valid up to n = 256") {
  for (double a : kNodeAlphas) {
    for (int n : {1, 2, 5, 16, 33, 64, 128, 256}) {
      CAPTURE(a);
      CAPTURE(n);
      const auto ns = make_nodeset(BasisConfig(a, n));
      REQUIRE(ns.nodes.size() == n + 1);
      CHECK(ns.nodes(0) == 1.0);
      bool descending = true;
      bool positive = true;
      for (int k = 0; k <= n; ++k) {
        if (k > 0 && !(ns.nodes(k) < ns.nodes(k - 1))) {
          descending = false;
        }
        if (!(ns.weights(k) > 0.0)) {
          positive = false;
        }
      }
      CHECK(descending);
      CHECK(positive);
      CHECK(ns.nodes(n) > -1.0);
      // Roots: |q_n(x_k)| is tiny relative to the size of q_n (at most 2 for a >= 0).
      double worst = 0.0;
      for (int k = 1; k <= n; ++k) {
        worst = std::max(worst, std::abs(q(a, n, ns.nodes(k))));
      }
      CHECK(worst <= 1e-10 * std::max(1.0, std::sqrt(static_cast<double>(n))));
    }
  }
}

TEST_CASE("Radau rule is exact to degree 2n") {
  for (double a : oracle::kAlphaGrid) {
    for (int n = 1; n <= 10; ++n) {
      const auto ns = make_nodeset(BasisConfig(a, n));
      for (int d = 0; d <= 2 * n; ++d) {
        double quad = 0.0;
        for (int k = 0; k <= n; ++k) {
          quad += ns.weights(k) * std::pow(ns.nodes(k), d);
        }
        const double exact = oracle::weighted_integral([d](double x) { return std::pow(x, d); }, a);
        CHECK(std::abs(quad - exact) <= 1e-11 * std::max(1.0, std::abs(exact)));
      }
    }
  }
}

TEST_CASE("discrete orthonormality") {
  for (double a : oracle::kAlphaGrid) {
    for (int n = 0; n <= 20; ++n) {
      const auto ns = make_nodeset(BasisConfig(a, n));
      Eigen::MatrixXd g(n + 1, n + 1);
      for (int k = 0; k <= n; ++k) {
        const auto v = eval_gegenbauer(a, n, ns.nodes(k));
        for (int j = 0; j <= n; ++j) {
          g(j, k) = v[j];
        }
      }
      double worst = 0.0;
      for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
          double s = 0.0;
          for (int k = 0; k <= n; ++k) {
            s += ns.weights(k) * g(i, k) * g(j, k);
          }
          s /= std::sqrt(ns.lambdas(i) * ns.lambdas(j));
          worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
        }
      }
      CAPTURE(a);
      CAPTURE(n);
      CHECK(worst <= 1e-10);
    }
  }
}

TEST_CASE("shift") {
  const auto st = make_nodeset(BasisConfig(0.7, 6));
  const auto same = shift_nodeset(st, 2.0);
  for (int k = 0; k <= 6; ++k) {
    CHECK(same.nodes(k) == st.nodes(k) + 1.0);
    CHECK(same.weights(k) == st.weights(k));
  }
  const auto sh = shift_nodeset(st, 1.5);
  CHECK(sh.interval.lower == 0.0);
  CHECK(sh.interval.upper == 1.5);
  CHECK(sh.nodes(0) == 1.5);
  const double scale = std::pow(0.75, 2 * 0.7);
  for (int k = 0; k <= 6; ++k) {
    CHECK(sh.weights(k) == Approx(st.weights(k) * scale).epsilon(1e-14));
  }
  const auto gs = eval_shifted_gegenbauer(0.7, 6, 1.5, 0.3);
  const auto gr = eval_gegenbauer(0.7, 6, 2 * 0.3 / 1.5 - 1);
  for (int j = 0; j <= 6; ++j) {
    CHECK(gs[j] == Approx(gr[j]).epsilon(1e-14));
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(BasisConfig(-0.5, 3), std::invalid_argument);
  CHECK_THROWS_AS(BasisConfig(-0.7, 3), std::invalid_argument);
  CHECK_THROWS_AS(BasisConfig(0.5, -1), std::invalid_argument);
  CHECK_THROWS_AS(BasisConfig(std::nan(""), 3), std::invalid_argument);
  CHECK_THROWS_AS(shift_nodeset(make_nodeset(BasisConfig(0.5, 3)), 0.0), std::invalid_argument);
}
