#include "sgipsm/registry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "sgipsm/expression.hpp"

namespace sgipsm {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr Quantity RE = Quantity::RelativeError;
constexpr Quantity AEB = Quantity::AbsoluteErrorAtB;
constexpr Quantity MAE = Quantity::MeanAbsoluteError;

// k-th derivative of sinh(2x)/x from its Taylor series sum 2^(2m+1) x^(2m) / (2m+1)!.
double sinh_ratio_derivative(int k, double x) {
  double total = 0.0;
  for (int m = 0; m < 40; ++m) {
    const int p = 2 * m;
    if (p < k) continue;
    // 2^(p+1) p! / ((p-k)! (p+1)!) x^(p-k)
    const double log_c = (p + 1) * std::numbers::ln2 + std::lgamma(p + 1.0) - std::lgamma(p - k + 1.0) -
                         std::lgamma(p + 2.0);
    total += std::exp(log_c) * std::pow(x, p - k);
  }
  return total;
}

ExampleCase example1() {
  ExampleCase ex;
  ex.id = 1;
  ex.title = "linear, y'' + y'/x = (8/(8 - x^2))^2, y'(0) = 0, y(1) = 0";
  ex.spec.alpha1 = 0.0;
  ex.spec.alpha2 = 1.0;
  ex.spec.beta = 1.0;
  ex.spec.gamma = 0.0;
  ex.spec.delta = 0.0;
  ex.spec.b = 1.0;
  ex.spec.term = LinearTerm{[](double) { return 0.0; },
                            [](double x) {
                              const double r = 8.0 / (8.0 - x * x);
                              return r * r;
                            }};
  ex.exact = [](double x) { return 2.0 * std::log(7.0 / (8.0 - x * x)); };
  ex.exact_d1 = [](double x) { return 4.0 * x / (8.0 - x * x); };
  ex.exact_d2 = [](double x) {
    const double d = 8.0 - x * x;
    return (32.0 + 4.0 * x * x) / (d * d);
  };
  ex.lattice_points = 50;
  ex.table_points = {0, 0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  ex.quoted_alpha = 0.1;
  ex.published_settings = {{5, 0.1}, {7, 1.1}};
  ex.references = {
      {"Table 1", 5, 0.1, RE, 0.0, 1.8405e-6},  {"Table 1", 5, 0.1, RE, 0.05, 1.8512e-6},
      {"Table 1", 5, 0.1, RE, 0.1, 3.2213e-6},  {"Table 1", 5, 0.1, RE, 0.2, 9.0436e-6},
      {"Table 1", 5, 0.1, RE, 0.3, 3.6570e-6},  {"Table 1", 5, 0.1, RE, 0.4, 7.1760e-6},
      {"Table 1", 5, 0.1, RE, 0.5, 1.3045e-5},  {"Table 1", 5, 0.1, RE, 0.6, 6.5036e-6},
      {"Table 1", 5, 0.1, RE, 0.7, 1.1139e-5},  {"Table 1", 5, 0.1, RE, 0.8, 2.5024e-5},
      {"Table 1", 5, 0.1, RE, 0.9, 2.4411e-6},  {"Table 1", 5, 0.1, AEB, 1.0, 0.0},
      {"Table 2", 7, 1.1, RE, 0.0, 7.9499e-8},  {"Table 2", 7, 1.1, RE, 0.2, 8.6474e-9},
      {"Table 2", 7, 1.1, RE, 0.4, 5.4461e-10}, {"Table 2", 7, 1.1, RE, 0.6, 2.8767e-8},
      {"Table 2", 7, 1.1, RE, 0.8, 4.0944e-8},  {"Table 2", 7, 1.1, AEB, 1.0, 0.0},
  };
  return ex;
}

ExampleCase example2() {
  ExampleCase ex;
  ex.id = 2;
  ex.title = "nonlinear, y'' + 2y'/x + y^5 = 0, y'(0) = 0, y(1) = sqrt(3)/2";
  ex.spec.alpha1 = 0.0;
  ex.spec.alpha2 = 2.0;
  ex.spec.beta = 1.0;
  ex.spec.gamma = 0.0;
  ex.spec.delta = std::sqrt(3.0) / 2.0;
  ex.spec.b = 1.0;
  ex.spec.term = NonlinearTerm{[](double, double y) { return std::pow(y, 5); },
                               [](double, double y) { return 5.0 * std::pow(y, 4); }};
  ex.exact = [](double x) { return 1.0 / std::sqrt(1.0 + x * x / 3.0); };
  ex.exact_d1 = [](double x) { return -(x / 3.0) * std::pow(1.0 + x * x / 3.0, -1.5); };
  ex.exact_d2 = [](double x) {
    const double u = 1.0 + x * x / 3.0;
    return -std::pow(u, -1.5) / 3.0 + (x * x / 3.0) * std::pow(u, -2.5);
  };
  ex.lattice_points = 11;
  ex.table_points = {0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  ex.quoted_alpha = 0.8;
  ex.published_settings = {{7, 1.4}, {3, 0.8}, {6, -0.1}, {8, 0.8}};
  ex.references = {
      {"Table 3", 7, 1.4, RE, 0.0, 1.1021e-7},  {"Table 3", 7, 1.4, RE, 0.1, 3.7718e-9},
      {"Table 3", 7, 1.4, RE, 0.2, 1.7350e-8},  {"Table 3", 7, 1.4, RE, 0.3, 8.4623e-8},
      {"Table 3", 7, 1.4, RE, 0.4, 3.6471e-8},  {"Table 3", 7, 1.4, RE, 0.5, 1.6719e-8},
      {"Table 3", 7, 1.4, RE, 0.6, 3.4350e-8},  {"Table 3", 7, 1.4, RE, 0.7, 7.9305e-8},
      {"Table 3", 7, 1.4, RE, 0.8, 4.9866e-9},  {"Table 3", 7, 1.4, RE, 0.9, 1.9892e-9},
      {"Table 3", 7, 1.4, AEB, 1.0, 4.4409e-16}, {"Table 4", 3, 0.8, MAE, 0.0, 3.9711e-4},
      {"Table 4", 6, -0.1, MAE, 0.0, 1.7118e-6}, {"Table 4", 8, 0.8, MAE, 0.0, 2.6347e-8},
  };
  return ex;
}

// sinh(2) from the runtime libm. A literal std::sinh(2.0) is folded at compile
// time with a correctly rounded result that can differ from libm by one ulp,
// which would break byte equality with the config-file evaluator.
double runtime_sinh(double v) {
  volatile double arg = v;
  return std::sinh(arg);
}

ExampleCase example3() {
  ExampleCase ex;
  ex.id = 3;
  ex.title = "linear, y'' + 2y'/x - 4y = -2, y'(0) = 0, y(1) = 5.5";
  ex.spec.alpha1 = 0.0;
  ex.spec.alpha2 = 2.0;
  ex.spec.beta = 1.0;
  ex.spec.gamma = 0.0;
  ex.spec.delta = 5.5;
  ex.spec.b = 1.0;
  ex.spec.term = LinearTerm{[](double) { return -4.0; }, [](double) { return -2.0; }};
  // Same operation order as the config expression 0.5 + 10*sinhc(2*x)/sinh(2).
  static const double sinh2 = runtime_sinh(2.0);
  ex.exact = [](double x) { return 0.5 + 10.0 * sinhc(2.0 * x) / sinh2; };
  ex.exact_d1 = [](double x) { return 5.0 * sinh_ratio_derivative(1, x) / sinh2; };
  ex.exact_d2 = [](double x) { return 5.0 * sinh_ratio_derivative(2, x) / sinh2; };
  ex.lattice_points = 50;
  ex.table_points = {0.025, 0.05, 0.075, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  ex.quoted_alpha = -0.2;
  ex.published_settings = {{6, -0.2}};
  ex.references = {
      {"Table 5", 6, -0.2, RE, 0.025, 1.4056e-8}, {"Table 5", 6, -0.2, RE, 0.05, 2.2797e-7},
      {"Table 5", 6, -0.2, RE, 0.075, 4.4184e-7}, {"Table 5", 6, -0.2, RE, 0.1, 5.7829e-7},
      {"Table 5", 6, -0.2, RE, 0.2, 1.9466e-7},   {"Table 5", 6, -0.2, RE, 0.3, 7.0896e-7},
      {"Table 5", 6, -0.2, RE, 0.4, 7.5662e-7},   {"Table 5", 6, -0.2, RE, 0.5, 7.4427e-8},
      {"Table 5", 6, -0.2, RE, 0.6, 7.2706e-7},   {"Table 5", 6, -0.2, RE, 0.7, 4.2395e-7},
      {"Table 5", 6, -0.2, RE, 0.8, 3.3767e-7},   {"Table 5", 6, -0.2, RE, 0.9, 3.0010e-7},
      {"Table 5", 6, -0.2, AEB, 1.0, 0.0},
  };
  return ex;
}

ExampleCase example4() {
  static const double c = 3.0 - 2.0 * std::sqrt(2.0);
  ExampleCase ex;
  ex.id = 4;
  ex.title = "nonlinear, y'' + y'/x + exp(y) = 0, y'(0) = 0, y(1.5) = delta";
  ex.spec.alpha1 = 0.0;
  ex.spec.alpha2 = 1.0;
  ex.spec.beta = 1.0;
  ex.spec.gamma = 0.0;
  ex.spec.delta = 2.0 * std::log((4.0 - 2.0 * std::sqrt(2.0)) / (7.75 - 4.5 * std::sqrt(2.0)));
  ex.spec.b = 1.5;
  ex.spec.term = NonlinearTerm{[](double, double y) { return std::exp(y); },
                               [](double, double y) { return std::exp(y); }};
  ex.exact = [](double x) { return 2.0 * std::log((c + 1.0) / (c * x * x + 1.0)); };
  ex.exact_d1 = [](double x) { return -4.0 * c * x / (c * x * x + 1.0); };
  ex.exact_d2 = [](double x) {
    const double d = c * x * x + 1.0;
    return -4.0 * c * (1.0 - c * x * x) / (d * d);
  };
  ex.lattice_points = 6;
  ex.table_points = {0, 0.3, 0.6, 0.9, 1.2};
  ex.quoted_alpha = 0.9;
  ex.published_settings = {{5, 0.9}, {10, 0.5}, {15, -0.1}, {20, 2.0}};
  ex.references = {
      {"Table 6", 5, 0.9, RE, 0.0, 2.9203e-5},   {"Table 6", 5, 0.9, RE, 0.3, 5.3820e-5},
      {"Table 6", 5, 0.9, RE, 0.6, 9.1514e-5},   {"Table 6", 5, 0.9, RE, 0.9, 7.3363e-5},
      {"Table 6", 5, 0.9, RE, 1.2, 5.2870e-5},   {"Table 6", 5, 0.9, AEB, 1.5, 4.996e-16},
      {"Table 7", 5, 0.9, MAE, 0.0, 1.8012e-5},  {"Table 7", 10, 0.5, MAE, 0.0, 1.3886e-9},
      {"Table 7", 15, -0.1, MAE, 0.0, 1.1013e-13}, {"Table 7", 20, 2.0, MAE, 0.0, 5.8287e-15},
  };
  return ex;
}

ExampleCase example5() {
  ExampleCase ex;
  ex.id = 5;
  ex.title = "nonlinear, y'' + 2y'/x + sin(y) - cos(x) + 2/x = 0, y'(0) = -1, y'(1) = -1";
  ex.spec.alpha1 = -1.0;
  ex.spec.alpha2 = 2.0;
  ex.spec.beta = 0.0;
  ex.spec.gamma = 1.0;
  ex.spec.delta = -1.0;
  ex.spec.b = 1.0;
  ex.spec.term = NonlinearTerm{[](double x, double y) { return std::sin(y) - std::cos(x) + 2.0 / x; },
                               [](double, double y) { return std::cos(y); }};
  ex.exact = [](double x) { return std::numbers::pi / 2.0 - x; };
  ex.exact_d1 = [](double) { return -1.0; };
  ex.exact_d2 = [](double) { return 0.0; };
  ex.lattice_points = 11;
  ex.table_points = {0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  ex.quoted_alpha = 0.9;
  ex.published_settings = {{7, 0.9}};
  ex.references = {
      {"Table 8", 7, 0.9, RE, 0.0, 2.8272e-16}, {"Table 8", 7, 0.9, RE, 0.1, 1.6607e-15},
      {"Table 8", 7, 0.9, RE, 0.2, 2.0410e-14}, {"Table 8", 7, 0.9, RE, 0.3, 5.2419e-15},
      {"Table 8", 7, 0.9, RE, 0.4, 1.2707e-14}, {"Table 8", 7, 0.9, RE, 0.5, 4.1473e-15},
      {"Table 8", 7, 0.9, RE, 0.6, 1.1436e-15}, {"Table 8", 7, 0.9, RE, 0.7, 2.8049e-15},
      {"Table 8", 7, 0.9, RE, 0.8, 5.0413e-15}, {"Table 8", 7, 0.9, RE, 0.9, 3.3102e-15},
      {"Table 8", 7, 0.9, AEB, 1.0, 4.4409e-16},
  };
  return ex;
}

std::vector<ExampleCase> build_registry() {
  std::vector<ExampleCase> all = {example1(), example2(), example3(), example4(), example5()};
  for (const ExampleCase& ex : all) {
    const SelfCheck check = self_check(ex);
    if (!check.passed()) {
      std::ostringstream os;
      os << "example " << ex.id << " failed its self-check (ODE residual " << check.ode_residual << ", y'(0) defect "
         << check.neumann_defect << ", boundary defect " << check.robin_defect << ")";
      throw std::logic_error(os.str());
    }
  }
  return all;
}

}  // namespace

const std::vector<ExampleCase>& examples() {
  static const std::vector<ExampleCase> registry = build_registry();
  return registry;
}

const ExampleCase& example(int id) {
  const auto& all = examples();
  const auto it = std::find_if(all.begin(), all.end(), [id](const ExampleCase& ex) { return ex.id == id; });
  if (it == all.end()) {
    std::ostringstream os;
    os << "unknown example id " << id << " (expected 1.." << all.size() << ")";
    throw std::out_of_range(os.str());
  }
  return *it;
}

const std::vector<CompetitorValue>& competitor_values() {
  static const std::vector<CompetitorValue> values = {
      {"Table 1", "B-spline, n=20", 0.0, 9.8160e-5},   {"Table 1", "B-spline, n=20", 0.05, 9.8756e-5},
      {"Table 1", "B-spline, n=20", 0.1, 1.0122e-4},   {"Table 1", "B-spline, n=20", 0.2, 1.0231e-4},
      {"Table 1", "B-spline, n=20", 0.3, 1.0119e-4},   {"Table 1", "B-spline, n=20", 0.4, 1.0425e-4},
      {"Table 1", "B-spline, n=20", 0.5, 1.0616e-4},   {"Table 1", "B-spline, n=20", 0.6, 1.0911e-4},
      {"Table 1", "B-spline, n=20", 0.7, 1.0925e-4},   {"Table 1", "B-spline, n=20", 0.8, 1.1398e-4},
      {"Table 1", "B-spline, n=20", 0.9, 1.1117e-4},   {"Table 1", "B-spline, n=20", 1.0, 0.0},
      {"Table 2", "Bessel", 0.0, 5.9957e-6},           {"Table 2", "Bessel", 0.2, 6.0946e-6},
      {"Table 2", "Bessel", 0.4, 6.8724e-6},           {"Table 2", "Bessel", 0.6, 8.8719e-6},
      {"Table 2", "Bessel", 0.8, 1.5473e-5},           {"Table 2", "Bessel", 1.0, 1.6198e-16},
      {"Table 3", "cubic spline, n=50", 0.0, 2.2341e-6}, {"Table 3", "cubic spline, n=50", 0.1, 2.1616e-6},
      {"Table 3", "cubic spline, n=50", 0.2, 1.9619e-6}, {"Table 3", "cubic spline, n=50", 0.3, 1.6583e-6},
      {"Table 3", "cubic spline, n=50", 0.4, 1.2894e-6}, {"Table 3", "cubic spline, n=50", 0.5, 9.0037e-7},
      {"Table 3", "cubic spline, n=50", 0.6, 5.3675e-7}, {"Table 3", "cubic spline, n=50", 0.7, 2.3891e-7},
      {"Table 3", "cubic spline, n=50", 0.8, 3.8253e-8}, {"Table 3", "cubic spline, n=50", 0.9, 4.4620e-8},
      {"Table 3", "cubic spline, n=50", 1.0, 1.3323e-15},
      {"Table 4", "series", 3, 1.1100e-3},             {"Table 4", "series", 6, 5.5622e-6},
      {"Table 4", "series", 8, 5.2440e-8},
      {"Table 5", "cubic spline, n=20", 0.025, kNaN},  {"Table 5", "cubic spline, n=20", 0.05, 8.9610e-5},
      {"Table 5", "cubic spline, n=20", 0.075, kNaN},  {"Table 5", "cubic spline, n=20", 0.1, 8.9087e-5},
      {"Table 5", "cubic spline, n=20", 0.2, 8.6627e-5}, {"Table 5", "cubic spline, n=20", 0.3, 8.2151e-5},
      {"Table 5", "cubic spline, n=20", 0.4, 7.6256e-5}, {"Table 5", "cubic spline, n=20", 0.5, 6.8275e-5},
      {"Table 5", "cubic spline, n=20", 0.6, 5.8753e-5}, {"Table 5", "cubic spline, n=20", 0.7, 4.7165e-5},
      {"Table 5", "cubic spline, n=20", 0.8, 3.3711e-5}, {"Table 5", "cubic spline, n=20", 0.9, 1.7861e-5},
      {"Table 5", "cubic spline, n=20", 1.0, 0.0},
      {"Table 7", "decomposition", 5, 2.37e-5},        {"Table 7", "decomposition", 10, 6.18e-6},
      {"Table 7", "decomposition", 15, 3.03e-6},       {"Table 7", "decomposition", 20, 1.56e-6},
  };
  return values;
}

SelfCheck self_check(const ExampleCase& ex) {
  SelfCheck out;
  const ProblemSpec& s = ex.spec;
  for (int k = 1; k <= 100; ++k) {
    const double x = s.b * k / 100.0;
    const double r = ex.exact_d2(x) + s.alpha2 / x * ex.exact_d1(x) + s.source(x, ex.exact(x));
    out.ode_residual = std::max(out.ode_residual, std::abs(r));
  }
  out.neumann_defect = std::abs(ex.exact_d1(0.0) - s.alpha1);
  out.robin_defect = std::abs(s.beta * ex.exact(s.b) + s.gamma * ex.exact_d1(s.b) - s.delta);
  return out;
}

std::vector<double> uniform_lattice(double b, int points) {
  if (points < 2) throw std::invalid_argument("a lattice needs at least 2 points");
  std::vector<double> x(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) x[static_cast<std::size_t>(i)] = b * i / (points - 1);
  return x;
}

}  // namespace sgipsm
