#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sgipsm/problem.hpp"

namespace sgipsm {

enum class Quantity { RelativeError, AbsoluteErrorAtB, MeanAbsoluteError };

/// A published error value for one (n, alpha) setting. x is the abscissa for
/// relative errors and unused otherwise.
struct ReferenceValue {
  const char* table;
  int n;
  double alpha;
  Quantity quantity;
  double x;
  double value;
};

/// Published numbers of competing methods, kept for side-by-side output only.
/// key is the abscissa or n; value is NaN where the source has no entry.
struct CompetitorValue {
  const char* table;
  const char* method;
  double key;
  double value;
};

struct ExampleCase {
  int id = 0;
  std::string title;
  ProblemSpec spec;
  ScalarFn exact;
  ScalarFn exact_d1;
  ScalarFn exact_d2;
  int lattice_points = 11;             // uniform evaluation lattice on [0, b]
  std::vector<double> table_points;    // abscissas of the published per-point table
  double quoted_alpha = 0.0;           // alpha used for convergence studies
  std::vector<std::pair<int, double>> published_settings;
  std::vector<ReferenceValue> references;
};

/// The five registered examples, ids 1..5. Each exact solution is verified
/// against the ODE and boundary data the first time the registry is built;
/// a failure throws std::logic_error.
const std::vector<ExampleCase>& examples();

/// Throws std::out_of_range for unknown ids.
const ExampleCase& example(int id);

const std::vector<CompetitorValue>& competitor_values();

struct SelfCheck {
  double ode_residual = 0.0;   // max |y'' + (alpha2/x) y' + f(x, y)| at 100 points in (0, b]
  double neumann_defect = 0.0; // |y'(0) - alpha1|
  double robin_defect = 0.0;   // |beta y(b) + gamma y'(b) - delta|
  [[nodiscard]] bool passed() const noexcept {
    return ode_residual <= 1e-10 && neumann_defect <= 1e-12 && robin_defect <= 1e-12;
  }
};

SelfCheck self_check(const ExampleCase& ex);

/// Uniform lattice of `points` abscissas on [0, b], endpoints exact.
std::vector<double> uniform_lattice(double b, int points);

}  // namespace sgipsm
