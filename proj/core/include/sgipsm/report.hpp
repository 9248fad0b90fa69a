#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sgipsm/config.hpp"
#include "sgipsm/newton.hpp"
#include "sgipsm/problem.hpp"

namespace sgipsm {

/// |y| below this makes RE meaningless; the AE is reported instead and flagged.
inline constexpr double kRelativeErrorFloor = 1e-13;

struct PointError {
  double x = 0.0;
  double y_approx = 0.0;
  std::optional<double> y_exact;
  std::optional<double> ae;
  std::optional<double> re;
  bool re_flag = false;
};

/// Outcome of one solve evaluated at a list of points. mae is the maximum
/// absolute error over the listed points; ae_b is the AE at x = b.
struct Report {
  int n = 0;
  double alpha = 0.0;
  std::vector<PointError> points;
  std::optional<double> mae;
  std::optional<double> ae_b;
  std::optional<double> kappa_inf;
  std::optional<int> newton_iters;
  std::optional<double> residual_max;
  std::string status = "ok";

  [[nodiscard]] bool ok() const noexcept { return status == "ok"; }
};

/// Builds the operators for (alpha, n, spec.b), solves, and evaluates at
/// `points`. Solver failures are caught and recorded in `status`; invalid
/// arguments and expression domain errors propagate.
Report evaluate_problem(const ProblemSpec& spec, const ScalarFn& exact, int n, double alpha,
                        const std::vector<double>& points, const NewtonOptions& options = {});

/// Registered example on its uniform lattice, or on its published table
/// abscissas followed by b when `table_points` is set.
Report run_example(int id, int n, double alpha, bool table_points = false);

/// Problem read from a config file, evaluated on eval_points uniform points.
Report solve_custom(const ProblemConfig& config);
Report solve_custom(const std::string& config_path);

/// Header, one `point` row per evaluation point, one `summary` row.
void write_report_csv(std::ostream& os, const Report& report);

/// Inverse of write_report_csv. Throws std::runtime_error on malformed input.
Report read_report_csv(std::istream& is);

struct SweepCell {
  int n = 0;
  double alpha = 0.0;
  std::optional<double> mae;
  std::optional<double> ae_b;
  std::optional<double> kappa_inf;
  std::optional<int> newton_iters;
  double runtime_ms = 0.0;
  std::string status = "ok";
};

/// One cell per (n, alpha), sorted by (n, alpha). A failing cell keeps its
/// status and the sweep continues.
std::vector<SweepCell> sweep(int id, const std::vector<int>& ns, const std::vector<double>& alphas);

/// Leaves runtime_ms empty when with_timing is false, so the output is
/// reproducible byte for byte.
void write_sweep_csv(std::ostream& os, const std::vector<SweepCell>& cells, bool with_timing = true);

/// "start:step:stop", inclusive; values are rounded to 1e-10 so that a
/// grid through zero hits 0 exactly.
std::vector<double> parse_alpha_range(const std::string& text);

/// "4,8,16"
std::vector<int> parse_int_list(const std::string& text);

struct CheckItem {
  std::string label;
  double measured = 0.0;
  double reference = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  bool pass = false;
};

/// Registry self-checks plus every stored published value. A published value
/// v > 1e-13 passes when the measurement lies in [v/10, 10 v]; smaller values
/// (machine-precision entries and structural zeros) need a measurement <= 1e-12.
std::vector<CheckItem> run_checks();

void write_check_report(std::ostream& os, const std::vector<CheckItem>& items);

}  // namespace sgipsm
