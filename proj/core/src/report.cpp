#include "sgipsm/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "sgipsm/csv.hpp"
#include "sgipsm/errors.hpp"
#include "sgipsm/integration.hpp"
#include "sgipsm/registry.hpp"
#include "sgipsm/solver.hpp"

namespace sgipsm {

namespace {

const std::vector<std::string> kReportHeader = {"record", "x",   "y_exact", "y_approx",  "ae",           "re",
                                                "re_flag", "mae", "ae_b",    "kappa_inf", "newton_iters", "residual_max",
                                                "status"};

std::string opt(const std::optional<double>& v) { return v ? format_g17(*v) : std::string(); }
std::string opt(const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); }

std::optional<double> parse_opt_double(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::runtime_error("malformed number '" + s + "'");
  return v;
}

std::optional<int> parse_opt_int(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t used = 0;
  const int v = std::stoi(s, &used);
  if (used != s.size()) throw std::runtime_error("malformed integer '" + s + "'");
  return v;
}

std::string describe(const SolveError& e) {
  const char* kind = e.kind() == SolveError::Kind::NonConvergence ? "nonconvergence" : "singular";
  return std::string(kind) + ": " + e.what();
}

}  // namespace

Report evaluate_problem(const ProblemSpec& spec, const ScalarFn& exact, int n, double alpha,
                        const std::vector<double>& points, const NewtonOptions& options) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  const IntegrationOperators ops = build_operators(BasisConfig(alpha, n), spec.b);

  Report report;
  report.n = n;
  report.alpha = alpha;
  SolverResult result;
  try {
    result = solve(spec, ops, options);
  } catch (const SolveError& e) {
    report.status = csv_safe(describe(e));
    return report;
  }
  report.kappa_inf = result.kappa_inf;
  report.newton_iters = result.newton_iters;
  report.residual_max = result.residual_nodes.cwiseAbs().maxCoeff();

  const SolutionEvaluator approx(result, ops);
  double ae_max = 0.0;
  for (double x : points) {
    PointError p;
    p.x = x;
    p.y_approx = approx(x);
    if (exact) {
      const double y = exact(x);
      p.y_exact = y;
      p.ae = std::abs(p.y_approx - y);
      if (std::abs(y) < kRelativeErrorFloor) {
        p.re = p.ae;
        p.re_flag = true;
      } else {
        p.re = *p.ae / std::abs(y);
      }
      ae_max = std::max(ae_max, *p.ae);
    }
    report.points.push_back(p);
  }
  if (exact) {
    if (!points.empty()) report.mae = ae_max;
    report.ae_b = std::abs(approx(spec.b) - exact(spec.b));
  }
  return report;
}

Report run_example(int id, int n, double alpha, bool table_points) {
  const ExampleCase& ex = example(id);
  std::vector<double> points;
  if (table_points) {
    points = ex.table_points;
    points.push_back(ex.spec.b);
  } else {
    points = uniform_lattice(ex.spec.b, ex.lattice_points);
  }
  return evaluate_problem(ex.spec, ex.exact, n, alpha, points);
}

Report solve_custom(const ProblemConfig& config) {
  ScalarFn exact;
  if (config.exact) exact = [e = *config.exact](double x) { return e(x); };
  return evaluate_problem(config.spec, exact, config.n, config.alpha,
                          uniform_lattice(config.spec.b, config.eval_points));
}

Report solve_custom(const std::string& config_path) { return solve_custom(load_config(config_path)); }

void write_report_csv(std::ostream& os, const Report& report) {
  write_csv_row(os, kReportHeader);
  for (const PointError& p : report.points) {
    write_csv_row(os, {"point", format_g17(p.x), opt(p.y_exact), format_g17(p.y_approx), opt(p.ae), opt(p.re),
                       p.re ? (p.re_flag ? "1" : "0") : "", "", "", "", "", "", ""});
  }
  write_csv_row(os, {"summary", "", "", "", "", "", "", opt(report.mae), opt(report.ae_b), opt(report.kappa_inf),
                     opt(report.newton_iters), opt(report.residual_max), report.status});
}

Report read_report_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || split_csv_line(line) != kReportHeader) {
    throw std::runtime_error("report CSV has a missing or unexpected header");
  }
  Report report;
  bool summary = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = split_csv_line(line);
    if (f.size() != kReportHeader.size()) throw std::runtime_error("report CSV row has the wrong number of fields");
    if (f[0] == "point") {
      PointError p;
      p.x = *parse_opt_double(f[1]);
      p.y_exact = parse_opt_double(f[2]);
      p.y_approx = *parse_opt_double(f[3]);
      p.ae = parse_opt_double(f[4]);
      p.re = parse_opt_double(f[5]);
      p.re_flag = f[6] == "1";
      report.points.push_back(p);
    } else if (f[0] == "summary") {
      report.mae = parse_opt_double(f[7]);
      report.ae_b = parse_opt_double(f[8]);
      report.kappa_inf = parse_opt_double(f[9]);
      report.newton_iters = parse_opt_int(f[10]);
      report.residual_max = parse_opt_double(f[11]);
      report.status = f[12];
      summary = true;
    } else {
      throw std::runtime_error("unknown record type '" + f[0] + "'");
    }
  }
  if (!summary) throw std::runtime_error("report CSV has no summary row");
  return report;
}

std::vector<SweepCell> sweep(int id, const std::vector<int>& ns, const std::vector<double>& alphas) {
  const ExampleCase& ex = example(id);
  const std::vector<double> lattice = uniform_lattice(ex.spec.b, ex.lattice_points);
  std::vector<SweepCell> cells;
  for (int n : ns) {
    for (double alpha : alphas) {
      SweepCell cell;
      cell.n = n;
      cell.alpha = alpha;
      const auto start = std::chrono::steady_clock::now();
      try {
        const Report r = evaluate_problem(ex.spec, ex.exact, n, alpha, lattice);
        cell.status = r.status;
        if (r.ok()) {
          cell.mae = r.mae;
          cell.ae_b = r.ae_b;
          cell.kappa_inf = r.kappa_inf;
          cell.newton_iters = r.newton_iters;
        }
      } catch (const std::exception& e) {
        cell.status = csv_safe(std::string("error: ") + e.what());
      }
      cell.runtime_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      cells.push_back(cell);
    }
  }
  std::sort(cells.begin(), cells.end(), [](const SweepCell& a, const SweepCell& b) {
    return a.n != b.n ? a.n < b.n : a.alpha < b.alpha;
  });
  return cells;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepCell>& cells, bool with_timing) {
  write_csv_row(os, {"n", "alpha", "mae", "ae_b", "kappa_inf", "newton_iters", "runtime_ms", "status"});
  for (const SweepCell& c : cells) {
    write_csv_row(os, {std::to_string(c.n), format_g17(c.alpha), opt(c.mae), opt(c.ae_b), opt(c.kappa_inf),
                       opt(c.newton_iters), with_timing ? format_g17(c.runtime_ms) : "", c.status});
  }
}

std::vector<double> parse_alpha_range(const std::string& text) {
  double start = 0, step = 0, stop = 0;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> start >> c1 >> step >> c2 >> stop) || c1 != ':' || c2 != ':' || !(in >> std::ws).eof()) {
    throw std::invalid_argument("alpha range must look like start:step:stop, got '" + text + "'");
  }
  if (!(step > 0.0) || stop < start) throw std::invalid_argument("alpha range needs step > 0 and stop >= start");
  const long count = std::lround(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> values;
  for (long k = 0; k < count; ++k) values.push_back(std::round((start + k * step) * 1e10) / 1e10);
  return values;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const std::string& tok : split_csv_line(text)) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (tok.empty() || used != tok.size()) throw std::invalid_argument("malformed integer list '" + text + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<CheckItem> run_checks() {
  std::vector<CheckItem> items;
  for (const ExampleCase& ex : examples()) {
    const SelfCheck s = self_check(ex);
    const std::string prefix = "example " + std::to_string(ex.id) + " self-check ";
    items.push_back({prefix + "ODE residual", s.ode_residual, 0.0, 0.0, 1e-10, s.ode_residual <= 1e-10});
    items.push_back({prefix + "y'(0)", s.neumann_defect, 0.0, 0.0, 1e-12, s.neumann_defect <= 1e-12});
    items.push_back({prefix + "boundary condition", s.robin_defect, 0.0, 0.0, 1e-12, s.robin_defect <= 1e-12});

    // One solve per published (n, alpha) setting.
    std::map<std::pair<int, double>, std::vector<const ReferenceValue*>> groups;
    for (const ReferenceValue& r : ex.references) groups[{r.n, r.alpha}].push_back(&r);
    for (const auto& [setting, refs] : groups) {
      const auto [n, alpha] = setting;
      const Report lattice = run_example(ex.id, n, alpha);
      std::vector<double> xs;
      for (const ReferenceValue* r : refs) {
        if (r->quantity == Quantity::RelativeError) xs.push_back(r->x);
      }
      const Report pointwise = evaluate_problem(ex.spec, ex.exact, n, alpha, xs);
      std::size_t next_point = 0;
      for (const ReferenceValue* r : refs) {
        std::ostringstream label;
        label << r->table << " example " << ex.id << " n=" << n << " alpha=" << alpha << ' ';
        double measured = std::numeric_limits<double>::infinity();
        switch (r->quantity) {
          case Quantity::RelativeError:
            label << "RE(x=" << r->x << ")";
            if (pointwise.ok()) measured = *pointwise.points[next_point].re;
            ++next_point;
            break;
          case Quantity::AbsoluteErrorAtB:
            label << "AE(x=" << ex.spec.b << ")";
            if (lattice.ok()) measured = *lattice.ae_b;
            break;
          case Quantity::MeanAbsoluteError:
            label << "MAE";
            if (lattice.ok()) measured = *lattice.mae;
            break;
        }
        CheckItem item{label.str(), measured, r->value, 0.0, 0.0, false};
        if (r->value > 1e-13) {
          item.lower = r->value / 10.0;
          item.upper = r->value * 10.0;
        } else {
          item.upper = 1e-12;
        }
        item.pass = measured >= item.lower && measured <= item.upper;
        items.push_back(item);
      }
    }
  }
  return items;
}

void write_check_report(std::ostream& os, const std::vector<CheckItem>& items) {
  char buffer[160];
  for (const CheckItem& item : items) {
    std::snprintf(buffer, sizeof buffer, " measured=%.4e reference=%.4e accepted=[%.1e, %.1e]", item.measured,
                  item.reference, item.lower, item.upper);
    os << (item.pass ? "PASS " : "FAIL ") << item.label << buffer << '\n';
  }
}

}  // namespace sgipsm
