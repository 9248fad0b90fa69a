// Command-line driver: registered examples, sweeps, config-file problems,
// node dumps and the reference check.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sgipsm/config.hpp"
#include "sgipsm/csv.hpp"
#include "sgipsm/errors.hpp"
#include "sgipsm/expression.hpp"
#include "sgipsm/integration.hpp"
#include "sgipsm/registry.hpp"
#include "sgipsm/report.hpp"

namespace {

constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  return out;
}

void print_summary(const sgipsm::Report& r) {
  std::printf("n=%d alpha=%g status=%s\n", r.n, r.alpha, r.status.c_str());
  if (r.mae) std::printf("  MAE          %.4e\n", *r.mae);
  if (r.ae_b) std::printf("  AE at b      %.4e\n", *r.ae_b);
  if (r.kappa_inf) std::printf("  kappa_inf    %.4e\n", *r.kappa_inf);
  if (r.newton_iters) std::printf("  Newton iters %d\n", *r.newton_iters);
  if (r.residual_max) std::printf("  max residual %.4e\n", *r.residual_max);
}

int emit_report(const sgipsm::Report& report, const std::string& csv_path) {
  if (csv_path.empty()) {
    sgipsm::write_report_csv(std::cout, report);
  } else {
    std::ofstream out = open_output(csv_path);
    sgipsm::write_report_csv(out, report);
    print_summary(report);
  }
  if (!report.ok()) {
    std::cerr << "solve failed: " << report.status << '\n';
    return kFailure;
  }
  return 0;
}

void dump_matrices(int id, int n, double alpha, const std::string& dir) {
  const auto& ex = sgipsm::example(id);
  const auto ops = sgipsm::build_operators(sgipsm::BasisConfig(alpha, n), ex.spec.b);
  std::filesystem::create_directories(dir);
  const std::pair<const char*, const Eigen::MatrixXd*> mats[] = {
      {"q1.csv", &ops.q1}, {"q2.csv", &ops.q2}, {"q1_shifted.csv", &ops.q1_shifted}, {"q2_shifted.csv", &ops.q2_shifted}};
  for (const auto& [name, m] : mats) {
    std::ofstream out = open_output((std::filesystem::path(dir) / name).string());
    sgipsm::write_matrix_csv(out, *m);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shifted Gegenbauer integral pseudospectral solver for Lane-Emden problems"};
  app.require_subcommand(1);

  int id = 0;
  int n = 0;
  double alpha = 0.0;
  double b = 2.0;
  std::string csv_path, config_path, n_list, alpha_range, matrix_dir;
  bool table = false;
  bool no_timing = false;

  auto* example = app.add_subcommand("example", "Solve a registered example and report errors");
  example->add_option("id", id, "Example id")->required()->check(CLI::Range(1, 5));
  example->add_option("--n", n, "Truncation degree")->required()->check(CLI::PositiveNumber);
  example->add_option("--alpha", alpha, "Gegenbauer parameter (> -1/2)")->required();
  example->add_option("--csv", csv_path, "Write the report CSV here instead of stdout");
  example->add_flag("--table", table, "Evaluate at the published table abscissas instead of the lattice");
  example->add_option("--dump-matrices", matrix_dir, "Write Q1, Q2 and their shifted forms as CSV into this directory");

  auto* sweep = app.add_subcommand("sweep", "MAE and condition numbers over an (n, alpha) grid");
  sweep->add_option("id", id, "Example id")->required()->check(CLI::Range(1, 5));
  sweep->add_option("--n", n_list, "Comma-separated degrees")->default_val("4,8,16,32,64,128");
  sweep->add_option("--alpha-range", alpha_range, "start:step:stop")->default_val("-0.4:0.1:2");
  sweep->add_option("--csv", csv_path, "Write the sweep CSV here instead of stdout");
  sweep->add_flag("--no-timing", no_timing, "Leave runtime_ms empty for reproducible output");

  auto* solve = app.add_subcommand("solve", "Solve a problem described by a config file");
  solve->add_option("--config", config_path, "Config file")->required();
  solve->add_option("--csv", csv_path, "Write the report CSV here instead of stdout");

  auto* nodes = app.add_subcommand("nodes", "Print shifted nodes and Christoffel weights");
  nodes->add_option("--n", n, "Truncation degree")->required()->check(CLI::NonNegativeNumber);
  nodes->add_option("--alpha", alpha, "Gegenbauer parameter (> -1/2)")->required();
  nodes->add_option("--b", b, "Interval length")->default_val(2.0);

  auto* check = app.add_subcommand("check", "Registry self-checks and published-value comparisons");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*example) {
      const sgipsm::Report report = sgipsm::run_example(id, n, alpha, table);
      if (!matrix_dir.empty()) dump_matrices(id, n, alpha, matrix_dir);
      return emit_report(report, csv_path);
    }
    if (*sweep) {
      std::vector<int> ns;
      std::vector<double> alphas;
      try {
        ns = sgipsm::parse_int_list(n_list);
        alphas = sgipsm::parse_alpha_range(alpha_range);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const auto cells = sgipsm::sweep(id, ns, alphas);
      if (csv_path.empty()) {
        sgipsm::write_sweep_csv(std::cout, cells, !no_timing);
      } else {
        std::ofstream out = open_output(csv_path);
        sgipsm::write_sweep_csv(out, cells, !no_timing);
      }
      return 0;
    }
    if (*solve) {
      sgipsm::ProblemConfig cfg;
      try {
        cfg = sgipsm::load_config(config_path);
      } catch (const sgipsm::ParseError& e) {
        std::cerr << config_path << ":" << e.line() << ":" << e.column() << ": " << e.message() << '\n';
        return kUsage;
      }
      return emit_report(sgipsm::solve_custom(cfg), csv_path);
    }
    if (*nodes) {
      const auto standard = sgipsm::make_nodeset(sgipsm::BasisConfig(alpha, n));
      const auto shifted = sgipsm::shift_nodeset(standard, b);
      sgipsm::write_csv_row(std::cout, {"k", "x", "weight"});
      for (int k = 0; k <= n; ++k) {
        sgipsm::write_csv_row(std::cout, {std::to_string(k), sgipsm::format_g17(shifted.nodes[k]),
                                          sgipsm::format_g17(shifted.weights[k])});
      }
      return 0;
    }
    if (*check) {
      const auto items = sgipsm::run_checks();
      sgipsm::write_check_report(std::cout, items);
      std::size_t failed = 0;
      for (const auto& item : items) failed += item.pass ? 0 : 1;
      std::cout << items.size() - failed << "/" << items.size() << " checks passed\n";
      return failed == 0 ? 0 : kFailure;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const sgipsm::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return 0;
}
