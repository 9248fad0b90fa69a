#pragma once

#include <optional>
#include <string>

#include "sgipsm/expression.hpp"
#include "sgipsm/problem.hpp"

namespace sgipsm {

/// A user-defined problem read from a config file.
///
///   [problem]
///   kind   = nonlinear          # or linear
///   alpha1 = 0
///   alpha2 = 2
///   beta   = 1
///   gamma  = 0
///   delta  = sqrt(3)/2          # numeric values may be constant expressions
///   b      = 1
///   f      = y^5                # nonlinear: f(x, y); linear: p(x) and g(x)
///   exact  = 1/sqrt(1 + x^2/3)  # optional
///
///   [discretization]
///   n     = 8
///   alpha = 0.8
///
///   [report]
///   eval_points = 11            # optional, default 11
///
/// Keys may also appear before any section header. '#' and ';' start comments.
struct ProblemConfig {
  ProblemSpec spec;
  int n = 0;
  double alpha = 0.0;
  int eval_points = 11;
  std::optional<Expression> exact;
};

/// Throws ParseError with the offending line and column.
ProblemConfig parse_config(const std::string& text);

/// Reads and parses a file; throws std::runtime_error if it cannot be opened.
ProblemConfig load_config(const std::string& path);

}  // namespace sgipsm
