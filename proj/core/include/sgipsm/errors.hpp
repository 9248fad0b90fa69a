#pragma once

#include <stdexcept>
#include <string>

namespace sgipsm {

/// Failure of a discrete solve. Carries the last iterate's diagnostics so a
/// caller can report them.
class SolveError : public std::runtime_error {
public:
  enum class Kind { NonConvergence, SingularMatrix };

  SolveError(Kind kind, const std::string& what, int iterations = 0, double residual_norm = 0.0)
      : std::runtime_error(what), kind_(kind), iterations_(iterations), residual_norm_(residual_norm) {}

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] int iterations() const noexcept { return iterations_; }
  [[nodiscard]] double residual_norm() const noexcept { return residual_norm_; }

private:
  Kind kind_;
  int iterations_;
  double residual_norm_;
};

}  // namespace sgipsm
