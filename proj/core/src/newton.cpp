#include "sgipsm/newton.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sgipsm/errors.hpp"
#include "sgipsm/linalg.hpp"

namespace sgipsm {

namespace {

double max_norm(const Eigen::VectorXd& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

NewtonReport newton_solve(const ResidualFn& residual, const JacobianFn& jacobian, Eigen::VectorXd x0,
                          const NewtonOptions& options) {
  NewtonReport report;
  report.x = std::move(x0);
  Eigen::VectorXd f = residual(report.x);
  if (!f.allFinite()) {
    throw SolveError(SolveError::Kind::NonConvergence, "residual is not finite at the initial iterate");
  }
  report.residual_norm = max_norm(f);
  if (report.residual_norm <= options.residual_tolerance) {
    report.converged = true;
    return report;
  }

  for (int it = 1; it <= options.max_iterations; ++it) {
    DenseSolution newton_step;
    try {
      newton_step = solve_dense(jacobian(report.x), -f);
    } catch (const SolveError& e) {
      std::ostringstream os;
      os << "singular Jacobian at Newton iteration " << it << ": " << e.what();
      throw SolveError(SolveError::Kind::SingularMatrix, os.str(), it - 1, report.residual_norm);
    }
    const Eigen::VectorXd& d = newton_step.x;
    const double scale = std::max(1.0, max_norm(report.x));
    const double merit = 0.5 * f.squaredNorm();

    double t = 1.0;
    bool accepted = false;
    Eigen::VectorXd trial_x, trial_f;
    for (int bt = 0; bt <= options.max_backtracks; ++bt, t *= 0.5) {
      trial_x = report.x + t * d;
      trial_f = residual(trial_x);
      if (trial_f.allFinite() && 0.5 * trial_f.squaredNorm() <= (1.0 - 2.0 * options.armijo * t) * merit) {
        accepted = true;
        break;
      }
    }

    if (!accepted) {
      if (max_norm(d) <= options.step_tolerance * scale) {
        report.converged = true;
        return report;
      }
      std::ostringstream os;
      os << "line search failed at Newton iteration " << it << " (residual " << report.residual_norm
         << ", step " << max_norm(d) << ")";
      throw SolveError(SolveError::Kind::NonConvergence, os.str(), it - 1, report.residual_norm);
    }

    const double step = t * max_norm(d);
    report.x = std::move(trial_x);
    f = std::move(trial_f);
    report.residual_norm = max_norm(f);
    report.step_norms.push_back(step);
    report.iterations = it;
    if (step <= options.step_tolerance * scale || report.residual_norm <= options.residual_tolerance) {
      report.converged = true;
      return report;
    }
  }

  std::ostringstream os;
  os << "Newton iteration did not converge within " << options.max_iterations << " iterations (residual "
     << report.residual_norm << ")";
  throw SolveError(SolveError::Kind::NonConvergence, os.str(), report.iterations, report.residual_norm);
}

}  // namespace sgipsm
