#include "sgipsm/solver.hpp"

#include <cassert>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sgipsm/errors.hpp"
#include "sgipsm/linalg.hpp"

namespace sgipsm {

namespace {

void check_compatible(const ProblemSpec& spec, const IntegrationOperators& ops) {
  spec.validate();
  if (std::abs(ops.b - spec.b) > 1e-14 * spec.b) {
    std::ostringstream os;
    os << "operators were built for b=" << ops.b << " but the problem has b=" << spec.b;
    throw std::invalid_argument(os.str());
  }
}

// alpha2/x at the nodes; no shifted node is 0.
Eigen::VectorXd singular_weights(const ProblemSpec& spec, const IntegrationOperators& ops) {
  const Eigen::VectorXd& x = ops.shifted_nodeset.nodes;
  assert((x.array() > 0.0).all());
  return spec.alpha2 * x.array().inverse();
}

Eigen::VectorXd sample(const ScalarFn& fn, const Eigen::VectorXd& x) {
  Eigen::VectorXd out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) out[i] = fn(x[i]);
  return out;
}

// Fills y', residual and y0-independent fields common to every branch.
void finish(SolverResult& r, const ProblemSpec& spec, const IntegrationOperators& ops) {
  r.nodes = ops.shifted_nodeset.nodes;
  r.yprime_nodes = (spec.alpha1 + (ops.q1_shifted * r.phi).array()).matrix();
  r.residual_nodes = compute_residual(r, spec, ops);
}

}  // namespace

CoreMatrices assemble_core(const ProblemSpec& spec, const IntegrationOperators& ops) {
  check_compatible(spec, ops);
  const Eigen::Index size = ops.size();
  const Eigen::VectorXd& x = ops.shifted_nodeset.nodes;

  CoreMatrices core;
  core.h = Eigen::MatrixXd::Identity(size, size);
  core.h.noalias() += singular_weights(spec, ops).asDiagonal() * ops.q1_shifted;

  if (spec.assumption() == Assumption::NonzeroBeta) {
    const double ratio = spec.gamma / spec.beta;
    core.xbar = ((spec.delta - spec.gamma * spec.alpha1) / spec.beta + spec.alpha1 * (x.array() - spec.b)).matrix();
    const Eigen::RowVectorXd row = ops.q2_shifted.row(0) + ratio * ops.q1_shifted.row(0);
    core.theta = ops.q2_shifted.rowwise() - row;
  }
  return core;
}

double recover_y0_a1(const Eigen::VectorXd& phi, const ProblemSpec& spec, const IntegrationOperators& ops) {
  const double yprime_b = spec.alpha1 + ops.q1_shifted.row(0).dot(phi);
  return (spec.delta - spec.gamma * yprime_b) / spec.beta - spec.alpha1 * spec.b - ops.q2_shifted.row(0).dot(phi);
}

SolverResult solve_linear_a1(const ProblemSpec& spec, const IntegrationOperators& ops) {
  if (!spec.is_linear() || spec.assumption() != Assumption::NonzeroBeta) {
    throw std::invalid_argument("solve_linear_a1 needs a linear problem with beta != 0");
  }
  const CoreMatrices core = assemble_core(spec, ops);
  const auto& term = std::get<LinearTerm>(spec.term);
  const Eigen::VectorXd& x = ops.shifted_nodeset.nodes;
  const Eigen::VectorXd p = sample(term.p, x);
  const Eigen::VectorXd g = sample(term.g, x);

  Eigen::MatrixXd a = core.h;
  a.noalias() += p.asDiagonal() * core.theta;
  const Eigen::VectorXd rhs =
      (g.array() - spec.alpha1 * spec.alpha2 / x.array() - p.array() * core.xbar.array()).matrix();
  const DenseSolution sol = solve_dense(a, rhs, true);

  SolverResult r;
  r.assumption = Assumption::NonzeroBeta;
  r.phi = sol.x;
  r.y_nodes = core.xbar + core.theta * r.phi;
  r.y0 = recover_y0_a1(r.phi, spec, ops);
  r.kappa_inf = sol.kappa_inf;
  r.converged = true;
  finish(r, spec, ops);
  return r;
}

SolverResult solve_nonlinear_a1(const ProblemSpec& spec, const IntegrationOperators& ops,
                                const NewtonOptions& options) {
  if (spec.is_linear() || spec.assumption() != Assumption::NonzeroBeta) {
    throw std::invalid_argument("solve_nonlinear_a1 needs a nonlinear problem with beta != 0");
  }
  const CoreMatrices core = assemble_core(spec, ops);
  const Eigen::VectorXd& x = ops.shifted_nodeset.nodes;
  const Eigen::Index size = x.size();
  const Eigen::VectorXd forcing = (-spec.alpha1 * spec.alpha2 / x.array()).matrix();

  auto residual = [&](const Eigen::VectorXd& phi) {
    const Eigen::VectorXd y = core.xbar + core.theta * phi;
    Eigen::VectorXd f(size);
    for (Eigen::Index i = 0; i < size; ++i) f[i] = spec.source(x[i], y[i]);
    return Eigen::VectorXd(core.h * phi + f - forcing);
  };
  auto jacobian_at_y = [&](const Eigen::VectorXd& y) {
    Eigen::VectorXd fy(size);
    for (Eigen::Index i = 0; i < size; ++i) fy[i] = spec.source_dy(x[i], y[i]);
    Eigen::MatrixXd j = core.h;
    j.noalias() += fy.asDiagonal() * core.theta;
    return j;
  };
  auto jacobian = [&](const Eigen::VectorXd& phi) { return jacobian_at_y(core.xbar + core.theta * phi); };

  // Fallback start: the system linearized about y = xbar.
  auto linearized_start = [&]() {
    const Eigen::VectorXd zero = Eigen::VectorXd::Zero(size);
    return solve_dense(jacobian_at_y(core.xbar), -residual(zero)).x;
  };

  NewtonReport report;
  try {
    report = newton_solve(residual, jacobian, Eigen::VectorXd::Zero(size), options);
  } catch (const SolveError& e) {
    if (e.kind() != SolveError::Kind::NonConvergence) throw;
    report = newton_solve(residual, jacobian, linearized_start(), options);
  }

  SolverResult r;
  r.assumption = Assumption::NonzeroBeta;
  r.phi = report.x;
  r.y_nodes = core.xbar + core.theta * r.phi;
  r.y0 = recover_y0_a1(r.phi, spec, ops);
  r.newton_iters = report.iterations;
  r.step_norms = report.step_norms;
  r.converged = report.converged;
  finish(r, spec, ops);
  return r;
}

SolverResult solve_linear_a2(const ProblemSpec& spec, const IntegrationOperators& ops) {
  if (!spec.is_linear() || spec.assumption() != Assumption::ZeroBeta) {
    throw std::invalid_argument("solve_linear_a2 needs a linear problem with beta = 0");
  }
  const CoreMatrices core = assemble_core(spec, ops);
  const auto& term = std::get<LinearTerm>(spec.term);
  const Eigen::VectorXd& x = ops.shifted_nodeset.nodes;
  const Eigen::Index size = x.size();
  const Eigen::VectorXd p = sample(term.p, x);
  const Eigen::VectorXd g = sample(term.g, x);

  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(size + 1, size + 1);
  c.topLeftCorner(size, size) = core.h;
  c.topLeftCorner(size, size).noalias() += p.asDiagonal() * ops.q2_shifted;
  c.topRightCorner(size, 1) = p;
  c.bottomLeftCorner(1, size) = ops.q1_shifted.row(0);

  Eigen::VectorXd d(size + 1);
  d.head(size) = (g.array() - spec.alpha1 * spec.alpha2 / x.array() - spec.alpha1 * p.array() * x.array()).matrix();
  d[size] = spec.delta / spec.gamma - spec.alpha1;
  const DenseSolution sol = solve_dense(c, d, true);

  SolverResult r;
  r.assumption = Assumption::ZeroBeta;
  r.phi = sol.x.head(size);
  r.y0 = sol.x[size];
  r.y_nodes = (r.y0 + spec.alpha1 * x.array()).matrix() + ops.q2_shifted * r.phi;
  r.kappa_inf = sol.kappa_inf;
  r.converged = true;
  finish(r, spec, ops);
  return r;
}

SolverResult solve_nonlinear_a2(const ProblemSpec& spec, const IntegrationOperators& ops,
                                const NewtonOptions& options) {
  if (spec.is_linear() || spec.assumption() != Assumption::ZeroBeta) {
    throw std::invalid_argument("solve_nonlinear_a2 needs a nonlinear problem with beta = 0");
  }
  const CoreMatrices core = assemble_core(spec, ops);
  const Eigen::VectorXd& x = ops.shifted_nodeset.nodes;
  const Eigen::Index size = x.size();
  const double slope_b = spec.delta / spec.gamma - spec.alpha1;

  auto recover_y = [&](const Eigen::VectorXd& psi) {
    return Eigen::VectorXd((psi[size] + spec.alpha1 * x.array()).matrix() + ops.q2_shifted * psi.head(size));
  };
  auto residual = [&](const Eigen::VectorXd& psi) {
    const Eigen::VectorXd y = recover_y(psi);
    Eigen::VectorXd out(size + 1);
    out.head(size) = core.h * psi.head(size);
    for (Eigen::Index i = 0; i < size; ++i) {
      out[i] += spec.source(x[i], y[i]) + spec.alpha1 * spec.alpha2 / x[i];
    }
    out[size] = ops.q1_shifted.row(0).dot(psi.head(size)) - slope_b;
    return out;
  };
  auto jacobian_at_y = [&](const Eigen::VectorXd& y) {
    Eigen::VectorXd fy(size);
    for (Eigen::Index i = 0; i < size; ++i) fy[i] = spec.source_dy(x[i], y[i]);
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(size + 1, size + 1);
    j.topLeftCorner(size, size) = core.h;
    j.topLeftCorner(size, size).noalias() += fy.asDiagonal() * ops.q2_shifted;
    j.topRightCorner(size, 1) = fy;
    j.bottomLeftCorner(1, size) = ops.q1_shifted.row(0);
    return j;
  };
  auto jacobian = [&](const Eigen::VectorXd& psi) { return jacobian_at_y(recover_y(psi)); };

  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(size + 1);
  NewtonReport report;
  try {
    report = newton_solve(residual, jacobian, zero, options);
  } catch (const SolveError& e) {
    if (e.kind() != SolveError::Kind::NonConvergence) throw;
    // Fallback start: the system linearized about y = alpha1 x.
    const Eigen::VectorXd start = solve_dense(jacobian_at_y(spec.alpha1 * x), -residual(zero)).x;
    report = newton_solve(residual, jacobian, start, options);
  }

  SolverResult r;
  r.assumption = Assumption::ZeroBeta;
  r.phi = report.x.head(size);
  r.y0 = report.x[size];
  r.y_nodes = recover_y(report.x);
  r.newton_iters = report.iterations;
  r.step_norms = report.step_norms;
  r.converged = report.converged;
  finish(r, spec, ops);
  return r;
}

SolverResult solve(const ProblemSpec& spec, const IntegrationOperators& ops, const NewtonOptions& options) {
  spec.validate();
  const bool a1 = spec.assumption() == Assumption::NonzeroBeta;
  if (spec.is_linear()) return a1 ? solve_linear_a1(spec, ops) : solve_linear_a2(spec, ops);
  return a1 ? solve_nonlinear_a1(spec, ops, options) : solve_nonlinear_a2(spec, ops, options);
}

Eigen::VectorXd compute_residual(const SolverResult& result, const ProblemSpec& spec,
                                 const IntegrationOperators& ops) {
  const Eigen::VectorXd& x = ops.shifted_nodeset.nodes;
  const Eigen::Index size = x.size();
  if (result.phi.size() != size || result.y_nodes.size() != size || result.yprime_nodes.size() != size) {
    throw std::invalid_argument("solver result does not match the operators");
  }
  Eigen::VectorXd r(size);
  for (Eigen::Index i = 0; i < size; ++i) {
    r[i] = result.phi[i] + spec.alpha2 / x[i] * result.yprime_nodes[i] + spec.source(x[i], result.y_nodes[i]);
  }
  return r;
}

SolutionEvaluator::SolutionEvaluator(const SolverResult& result, const IntegrationOperators& ops)
    : nodes_(ops.shifted_nodeset.nodes),
      values_(result.y_nodes),
      y0_(result.y0),
      interpolant_(ops.shifted_nodeset, result.y_nodes) {}

double SolutionEvaluator::operator()(double x) const {
  if (x == 0.0) return y0_;
  for (Eigen::Index k = 0; k < nodes_.size(); ++k) {
    if (x == nodes_[k]) return values_[k];
  }
  return interpolant_(x);
}

double evaluate_solution(const SolverResult& result, const IntegrationOperators& ops, double x) {
  return SolutionEvaluator(result, ops)(x);
}

}  // namespace sgipsm
