#include "sgipsm/problem.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sgipsm {

namespace {

struct SourceVisitor {
  double x, y;
  double operator()(const NonlinearTerm& t) const { return t.f(x, y); }
  double operator()(const LinearTerm& t) const { return t.p(x) * y - t.g(x); }
};

}  // namespace

void ProblemSpec::validate() const {
  for (double v : {alpha1, alpha2, beta, gamma, delta, b}) {
    if (!std::isfinite(v)) throw std::invalid_argument("problem data must be finite");
  }
  if (!(b > 0.0)) {
    std::ostringstream os;
    os << "domain endpoint b must be positive, got " << b;
    throw std::invalid_argument(os.str());
  }
  if (beta == 0.0 && gamma == 0.0) throw std::invalid_argument("beta and gamma must not vanish simultaneously");
  if (const auto* nl = std::get_if<NonlinearTerm>(&term)) {
    if (!nl->f) throw std::invalid_argument("nonlinear problem has no f(x, y)");
  } else {
    const auto& lin = std::get<LinearTerm>(term);
    if (!lin.p || !lin.g) throw std::invalid_argument("linear problem needs both p(x) and g(x)");
  }
}

double ProblemSpec::source(double x, double y) const { return std::visit(SourceVisitor{x, y}, term); }

double ProblemSpec::source_dy(double x, double y) const {
  if (const auto* lin = std::get_if<LinearTerm>(&term)) return lin->p(x);
  const auto& nl = std::get<NonlinearTerm>(term);
  if (nl.df_dy) return nl.df_dy(x, y);
  const double h = 1e-7 * std::max(1.0, std::abs(y));
  return (nl.f(x, y + h) - nl.f(x, y - h)) / (2.0 * h);
}

}  // namespace sgipsm
