#include "sgipsm/linalg.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "sgipsm/errors.hpp"

namespace sgipsm {

namespace {

void require_square(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    std::ostringstream os;
    os << "expected a nonempty square matrix, got " << a.rows() << "x" << a.cols();
    throw std::invalid_argument(os.str());
  }
}

void require_nonsingular(const Eigen::PartialPivLU<Eigen::MatrixXd>& lu) {
  const Eigen::VectorXd pivots = lu.matrixLU().diagonal().cwiseAbs();
  const double smallest = pivots.minCoeff();
  if (!(smallest > 0.0) || !std::isfinite(pivots.maxCoeff()) ||
      lu.rcond() < std::numeric_limits<double>::epsilon()) {
    std::ostringstream os;
    os << "matrix is singular to working precision (smallest pivot " << smallest << ", rcond estimate "
       << lu.rcond() << ")";
    throw SolveError(SolveError::Kind::SingularMatrix, os.str());
  }
}

}  // namespace

double inf_norm(const Eigen::MatrixXd& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().rowwise().sum().maxCoeff();
}

double condition_number_inf(const Eigen::MatrixXd& a) {
  require_square(a);
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  require_nonsingular(lu);
  return inf_norm(a) * inf_norm(lu.inverse());
}

DenseSolution solve_dense(const Eigen::MatrixXd& a, const Eigen::VectorXd& rhs, bool with_condition) {
  require_square(a);
  if (rhs.size() != a.rows()) throw std::invalid_argument("right-hand side length does not match the matrix");
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  require_nonsingular(lu);
  DenseSolution out;
  out.x = lu.solve(rhs);
  if (!out.x.allFinite()) throw SolveError(SolveError::Kind::SingularMatrix, "dense solve produced non-finite values");
  if (with_condition) out.kappa_inf = inf_norm(a) * inf_norm(lu.inverse());
  return out;
}

}  // namespace sgipsm
