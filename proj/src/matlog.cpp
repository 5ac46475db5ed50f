#include "holo/matlog.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

namespace holo {

Mat matrix_exp(const Mat& A) { return A.exp(); }

Mat matrix_log(const Mat& M) {
  if (M.rows() != M.cols() || M.rows() == 0) {
    throw LogFailure("matrix_log: matrix must be square and non-empty");
  }
  const Eigen::EigenSolver<Mat> es(M);
  if (es.info() != Eigen::Success) {
    throw LogFailure("matrix_log: eigendecomposition failed");
  }
  const auto ev = es.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    const std::complex<double> z = ev[i];
    if (z.real() <= 0.0 && std::abs(z.imag()) < 1e-14 * std::max(1.0, std::abs(z.real()))) {
      std::ostringstream os;
      os << "matrix_log: eigenvalue " << z.real() << " on the closed negative real axis";
      throw LogFailure(os.str());
    }
  }
  const Mat L = M.log();
  if (!L.allFinite()) {
    throw LogFailure("matrix_log: non-finite logarithm");
  }
  const double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
  const double resid = (L.exp() - M).cwiseAbs().maxCoeff();
  if (!(resid <= 1e-9 * scale)) {
    std::ostringstream os;
    os << "matrix_log: round-trip residual " << resid << " exceeds tolerance " << 1e-9 * scale;
    throw LogFailure(os.str());
  }
  return L;
}

}  // namespace holo
