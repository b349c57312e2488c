#include "ptp/dense.hpp"

namespace ptp {

Mat to_dense(const SurdMat& m) {
  Mat r(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r(i, j) = m.at(i, j).value();
  return r;
}

double max_abs_diff(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ComputeError("matrix shape mismatch in comparison");
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

template <typename M>
static M kron_impl(const M& a, const M& b) {
  M r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return r;
}

Mat kron(const Mat& a, const Mat& b) { return kron_impl(a, b); }
CMat kron(const CMat& a, const CMat& b) { return kron_impl(a, b); }

}  // namespace ptp
