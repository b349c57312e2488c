#pragma once

#include <Eigen/Dense>

#include "ptp/surd.hpp"

namespace ptp {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

Mat to_dense(const SurdMat& m);
double max_abs_diff(const Mat& a, const Mat& b);
Mat kron(const Mat& a, const Mat& b);
CMat kron(const CMat& a, const CMat& b);

}  // namespace ptp
