#pragma once

#include <Eigen/Sparse>

#include "ptp/dense.hpp"
#include "ptp/diagram.hpp"

namespace ptp {

using SpMat = Eigen::SparseMatrix<double>;

// d^n with an overflow guard; throws ValidationError if a positive cap is exceeded
long long dense_dim_checked(int d, int n, long long cap = 0);

// digits of idx in base d, most significant first, values 0..d-1
std::vector<int> multi_index(long long idx, int d, int n);
long long flat_index(const std::vector<int>& digits, int d);

// matrix of the diagram on (C^d)^{p+q}: a vertical edge top_j to bot_i forces
// output slot j to equal input slot i, row edges force equal pairs, and each
// top row edge leaves one free summation value
SpMat psi_sparse(const BrauerDiagram& a, int d);

Mat psi_dense(const BrauerDiagram& a, int d, long long cap_rows = 1000);
Mat psi_dense(const DiagramCombo& x, int d, long long cap_rows = 1000);

}  // namespace ptp
