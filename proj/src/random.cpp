#include "ptp/random.hpp"

#include <Eigen/QR>

namespace ptp {

CMat haar_unitary(int d, std::mt19937_64& gen) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMat g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = std::complex<double>(gauss(gen), gauss(gen));
  Eigen::HouseholderQR<CMat> qr(g);
  CMat q = qr.householderQ();
  const CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    const std::complex<double> rjj = r(j, j);
    const double mag = std::abs(rjj);
    q.col(j) *= mag > 0 ? rjj / mag : 1.0;
  }
  return q;
}

CMat mixed_tensor_power(const CMat& u, int p, int q) {
  CMat acc = CMat::Identity(1, 1);
  for (int i = 0; i < p; ++i) acc = kron(acc, u);
  const CMat ubar = u.conjugate();
  for (int i = 0; i < q; ++i) acc = kron(acc, ubar);
  return acc;
}

}  // namespace ptp
