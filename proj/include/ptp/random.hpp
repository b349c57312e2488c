#pragma once

#include <random>

#include "ptp/dense.hpp"

namespace ptp {

// Haar-distributed unitary: QR of a complex Gaussian matrix with the phases of
// the triangular factor's diagonal absorbed into Q
CMat haar_unitary(int d, std::mt19937_64& gen);

// tensor power of u on p slots followed by the entrywise conjugate on q slots
CMat mixed_tensor_power(const CMat& u, int p, int q);

}  // namespace ptp
