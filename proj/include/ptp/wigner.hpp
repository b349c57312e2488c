#pragma once

#include "ptp/gt_pattern.hpp"
#include "ptp/surd.hpp"

namespace ptp {

// Coupling kind: plus adds a box to the staircase (tensoring with the defining
// representation), minus removes one (tensoring with its dual).
enum class CGKind { plus, minus };

inline int cg_delta(CGKind k) { return k == CGKind::plus ? 1 : -1; }

// Reduced Wigner coefficient for a pair of consecutive pattern rows. upper_*
// has one entry more than lower_*. The out rows must equal the in rows except
// for a single entry changed by +1 (plus kind) or -1 (minus kind). Returns 0
// for incompatible rows, for non-interlacing row pairs, and for the
// lower-changed-only case; returns 1 when both rows are unchanged.
Surd reduced_wigner(CGKind kind, const Row& upper_in, const Row& upper_out,
                    const Row& lower_in, const Row& lower_out);

// Coupling coefficient c^{x,kind}_{N,M} of the basis vector x in [d] of the
// (dual) defining representation with the basis vector M. Zero unless every
// row of length >= x of N is a one-step bump of the same row of M and the
// rows of length < x coincide; otherwise a product of reduced Wigner
// coefficients, one per level from x up.
Surd cg_coefficient(CGKind kind, int x, const GTPattern& m, const GTPattern& n);

}  // namespace ptp
