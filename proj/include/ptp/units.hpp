#pragma once

#include <vector>

#include "ptp/irreps.hpp"
#include "ptp/psi.hpp"

namespace ptp {

// Ordered pair of paths into a common leaf. In the transformed basis the unit
// acts as |s><t| on the path register and as the identity on the pattern
// register; products compose like elementary matrices and the trace of a
// diagonal unit is the pattern count of the leaf.
struct MatrixUnit {
  Staircase leaf;
  PathSeq s, t;
};

// validates that both paths end in the same leaf
MatrixUnit matrix_unit(const PathSeq& s, const PathSeq& t);

// Dense matrix units on (C^d)^{p+q}. A diagonal unit is the joint spectral
// projection of the Jucys-Murphy images onto one step-content word, and an
// off-diagonal unit transports a projection along a generator word whose
// block entries are known exactly. Construction precomputes the transport of
// every path to a fixed base path of its leaf; afterwards the builder is
// read-only and safe to share across threads.
class UnitBuilder {
 public:
  explicit UnitBuilder(const IrrepSet& irr, long long cap = 1000);

  const IrrepSet& irreps() const { return *irr_; }
  long long dim() const { return dim_; }

  Mat unit_dense(const MatrixUnit& u) const;
  Mat unit_dense(const PathSeq& s, const PathSeq& t) const;

 private:
  const IrrepSet* irr_;
  long long dim_ = 0;
  // unit pairing each path with the first path of its leaf
  std::vector<std::vector<Mat>> to_base_;

  struct Hop {
    int parent = -1;
    int gen = 0;
    double amp = 1.0;
  };
};

// one-shot convenience over a freshly built irrep set
Mat matrix_unit_dense(const MatrixUnit& u, int p, int q, int d, long long cap = 1000);

}  // namespace ptp
