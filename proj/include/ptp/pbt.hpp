#pragma once

#include <map>
#include <vector>

#include "ptp/dense.hpp"
#include "ptp/irreps.hpp"
#include "ptp/surd.hpp"

namespace ptp {

// Pretty-good measurement for teleportation over p ports of local dimension d:
// the sender holds the ports plus one input register, so everything lives in
// the walled tower with p raising steps and one lowering step. The measurement
// is built block by block in the path basis and then dilated to a projective
// measurement over paths whose vertices may carry one extra row of length one.

// diagonal of the unnormalized measurement state on every path of the tower;
// exactly zero on paths into leaves with a lowered row
std::map<PathSeq, Rat> rho_spectrum(int p, int d);

struct PbtBlock {
  Staircase leaf;                // length-d staircase, all entries >= 0
  std::vector<PathSeq> paths;    // tower path basis of the leaf
  std::vector<PathSeq> dilated;  // extended paths, vertices padded to d+1 entries
  std::vector<int> embed;        // dilated position of each original path
  std::vector<SurdMat> gens;     // adjacent swaps 1..p-1 on the dilated basis
  std::vector<ExactMat> povm;    // E_0..E_p on the original path basis
  std::vector<ExactMat> pvm;     // P_0..P_p on the dilated path basis

  // cut a dilated-basis matrix down to the span of the original paths
  ExactMat compress(const ExactMat& x) const;
};

struct PbtMeasurement {
  int p = 0, d = 0;
  std::vector<PbtBlock> blocks;  // leaves with no lowered row, canonical order
  std::vector<Staircase> silent; // remaining leaves: E_0 acts there as identity
};

PbtMeasurement build_povm(int p, int d);         // fills the povm part only
PbtMeasurement build_dilated_pvm(int p, int d);  // povm plus the dilated pvm

// Orthogonal matrix whose first column lists sqrt(count(shape+cell)/(p*count(shape)))
// over the cells addable to a shape with p-1 boxes, one extra row allowed,
// rows ordered top to bottom; the rest is a Householder completion, so only
// the first column is contractual.
struct WRotation {
  Partition shape;
  std::vector<Partition> grown;  // shape with one cell added, aligned with rows
  Mat matrix;
};
WRotation w_rotation(const Partition& shape, int p, int d);

// dense measurement operators E_0..E_p on the port+input space, assembled by
// conjugating the path-basis blocks through the transform
std::vector<Mat> povm_dense(const PbtMeasurement& m, long long cap = 200000);

struct PbtOutcome {
  std::vector<double> probabilities;  // outcomes 0..p
  std::vector<double> fidelities;     // port-k overlap with the input, slot 0 unused
  std::vector<Mat> conditional;       // receiver's port-k state, slot 0 empty
  int sampled = 0;                    // one outcome drawn from the distribution
};

// run the protocol on p maximally entangled pairs and a pure input state,
// measuring all of the sender's registers with the dense measurement
PbtOutcome simulate_pbt(int p, int d, const Vec& input_state, unsigned long long seed);

}  // namespace ptp
