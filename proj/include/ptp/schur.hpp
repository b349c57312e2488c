#pragma once

#include <vector>

#include "ptp/bratteli.hpp"
#include "ptp/dense.hpp"
#include "ptp/gt_pattern.hpp"
#include "ptp/wigner.hpp"

namespace ptp {

// Row label of the mixed Schur transform: a path through the tower plus a
// pattern whose shape is the path's leaf staircase.
struct SchurLabel {
  PathSeq path;
  GTPattern pattern;
};

// coupling kind of cascade step k (1-based): boxes are added while k <= p
// and removed afterwards
CGKind level_kind(int k, int p);

// the unique all-zero pattern with d rows, seeding the coupling cascade
GTPattern trivial_pattern(int d);

// accumulated weight of the first k symbols; x entries are 1-based
Row weight_balance(const std::vector<int>& x, int k, int p, int d);

// coupling matrix between pattern spaces: rows GT(mu), cols GT(lambda).
// All-zero when mu is not one box away from lambda in the kind's direction.
Mat cg_matrix(CGKind kind, int x, const Staircase& lambda, const Staircase& mu);
// block of cg_matrix restricted to columns of weight col_weight and rows of
// weight col_weight plus (or minus) the x-th unit vector
Mat cg_submatrix(CGKind kind, int x, const Staircase& lambda, const Staircase& mu,
                 const Row& col_weight);

// one transform entry via the sequential matrix-product contraction with
// weight pruning; x holds 1-based symbols, one per tensor factor
double schur_entry(int p, const PathSeq& path, const GTPattern& pattern,
                   const std::vector<int>& x);

// all transform entries of one path against one symbol word: the vector is
// indexed by the patterns of the leaf whose weight matches the word, in the
// gt_patterns_of_weight order
Vec schur_chain(int p, const PathSeq& path, const std::vector<int>& x);

// all row labels in canonical order: leaf-major, then path, then pattern
std::vector<SchurLabel> schur_labels(const Tower& t);

// the last coupling layer as a dense matrix: rows are level-(p+q) labels,
// columns are labels of the one-step-shorter tower tensored with the new
// qudit (qudit index minor). Needs p+q >= 2.
Mat cg_layer(int p, int q, int d);

// Dense transform with schur_labels rows and computational-basis columns
// (symbol of factor 1 most significant). build_usch pushes each basis column
// through the coupling cascade; build_usch_mps evaluates rows independently,
// in parallel when asked, and the two are compared entrywise in the tests.
Mat build_usch(int p, int q, int d, long long cap = 1000);
Mat build_usch_mps(int p, int q, int d, bool parallel = true, long long cap = 1000);

// per-level pattern-space sizes |GT(T^k, d)| of the contraction
std::vector<long long> bond_dimensions(const PathSeq& path, int d);

}  // namespace ptp
