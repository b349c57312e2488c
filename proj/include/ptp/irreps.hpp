#pragma once

#include <string>

#include "ptp/bratteli.hpp"
#include "ptp/dense.hpp"
#include "ptp/diagram.hpp"
#include "ptp/radical.hpp"
#include "ptp/surd.hpp"

namespace ptp {

struct IrrepBasis {
  Staircase leaf;
  std::vector<PathSeq> paths;  // canonical order
  int dim() const { return static_cast<int>(paths.size()); }
  int index_of(const PathSeq& seq) const;  // throws if absent
};

// all irreducible representations of the algebra on (C^d)^{p+q}, one block per
// leaf, with exact generator matrices in the path basis
struct IrrepSet {
  int p = 0, q = 0, d = 0;
  Tower tower;
  std::vector<IrrepBasis> bases;           // canonical leaf order
  std::vector<std::vector<SurdMat>> gens;  // gens[leaf][i-1], i = 1..p+q-1
  int leaf_index(const Staircase& leaf) const;  // throws if absent
};

IrrepSet build_irreps(int p, int q, int d);

// coefficient attached to adding `box` to lambda: square root of
// (d + content) times the removable/addable content product ratio
Surd wall_coefficient(const Partition& lambda, const Cell& box, int d);

SurdMat irrep_generator(const IrrepBasis& basis, int i, int p, int d);

Mat irrep_word(const IrrepSet& irr, int leaf, const std::vector<int>& word);
Mat irrep_diagram(const IrrepSet& irr, int leaf, const BrauerDiagram& a);
Mat irrep_combo(const IrrepSet& irr, int leaf, const DiagramCombo& x);

RadMat irrep_word_exact(const IrrepSet& irr, int leaf, const std::vector<int>& word);
RadMat irrep_diagram_exact(const IrrepSet& irr, int leaf, const BrauerDiagram& a);
RadMat irrep_combo_exact(const IrrepSet& irr, int leaf, const DiagramCombo& x);

// diagonal of the k-th Jucys-Murphy element in the path basis
std::vector<long long> jm_spectrum(const IrrepBasis& basis, int k, int p);

struct RelationReport {
  std::string name;
  Staircase leaf;
  bool exact = false;
  double residual = 0;
  bool pass = false;
};
// checks every defining relation in every irrep; exact arithmetic where the
// single-root scalar stays closed, doubles at 1e-12 otherwise
std::vector<RelationReport> verify_relations(const IrrepSet& irr);

}  // namespace ptp
