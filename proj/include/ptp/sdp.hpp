#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ptp/diagram.hpp"
#include "ptp/irreps.hpp"
#include "ptp/units.hpp"

namespace ptp {

// coefficient key: two paths into a common leaf, compared lexicographically
struct UnitKey {
  PathSeq s, t;
  friend auto operator<=>(const UnitKey&, const UnitKey&) = default;
};

// linear combination of matrix units, X = sum x_{st} over unit keys (s,t);
// commutes with every local unitary acting as U on the first p factors and
// as conjugate(U) on the last q
struct EquivariantMatrix {
  int p = 0, q = 0, d = 0;
  bool hermitian = false;  // promises x_{st} = x_{ts}
  std::map<UnitKey, double> coeffs;

  double coeff(const PathSeq& s, const PathSeq& t) const;
  void add(const PathSeq& s, const PathSeq& t, double v);
  void check_hermitian(double tol = 1e-12) const;  // throws on violation
};

// independent uniform coefficients on every unit of the tower, symmetrized
// when hermitian is requested
EquivariantMatrix random_equivariant(int p, int q, int d, unsigned long long seed,
                                     bool hermitian = true);

// dense form assembled unit by unit
Mat equivariant_dense(const EquivariantMatrix& x, const UnitBuilder& units);

// trace of X against one unit: the (t,s) coefficient times the pattern count
// of the leaf
double trace_against_unit(const EquivariantMatrix& x, const PathSeq& s, const PathSeq& t);

// entry <J|X|I> in the computational basis via weight-restricted coupling
// chains; words hold 1-based symbols and the entry vanishes unless the two
// words have equal content
double trace_against_computational(const EquivariantMatrix& x, const std::vector<int>& i_word,
                                   const std::vector<int>& j_word);

// trace of X against the image of one diagram, block by block through the
// generator decomposition
double trace_against_diagram(const EquivariantMatrix& x, const BrauerDiagram& pi,
                             const IrrepSet& irr);

// plain trace: sum of diagonal coefficients weighted by pattern counts
double trace_full(const EquivariantMatrix& x);

// left factor of a traced product, tagged by form rather than sniffed
struct TraceFactor {
  enum class Form { identity, unit, diagram } form = Form::identity;
  std::optional<MatrixUnit> unit;
  std::optional<BrauerDiagram> diagram;
};
TraceFactor identity_factor();
TraceFactor unit_factor(const MatrixUnit& u);
TraceFactor diagram_factor(const BrauerDiagram& a);

// Trace of Y X over the systems kept+1 .. p+q, returned over the kept prefix
// (1 <= kept <= p+q-1). Tracing one system multiplies a coefficient by the
// pattern-count ratio of its leaf over the shortened leaf and keeps only
// pairs whose paths agree beyond the cut; the diagram form needs the
// irrep set for its block matrices.
EquivariantMatrix partial_trace(const EquivariantMatrix& x, int kept,
                                const TraceFactor& y = TraceFactor{},
                                const IrrepSet* irr = nullptr);

enum class MatrixForm { matrix_units, computational_sparse, diagram_combo, identity };

// one computational-basis term, value * |ket><bra|, symbols 1-based
struct ComputationalEntry {
  std::vector<int> ket, bra;
  double value = 0;
};

// input-side matrix in one of the four supported encodings
struct InputMatrix {
  MatrixForm form = MatrixForm::identity;
  double scale = 1.0;                       // identity form: scale times I
  EquivariantMatrix units;                  // matrix_units form
  std::vector<ComputationalEntry> entries;  // computational_sparse form
  DiagramCombo combo;                       // diagram_combo form
};

// partial-trace equality: over the last systems, Tr(lhs X) = rhs, where rhs
// lives on the kept prefix; kept = 0 encodes a full-trace scalar constraint.
// The lhs must be in matrix-units form.
struct TraceEquality {
  InputMatrix lhs;
  int kept = 0;
  EquivariantMatrix rhs;
};

struct SdpProblem {
  int p = 0, q = 0, d = 0;
  InputMatrix objective;                                   // maximize Tr(C X)
  std::vector<std::pair<InputMatrix, double>> inequalities;  // Tr(A X) <= b
  std::vector<TraceEquality> equalities;
};

// affine functional of the unit coefficients
struct LinearFunctional {
  std::map<UnitKey, double> coeff;
  double eval(const EquivariantMatrix& x) const;
};

struct ReducedConstraint {
  LinearFunctional f;
  double bound = 0;
};

// one positive-semidefinite block of coefficients per leaf, plus affine
// functionals; total variable count is the sum of squared block sizes
struct ReducedSdp {
  int p = 0, q = 0, d = 0;
  std::vector<Staircase> leaves;             // canonical order
  std::vector<int> block_dims;               // paths per leaf
  std::vector<std::vector<PathSeq>> paths;   // per leaf, canonical order
  long long variable_count = 0;
  LinearFunctional objective;
  std::vector<ReducedConstraint> inequalities;  // f <= bound
  std::vector<ReducedConstraint> equalities;    // f == bound
};

// functional of Tr(Y X) for an input matrix in any supported form
LinearFunctional functional_of(const InputMatrix& y, const IrrepSet& irr);

ReducedSdp reduce_sdp(const SdpProblem& prob, const IrrepSet& irr);

// sparse semidefinite-program file with one block per leaf plus a diagonal
// slack block for the inequalities, and a JSON manifest naming every block
// by its leaf and path labels
void emit_reduced(const ReducedSdp& r, std::ostream& dat, std::ostream& manifest);
void emit_reduced_files(const ReducedSdp& r, const std::string& dat_path,
                        const std::string& manifest_path);

// JSON problem description; the schema is documented in the readme
SdpProblem parse_problem(const std::string& json_text);

}  // namespace ptp
