#include <array>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "ptp/schur.hpp"
#include "ptp/sdp.hpp"
#include "ptp/units.hpp"

namespace {

using namespace ptp;

long long pattern_count_ll(const Staircase& leaf) {
  return weyl_dim(leaf).convert_to<long long>();
}

// dense matrix of one computational word pair list
Mat computational_dense(const std::vector<ComputationalEntry>& entries, int n, int d) {
  const long long dim = dense_dim_checked(d, n, 100000);
  Mat acc = Mat::Zero(dim, dim);
  for (const ComputationalEntry& e : entries) {
    std::vector<int> ket(e.ket.size()), bra(e.bra.size());
    for (size_t k = 0; k < e.ket.size(); ++k) ket[k] = e.ket[k] - 1;
    for (size_t k = 0; k < e.bra.size(); ++k) bra[k] = e.bra[k] - 1;
    acc(flat_index(ket, d), flat_index(bra, d)) += e.value;
  }
  return acc;
}

Mat input_dense(const InputMatrix& y, const UnitBuilder& units) {
  switch (y.form) {
    case MatrixForm::identity:
      return y.scale * Mat::Identity(units.dim(), units.dim());
    case MatrixForm::matrix_units:
      return equivariant_dense(y.units, units);
    case MatrixForm::computational_sparse: {
      const IrrepSet& irr = units.irreps();
      return computational_dense(y.entries, irr.p + irr.q, irr.d);
    }
    case MatrixForm::diagram_combo:
      return psi_dense(y.combo, units.irreps().d, units.dim());
  }
  throw ValidationError("unsupported form");
}

// partial trace of the trailing factors of a dense matrix; slot 1 is the most
// significant digit, so the traced slots index the minor blocks
Mat dense_partial_trace(const Mat& x, int kept, int d, int n) {
  long long keep_dim = 1, lose_dim = 1;
  for (int i = 0; i < kept; ++i) keep_dim *= d;
  for (int i = kept; i < n; ++i) lose_dim *= d;
  Mat out = Mat::Zero(keep_dim, keep_dim);
  for (long long a = 0; a < keep_dim; ++a)
    for (long long b = 0; b < keep_dim; ++b)
      for (long long c = 0; c < lose_dim; ++c) out(a, b) += x(a * lose_dim + c, b * lose_dim + c);
  return out;
}

std::vector<int> word_of(long long idx, int n, int d) {
  std::vector<int> digits = multi_index(idx, d, n);
  for (int& v : digits) ++v;
  return digits;
}

// deterministic random input matrix cycling through the four forms
InputMatrix random_input(int p, int q, int d, MatrixForm form, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  InputMatrix m;
  m.form = form;
  switch (form) {
    case MatrixForm::identity:
      m.scale = unit(rng);
      break;
    case MatrixForm::matrix_units:
      m.units = random_equivariant(p, q, d, seed, true);
      break;
    case MatrixForm::computational_sparse: {
      const int n = p + q;
      const long long dim = dense_dim_checked(d, n, 100000);
      std::uniform_int_distribution<long long> pick(0, dim - 1);
      for (int t = 0; t < 6; ++t) {
        const long long i = pick(rng), j = pick(rng);
        const double v = unit(rng);
        m.entries.push_back({word_of(i, n, d), word_of(j, n, d), v});
        if (i != j) m.entries.push_back({word_of(j, n, d), word_of(i, n, d), v});
      }
      break;
    }
    case MatrixForm::diagram_combo: {
      m.combo = DiagramCombo(p, q);
      m.combo.add(BrauerDiagram::identity(p, q), Rat(1, 2));
      for (int i = 1; i <= p + q - 1; ++i)
        m.combo.add(generator(i, p, q), Rat(static_cast<long long>(rng() % 7) - 3, 2));
      break;
    }
  }
  return m;
}

const IrrepSet& cached_irreps(int p, int q, int d) {
  static std::map<std::array<int, 3>, IrrepSet> cache;
  auto key = std::array<int, 3>{p, q, d};
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_irreps(p, q, d)).first;
  return it->second;
}

const UnitBuilder& cached_units(int p, int q, int d) {
  static std::map<std::array<int, 3>, UnitBuilder> cache;
  auto key = std::array<int, 3>{p, q, d};
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, UnitBuilder(cached_irreps(p, q, d))).first;
  return it->second;
}

}  // namespace

TEST_CASE("unit traces follow the coefficient table") {
  const IrrepSet& irr = cached_irreps(2, 1, 2);
  const IrrepBasis& basis = irr.bases[irr.leaf_index(Staircase{1, 0})];
  REQUIRE(basis.dim() >= 2);
  const PathSeq s = basis.paths[0];
  const PathSeq t = basis.paths[1];

  EquivariantMatrix x;
  x.p = 2;
  x.q = 1;
  x.d = 2;
  x.add(t, s, 1.0);  // X = E_{ts}
  CHECK(trace_against_unit(x, s, t) == doctest::Approx(pattern_count_ll(Staircase{1, 0})));
  CHECK(trace_against_unit(x, t, s) == 0.0);
  CHECK_THROWS_AS(trace_against_unit(x, s, irr.bases[0].paths[0]), ValidationError);

  // dense oracle over every pair, two shapes
  for (auto [p, q, d] : std::vector<std::array<int, 3>>{{1, 1, 2}, {2, 1, 2}}) {
    const IrrepSet& set = cached_irreps(p, q, d);
    const UnitBuilder& units = cached_units(p, q, d);
    const EquivariantMatrix y = random_equivariant(p, q, d, 0xA11CE + p * 10 + q, true);
    const Mat yd = equivariant_dense(y, units);
    for (const IrrepBasis& b : set.bases)
      for (const PathSeq& a : b.paths)
        for (const PathSeq& c : b.paths) {
          const double direct = (units.unit_dense(a, c) * yd).trace();
          CHECK(trace_against_unit(y, a, c) == doctest::Approx(direct).epsilon(1e-10));
        }
  }
}

TEST_CASE("computational entries contract through the coupling chains") {
  // mismatched content vanishes
  EquivariantMatrix x = random_equivariant(1, 1, 2, 7, true);
  CHECK(trace_against_computational(x, {1, 1}, {1, 2}) == 0.0);
  CHECK_THROWS_AS(trace_against_computational(x, {1}, {1, 1}), ValidationError);
  CHECK_THROWS_AS(trace_against_computational(x, {1, 3}, {1, 1}), ValidationError);

  // the identity combination has unit diagonal in the computational basis
  for (auto [p, q, d] : std::vector<std::array<int, 3>>{
           {1, 1, 2}, {2, 1, 2}, {1, 2, 3}, {2, 0, 3}, {0, 2, 2}}) {
    const IrrepSet& irr = cached_irreps(p, q, d);
    EquivariantMatrix id;
    id.p = p;
    id.q = q;
    id.d = d;
    id.hermitian = true;
    for (const IrrepBasis& b : irr.bases)
      for (const PathSeq& t : b.paths) id.add(t, t, 1.0);
    const long long dim = dense_dim_checked(d, p + q, 1000);
    for (long long i = 0; i < dim; ++i) {
      const std::vector<int> w = word_of(i, p + q, d);
      CHECK(trace_against_computational(id, w, w) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }

  // random coefficients against the dense entry, exhaustively over words
  for (auto [p, q, d] : std::vector<std::array<int, 3>>{
           {1, 1, 2}, {2, 1, 2}, {1, 2, 2}, {2, 2, 2}, {1, 1, 3}, {2, 1, 3}}) {
    CAPTURE(p);
    CAPTURE(q);
    CAPTURE(d);
    const UnitBuilder& units = cached_units(p, q, d);
    const EquivariantMatrix y = random_equivariant(p, q, d, 0xBEA7 + p * 100 + q * 10 + d, false);
    const Mat yd = equivariant_dense(y, units);
    const long long dim = units.dim();
    std::mt19937_64 rng(11 + p + q + d);
    std::uniform_int_distribution<long long> pick(0, dim - 1);
    const long long pairs = dim * dim <= 256 ? dim * dim : 300;
    for (long long k = 0; k < pairs; ++k) {
      const long long i = dim * dim <= 256 ? k / dim : pick(rng);
      const long long j = dim * dim <= 256 ? k % dim : pick(rng);
      const double direct = yd(j, i);  // contraction against |i><j| reads the (j,i) entry
      const double via = trace_against_computational(y, word_of(i, p + q, d), word_of(j, p + q, d));
      CHECK(via == doctest::Approx(direct).epsilon(1e-10));
    }
  }
}

TEST_CASE("diagram traces agree with block matrices") {
  // identity diagram reproduces the plain trace
  for (auto [p, q, d] : std::vector<std::array<int, 3>>{{1, 1, 2}, {2, 1, 2}, {1, 2, 3}}) {
    const IrrepSet& irr = cached_irreps(p, q, d);
    const EquivariantMatrix x = random_equivariant(p, q, d, 21, true);
    const double via = trace_against_diagram(x, BrauerDiagram::identity(p, q), irr);
    CHECK(via == doctest::Approx(trace_full(x)).epsilon(1e-12));
  }

  // the wall contraction against a diagonal unit reads off the block entry
  {
    const IrrepSet& irr = cached_irreps(2, 1, 2);
    for (const IrrepBasis& basis : irr.bases)
      for (const PathSeq& t : basis.paths) {
        EquivariantMatrix x;
        x.p = 2;
        x.q = 1;
        x.d = 2;
        x.add(t, t, 1.0);
        const double via = trace_against_diagram(x, generator(2, 2, 1), irr);
        const int l = irr.leaf_index(basis.leaf);
        const int idx = basis.index_of(t);
        const double entry = irr.gens[l][1].at(idx, idx).value();
        const double m = static_cast<double>(pattern_count_ll(basis.leaf));
        CHECK(via == doctest::Approx(entry * m).epsilon(1e-12));
      }
  }

  // dense oracle over every diagram of two shapes
  for (auto [p, q, d] : std::vector<std::array<int, 3>>{{1, 1, 2}, {2, 1, 2}}) {
    CAPTURE(p);
    CAPTURE(q);
    const IrrepSet& irr = cached_irreps(p, q, d);
    const UnitBuilder& units = cached_units(p, q, d);
    const EquivariantMatrix x = random_equivariant(p, q, d, 0xD1A6 + p, false);
    const Mat xd = equivariant_dense(x, units);
    for (const BrauerDiagram& a : all_diagrams(p, q)) {
      const double direct = (psi_dense(a, d) * xd).trace();
      CHECK(trace_against_diagram(x, a, irr) == doctest::Approx(direct).epsilon(1e-10));
    }
  }
}

TEST_CASE("partial traces follow the truncation rule") {
  const IrrepSet& irr = cached_irreps(2, 1, 2);

  // single diagonal unit: one surviving coefficient with the count ratio
  {
    const IrrepBasis& basis = irr.bases[irr.leaf_index(Staircase{1, 0})];
    const PathSeq s = basis.paths[0];
    EquivariantMatrix x;
    x.p = 2;
    x.q = 1;
    x.d = 2;
    x.add(s, s, 1.0);
    const EquivariantMatrix cut = partial_trace(x, 2);
    REQUIRE(cut.coeffs.size() == 1);
    const PathSeq bar(s.begin(), s.begin() + 3);
    const double ratio = static_cast<double>(pattern_count_ll(Staircase{1, 0})) /
                         static_cast<double>(pattern_count_ll(s[2]));
    CHECK(cut.coeff(bar, bar) == doctest::Approx(ratio).epsilon(1e-14));

    // paths through different truncated vertices leave nothing behind
    for (const PathSeq& t : basis.paths)
      if (t[2] != s[2]) {
        EquivariantMatrix off;
        off.p = 2;
        off.q = 1;
        off.d = 2;
        off.add(s, t, 1.0);
        CHECK(partial_trace(off, 2).coeffs.empty());
      }
  }

  // dense oracle for the identity factor, both wall orders and dimensions
  for (auto [p, q, d] : std::vector<std::array<int, 3>>{{2, 1, 2}, {1, 2, 2}, {2, 1, 3}, {1, 2, 3}}) {
    CAPTURE(p);
    CAPTURE(q);
    CAPTURE(d);
    const UnitBuilder& units = cached_units(p, q, d);
    const EquivariantMatrix x = random_equivariant(p, q, d, 0xCAFE + 10 * p + d, true);
    const Mat xd = equivariant_dense(x, units);
    for (int kept = 1; kept <= p + q - 1; ++kept) {
      const EquivariantMatrix cut = partial_trace(x, kept);
      const int kp = std::min(p, kept);
      const UnitBuilder& small = cached_units(kp, kept - kp, d);
      CHECK(max_abs_diff(equivariant_dense(cut, small),
                         dense_partial_trace(xd, kept, d, p + q)) < 1e-10);
      CHECK(trace_full(cut) == doctest::Approx(trace_full(x)).epsilon(1e-12));
    }
  }

  // matrix-unit factors against the dense product
  {
    const UnitBuilder& units = cached_units(2, 1, 2);
    const EquivariantMatrix x = random_equivariant(2, 1, 2, 99, false);
    const Mat xd = equivariant_dense(x, units);
    const UnitBuilder& small = cached_units(2, 0, 2);
    for (const IrrepBasis& basis : irr.bases)
      for (const PathSeq& s : basis.paths)
        for (const PathSeq& t : basis.paths) {
          const MatrixUnit u = matrix_unit(s, t);
          const EquivariantMatrix cut = partial_trace(x, 2, unit_factor(u));
          const Mat direct = dense_partial_trace(units.unit_dense(s, t) * xd, 2, 2, 3);
          CHECK(max_abs_diff(equivariant_dense(cut, small), direct) < 1e-10);
        }
  }

  // diagram factors against the dense product
  {
    const UnitBuilder& units = cached_units(2, 1, 2);
    const EquivariantMatrix x = random_equivariant(2, 1, 2, 7177, false);
    const Mat xd = equivariant_dense(x, units);
    const UnitBuilder& small = cached_units(2, 0, 2);
    for (const BrauerDiagram& a : all_diagrams(2, 1)) {
      const EquivariantMatrix cut = partial_trace(x, 2, diagram_factor(a), &irr);
      const Mat direct = dense_partial_trace(psi_dense(a, 2) * xd, 2, 2, 3);
      CHECK(max_abs_diff(equivariant_dense(cut, small), direct) < 1e-10);
    }
  }

  EquivariantMatrix x = random_equivariant(2, 1, 2, 5, true);
  CHECK_THROWS_AS(partial_trace(x, 0), ValidationError);
  CHECK_THROWS_AS(partial_trace(x, 3), ValidationError);
  CHECK_THROWS_AS(partial_trace(x, 2, diagram_factor(generator(1, 2, 1)), nullptr),
                  ValidationError);
}

TEST_CASE("reduced programs count variables and match hand values") {
  // leaf bookkeeping at the five-box mixed shape
  {
    const IrrepSet& irr = cached_irreps(3, 2, 3);
    SdpProblem prob;
    prob.p = 3;
    prob.q = 2;
    prob.d = 3;
    prob.objective.form = MatrixForm::identity;
    const ReducedSdp r = reduce_sdp(prob, irr);
    CHECK(r.variable_count == 103);
    std::multiset<int> sizes(r.block_dims.begin(), r.block_dims.end());
    CHECK(sizes == std::multiset<int>{1, 1, 2, 5, 6, 6});
  }

  // when the local dimension clears the box count the count is a factorial
  {
    const IrrepSet& irr = cached_irreps(2, 3, 5);
    SdpProblem prob;
    prob.p = 2;
    prob.q = 3;
    prob.d = 5;
    prob.objective.form = MatrixForm::identity;
    CHECK(reduce_sdp(prob, irr).variable_count == 120);
  }

  // toy: maximize the contraction against a unit-trace positive matrix
  {
    const IrrepSet& irr = cached_irreps(1, 1, 2);
    SdpProblem prob;
    prob.p = 1;
    prob.q = 1;
    prob.d = 2;
    prob.objective.form = MatrixForm::diagram_combo;
    prob.objective.combo = DiagramCombo(1, 1);
    prob.objective.combo.add(generator(1, 1, 1), Rat(1));

    TraceEquality eq;
    eq.lhs.form = MatrixForm::matrix_units;
    eq.lhs.units.p = 1;
    eq.lhs.units.q = 1;
    eq.lhs.units.d = 2;
    for (const IrrepBasis& b : irr.bases)
      for (const PathSeq& t : b.paths) eq.lhs.units.add(t, t, 1.0);
    eq.kept = 0;
    eq.rhs.p = 0;
    eq.rhs.q = 0;
    eq.rhs.d = 2;
    const PathSeq scalar_path{tower_root(2)};
    eq.rhs.add(scalar_path, scalar_path, 1.0);
    prob.equalities.push_back(eq);

    const ReducedSdp r = reduce_sdp(prob, irr);
    CHECK(r.variable_count == 2);
    REQUIRE(r.equalities.size() == 1);

    const PathSeq adj = irr.bases[irr.leaf_index(Staircase{1, -1})].paths[0];
    const PathSeq sing = irr.bases[irr.leaf_index(Staircase{0, 0})].paths[0];
    CHECK(r.objective.coeff.at(UnitKey{sing, sing}) == doctest::Approx(2.0));
    CHECK(r.objective.coeff.count(UnitKey{adj, adj}) == 0);
    CHECK(r.equalities[0].f.coeff.at(UnitKey{adj, adj}) == doctest::Approx(3.0));
    CHECK(r.equalities[0].f.coeff.at(UnitKey{sing, sing}) == doctest::Approx(1.0));
    CHECK(r.equalities[0].bound == doctest::Approx(1.0));

    // one-dimensional blocks make the optimum a largest ratio
    double best = 0;
    for (const auto& [key, c] : r.objective.coeff) {
      const double a = r.equalities[0].f.coeff.at(key);
      if (a > 0) best = std::max(best, c / a);
    }
    CHECK(best == doctest::Approx(2.0));
  }
}

TEST_CASE("reduction agrees with dense traces on the unit basis") {
  const std::vector<std::array<int, 3>> shapes = {
      {1, 1, 2}, {2, 1, 2}, {1, 2, 2}, {2, 2, 2}, {1, 1, 3}, {2, 1, 3}};
  const std::vector<MatrixForm> forms = {MatrixForm::identity, MatrixForm::matrix_units,
                                         MatrixForm::computational_sparse,
                                         MatrixForm::diagram_combo};
  int toy = 0;
  for (int round = 0; round < 20; ++round) {
    const auto [p, q, d] = shapes[round % shapes.size()];
    const MatrixForm form = forms[round % forms.size()];
    CAPTURE(round);
    CAPTURE(p);
    CAPTURE(q);
    CAPTURE(d);
    const IrrepSet& irr = cached_irreps(p, q, d);
    const UnitBuilder& units = cached_units(p, q, d);
    const InputMatrix c = random_input(p, q, d, form, 1000 + toy++);
    const LinearFunctional f = functional_of(c, irr);
    const Mat cd = input_dense(c, units);
    for (const IrrepBasis& basis : irr.bases)
      for (const PathSeq& s : basis.paths)
        for (const PathSeq& t : basis.paths) {
          auto it = f.coeff.find(UnitKey{s, t});
          const double via = it == f.coeff.end() ? 0.0 : it->second;
          const double direct = (cd * units.unit_dense(s, t)).trace();
          CHECK(via == doctest::Approx(direct).epsilon(1e-10));
        }
  }
}

#if defined(PTP_SOLVER_CHECK)
TEST_CASE("random dense and reduced optima coincide") {
  const std::vector<std::array<int, 3>> shapes = {
      {1, 1, 2}, {2, 1, 2}, {1, 2, 2}, {1, 1, 3}, {2, 2, 2}, {2, 1, 3}};
  for (int round = 0; round < 20; ++round) {
    const auto [p, q, d] = shapes[round % shapes.size()];
    CAPTURE(round);
    CAPTURE(p);
    CAPTURE(q);
    CAPTURE(d);
    const IrrepSet& irr = cached_irreps(p, q, d);
    const UnitBuilder& units = cached_units(p, q, d);

    SdpProblem prob;
    prob.p = p;
    prob.q = q;
    prob.d = d;
    if (round % 2 == 0) {
      prob.objective = random_input(p, q, d, MatrixForm::matrix_units, 4000 + round);
    } else {
      prob.objective = random_input(p, q, d, MatrixForm::diagram_combo, 4000 + round);
    }

    TraceEquality eq;  // unit trace
    eq.lhs.form = MatrixForm::matrix_units;
    eq.lhs.units.p = p;
    eq.lhs.units.q = q;
    eq.lhs.units.d = d;
    for (const IrrepBasis& b : irr.bases)
      for (const PathSeq& t : b.paths) eq.lhs.units.add(t, t, 1.0);
    eq.kept = 0;
    eq.rhs.p = 0;
    eq.rhs.q = 0;
    eq.rhs.d = d;
    const PathSeq scalar_path{tower_root(d)};
    eq.rhs.add(scalar_path, scalar_path, 1.0);
    prob.equalities.push_back(eq);

    const ReducedSdp r = reduce_sdp(prob, irr);

    // maximizing Tr(C X) over unit-trace positive X picks the top eigenvalue
    const Mat cd = input_dense(prob.objective, units);
    REQUIRE(max_abs_diff(cd, cd.transpose()) < 1e-12);
    Eigen::SelfAdjointEigenSolver<Mat> dense_solver(cd);
    const double dense_opt = dense_solver.eigenvalues().maxCoeff();

    // block by block: the functional divided by the block's trace weight
    double reduced_opt = -1e300;
    REQUIRE(r.equalities.size() == 1);
    for (size_t l = 0; l < r.leaves.size(); ++l) {
      const int dim = r.block_dims[l];
      Mat g = Mat::Zero(dim, dim);
      std::map<PathSeq, int> index;
      for (int i = 0; i < dim; ++i) index[r.paths[l][i]] = i;
      for (const auto& [key, v] : r.objective.coeff) {
        if (key.s.back() != r.leaves[l]) continue;
        g(index.at(key.t), index.at(key.s)) += v;
      }
      g = ((g + g.transpose()) / 2.0).eval();
      const double weight =
          r.equalities[0].f.coeff.at(UnitKey{r.paths[l][0], r.paths[l][0]});
      Eigen::SelfAdjointEigenSolver<Mat> block_solver(g);
      reduced_opt = std::max(reduced_opt, block_solver.eigenvalues().maxCoeff() / weight);
    }
    CHECK(reduced_opt == doctest::Approx(dense_opt).epsilon(1e-6));
  }
}
#endif

TEST_CASE("emitted files describe the blocks") {
  const IrrepSet& irr = cached_irreps(1, 1, 2);
  SdpProblem prob;
  prob.p = 1;
  prob.q = 1;
  prob.d = 2;
  prob.objective.form = MatrixForm::diagram_combo;
  prob.objective.combo = DiagramCombo(1, 1);
  prob.objective.combo.add(generator(1, 1, 1), Rat(1));

  TraceEquality eq;
  eq.lhs.form = MatrixForm::matrix_units;
  eq.lhs.units.p = 1;
  eq.lhs.units.q = 1;
  eq.lhs.units.d = 2;
  for (const IrrepBasis& b : irr.bases)
    for (const PathSeq& t : b.paths) eq.lhs.units.add(t, t, 1.0);
  eq.kept = 0;
  eq.rhs.p = 0;
  eq.rhs.q = 0;
  eq.rhs.d = 2;
  const PathSeq scalar_path{tower_root(2)};
  eq.rhs.add(scalar_path, scalar_path, 1.0);
  prob.equalities.push_back(eq);

  SUBCASE("toy with one equality") {
    const ReducedSdp r = reduce_sdp(prob, irr);
    std::ostringstream dat, manifest;
    emit_reduced(r, dat, manifest);

    std::istringstream in(dat.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "1");
    std::getline(in, line);
    CHECK(line == "2");
    std::getline(in, line);
    CHECK(line == "1 1");
    std::getline(in, line);
    CHECK(line == "1");
    std::set<std::string> entries;
    while (std::getline(in, line))
      if (!line.empty()) entries.insert(line);
    CHECK(entries == std::set<std::string>{"0 2 1 1 2", "1 1 1 1 3", "1 2 1 1 1"});

    const nlohmann::json j = nlohmann::json::parse(manifest.str());
    CHECK(j.at("variable_count") == 2);
    CHECK(j.at("blocks").size() == 2);
    CHECK(j.at("blocks")[0].at("leaf") == "1,-1");
    CHECK(j.at("blocks")[1].at("leaf") == "0,0");
    CHECK(j.at("blocks")[0].at("size") == 1);
    CHECK(j.at("blocks")[0].at("paths").size() == 1);
    CHECK(j.at("slack_block").is_null());
  }

  SUBCASE("objective-only file stays valid") {
    prob.equalities.clear();
    const ReducedSdp r = reduce_sdp(prob, irr);
    std::ostringstream dat, manifest;
    emit_reduced(r, dat, manifest);
    std::istringstream in(dat.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "0");
    std::getline(in, line);
    CHECK(line == "2");
    std::getline(in, line);
    CHECK(line == "1 1");
    std::getline(in, line);
    CHECK(line.empty());
    std::getline(in, line);
    CHECK(line == "0 2 1 1 2");
  }

  SUBCASE("inequalities add a diagonal slack block") {
    InputMatrix a;
    a.form = MatrixForm::identity;
    a.scale = 1.0;
    prob.inequalities.push_back({a, 5.0});
    const ReducedSdp r = reduce_sdp(prob, irr);
    std::ostringstream dat, manifest;
    emit_reduced(r, dat, manifest);
    std::istringstream in(dat.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "2");
    std::getline(in, line);
    CHECK(line == "3");
    std::getline(in, line);
    CHECK(line == "1 1 -1");
    std::getline(in, line);
    CHECK(line == "1 5");
    std::set<std::string> entries;
    while (std::getline(in, line))
      if (!line.empty()) entries.insert(line);
    CHECK(entries.count("2 3 1 1 1") == 1);  // slack unit of the inequality
    CHECK(entries.count("2 1 1 1 3") == 1);  // identity against the adjoint block
    const nlohmann::json j = nlohmann::json::parse(manifest.str());
    CHECK(j.at("slack_block").at("size") == 1);
  }

  SUBCASE("five-box shape emits six blocks") {
    const IrrepSet& big = cached_irreps(3, 2, 3);
    SdpProblem big_prob;
    big_prob.p = 3;
    big_prob.q = 2;
    big_prob.d = 3;
    big_prob.objective.form = MatrixForm::identity;
    const ReducedSdp r = reduce_sdp(big_prob, big);
    std::ostringstream dat, manifest;
    emit_reduced(r, dat, manifest);
    std::istringstream in(dat.str());
    std::string line;
    std::getline(in, line);
    std::getline(in, line);
    CHECK(line == "6");
    std::getline(in, line);
    CHECK(line == "1 1 2 6 5 6");
    const nlohmann::json j = nlohmann::json::parse(manifest.str());
    CHECK(j.at("variable_count") == 103);
  }
}

TEST_CASE("json problems round trip") {
  const std::string text = R"({
    "p": 1, "q": 1, "d": 2,
    "objective": {"form": "diagram",
                  "terms": [{"coefficient": 1, "diagram": "1 1 | t1:t2 b1:b2"}]},
    "equalities": [{"matrix": {"form": "matrix-units",
                               "entries": [{"s": "0,0;1,0;1,-1", "t": "0,0;1,0;1,-1", "value": 1.0},
                                           {"s": "0,0;1,0;0,0", "t": "0,0;1,0;0,0", "value": 1.0}]},
                    "kept": 0,
                    "rhs": {"entries": [{"s": "0,0", "t": "0,0", "value": 1.0}]}}]
  })";
  const SdpProblem prob = parse_problem(text);
  CHECK(prob.objective.form == MatrixForm::diagram_combo);
  REQUIRE(prob.equalities.size() == 1);
  CHECK(prob.equalities[0].lhs.units.coeffs.size() == 2);

  const IrrepSet& irr = cached_irreps(1, 1, 2);
  const ReducedSdp r = reduce_sdp(prob, irr);
  double best = 0;
  for (const auto& [key, c] : r.objective.coeff) {
    const double a = r.equalities[0].f.coeff.at(key);
    if (a > 0) best = std::max(best, c / a);
  }
  CHECK(best == doctest::Approx(2.0));

  CHECK_THROWS_AS(parse_problem("{"), ValidationError);
  CHECK_THROWS_AS(parse_problem(R"({"p":1,"q":1,"d":2,"objective":{"form":"nope"}})"),
                  ValidationError);
}

TEST_CASE("hermiticity flag is checked") {
  EquivariantMatrix x = random_equivariant(2, 1, 2, 31, true);
  x.check_hermitian();
  const IrrepSet& irr = cached_irreps(2, 1, 2);
  const IrrepBasis& basis = irr.bases[irr.leaf_index(Staircase{1, 0})];
  x.add(basis.paths[0], basis.paths[1], 0.25);
  CHECK_THROWS_AS(x.check_hermitian(), ValidationError);

  EquivariantMatrix y = random_equivariant(2, 1, 2, 32, true);
  partial_trace(y, 2).check_hermitian();
}
