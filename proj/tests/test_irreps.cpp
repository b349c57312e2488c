#include <array>

#include "doctest.h"
#include "ptp/irreps.hpp"
#include "ptp/psi.hpp"

using namespace ptp;

namespace {

Surd rt(long long num, long long den) { return Surd::sqrt_of(Rat(num, den)); }

SurdMat surd_from(const std::vector<std::vector<Surd>>& rows) {
  SurdMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("two slots around the wall") {
  const IrrepSet irr = build_irreps(1, 1, 2);
  REQUIRE(irr.bases.size() == 2);
  CHECK(irr.bases[0].leaf == Staircase{1, -1});
  CHECK(irr.bases[1].leaf == Staircase{0, 0});
  CHECK(irr.gens[0][0] == surd_from({{Surd::zero()}}));
  CHECK(irr.gens[1][0] == surd_from({{Surd::of_int(2)}}));

  const IrrepSet irr3 = build_irreps(1, 1, 3);
  CHECK(irr3.gens[irr3.leaf_index({0, 0, 0})][0] == surd_from({{Surd::of_int(3)}}));

  CHECK_THROWS_AS(irr.leaf_index({5, 5}), ValidationError);
  CHECK_THROWS_AS(irr.bases[0].index_of(PathSeq{{0, 0}, {1, 0}, {0, 0}}), ValidationError);
}

TEST_CASE("wall coefficients: branching sum rule and dimension ratios") {
  for (const auto& [p, q, d] : std::vector<std::array<int, 3>>{
           {2, 1, 2}, {2, 2, 2}, {2, 2, 3}, {3, 2, 3}, {3, 1, 4}}) {
    const IrrepSet irr = build_irreps(p, q, d);
    for (const auto& basis : irr.bases)
      for (const auto& seq : basis.paths) {
        const MobileSet mob = mobile_set(seq, p, d);
        if (!mob.nonempty) continue;
        const Partition lambda = stripped(seq[p - 1]);
        Rat total = 0;
        for (size_t j = 0; j < mob.cells.size(); ++j) {
          const Surd c = wall_coefficient(lambda, mob.cells[j], d);
          const Rat csq = c.signed_square();
          CHECK(csq > 0);
          total += csq;
          const Rat ratio(weyl_dim(mob.members[j][p]), weyl_dim(seq[p - 1]));
          CHECK(csq == ratio);
        }
        CHECK(total == d);
      }
  }
  CHECK_THROWS_AS(wall_coefficient({2, 1}, Cell{1, 2}, 3), ValidationError);
}

TEST_CASE("generator matrices are symmetric involutions or scaled idempotents") {
  for (const auto& [p, q, d] : std::vector<std::array<int, 3>>{{2, 2, 2}, {3, 2, 3}, {2, 2, 3}}) {
    const IrrepSet irr = build_irreps(p, q, d);
    for (size_t leaf = 0; leaf < irr.bases.size(); ++leaf) {
      const int dim = irr.bases[leaf].dim();
      for (int i = 1; i < p + q; ++i) {
        const SurdMat& m = irr.gens[leaf][i - 1];
        CHECK(m == m.transposed());
        const auto sq = mul(m, m);
        REQUIRE(sq.has_value());
        if (i == p)
          CHECK(*sq == scale(Surd::of_int(d), m));
        else
          CHECK(*sq == SurdMat::identity(dim));
      }
    }
  }
}

TEST_CASE("defining relations hold in every irrep") {
  for (int p = 0; p <= 5; ++p)
    for (int q = 0; q <= 5; ++q) {
      const int n = p + q;
      if (n < 2 || n > 5) continue;
      for (int d : {2, 3}) {
        const IrrepSet irr = build_irreps(p, q, d);
        const auto reports = verify_relations(irr);
        CHECK(!reports.empty());
        for (const auto& rep : reports) {
          INFO("relation ", rep.name, " p=", p, " q=", q, " d=", d, " exact=", rep.exact,
               " residual=", rep.residual);
          CHECK(rep.pass);
        }
      }
    }
}

TEST_CASE("two dimensional leaf of the five slot algebra, exact entries") {
  const IrrepSet irr = build_irreps(3, 2, 3);
  const int leaf = irr.leaf_index({2, 1, -2});
  REQUIRE(irr.bases[leaf].dim() == 2);
  // canonical path order: the level sequence through (2,0,0) precedes (1,1,0)
  CHECK(irr.bases[leaf].paths[0][2] == Staircase{2, 0, 0});
  CHECK(irr.bases[leaf].paths[1][2] == Staircase{1, 1, 0});

  const Surd h = Surd::of_rat(Rat(1, 2));
  const Surd s32 = rt(3, 4);
  CHECK(irr.gens[leaf][0] == surd_from({{Surd::one(), Surd::zero()}, {Surd::zero(), -Surd::one()}}));
  CHECK(irr.gens[leaf][1] == surd_from({{-h, s32}, {s32, h}}));
  CHECK(irr.gens[leaf][2] == surd_from({{Surd::zero(), Surd::zero()}, {Surd::zero(), Surd::zero()}}));
  CHECK(irr.gens[leaf][3] == SurdMat::identity(2));
}

TEST_CASE("one dimensional leaves of the five slot algebra") {
  const IrrepSet irr = build_irreps(3, 2, 3);
  const int l1 = irr.leaf_index({3, 0, -2});
  REQUIRE(irr.bases[l1].dim() == 1);
  CHECK(irr.gens[l1][0] == surd_from({{Surd::one()}}));
  CHECK(irr.gens[l1][1] == surd_from({{Surd::one()}}));
  CHECK(irr.gens[l1][2] == surd_from({{Surd::zero()}}));
  CHECK(irr.gens[l1][3] == surd_from({{Surd::one()}}));

  const int l2 = irr.leaf_index({3, -1, -1});
  REQUIRE(irr.bases[l2].dim() == 1);
  CHECK(irr.gens[l2][0] == surd_from({{Surd::one()}}));
  CHECK(irr.gens[l2][1] == surd_from({{Surd::one()}}));
  CHECK(irr.gens[l2][2] == surd_from({{Surd::zero()}}));
  CHECK(irr.gens[l2][3] == surd_from({{-Surd::one()}}));
}

TEST_CASE("Jucys-Murphy images are diagonal with walled content entries") {
  for (const auto& [p, q] : std::vector<std::pair<int, int>>{
           {1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1}, {0, 2}, {0, 3}}) {
    for (int d : {2, 3}) {
      const IrrepSet irr = build_irreps(p, q, d);
      for (size_t leaf = 0; leaf < irr.bases.size(); ++leaf)
        for (int k = 1; k <= p + q; ++k) {
          const RadMat jm = irrep_combo_exact(irr, static_cast<int>(leaf),
                                              jm_element(k, p, q, d));
          INFO("p=", p, " q=", q, " d=", d, " k=", k, " leaf=", leaf);
          CHECK(is_diagonal(jm));
          const auto spectrum = jm_spectrum(irr.bases[leaf], k, p);
          for (int t = 0; t < irr.bases[leaf].dim(); ++t)
            CHECK(jm.at(t, t) == Radical::of_rat(Rat(spectrum[t])));
        }
    }
  }
}

TEST_CASE("traces of irrep images against the dense representation") {
  for (const auto& [p, q] : std::vector<std::pair<int, int>>{{2, 1}, {1, 2}}) {
    for (int d : {2, 3}) {
      const IrrepSet irr = build_irreps(p, q, d);
      for (const auto& a : all_diagrams(p, q)) {
        const double dense_trace = Mat(psi_sparse(a, d)).trace();
        double reduced = 0;
        for (size_t leaf = 0; leaf < irr.bases.size(); ++leaf) {
          const Int mult = weyl_dim(irr.bases[leaf].leaf);
          reduced += static_cast<double>(mult) *
                     irrep_diagram(irr, static_cast<int>(leaf), a).trace();
        }
        INFO("p=", p, " q=", q, " d=", d, " diagram ", format_diagram(a));
        CHECK(std::abs(dense_trace - reduced) < 1e-8);
      }
    }
  }
}

TEST_CASE("exact and floating evaluations agree on words") {
  const IrrepSet irr = build_irreps(2, 2, 2);
  const std::vector<int> word{1, 2, 3, 2, 1, 2};
  for (size_t leaf = 0; leaf < irr.bases.size(); ++leaf) {
    const Mat dd = irrep_word(irr, static_cast<int>(leaf), word);
    const RadMat ee = irrep_word_exact(irr, static_cast<int>(leaf), word);
    for (int i = 0; i < dd.rows(); ++i)
      for (int j = 0; j < dd.cols(); ++j)
        CHECK(std::abs(dd(i, j) - ee.at(i, j).value()) < 1e-12);
  }
}

TEST_CASE("total dimension squares match the generic walled algebra") {
  for (const auto& [p, q, d] : std::vector<std::array<int, 3>>{{2, 2, 4}, {2, 1, 3}, {3, 2, 5}}) {
    const IrrepSet irr = build_irreps(p, q, d);
    long long total = 0, fact = 1;
    for (int i = 2; i <= p + q; ++i) fact *= i;
    for (const auto& basis : irr.bases)
      total += static_cast<long long>(basis.dim()) * basis.dim();
    CHECK(total == fact);
  }
}

namespace {

std::vector<Partition> partitions_up_to(int max_boxes) {
  std::vector<Partition> out{{}};
  std::vector<Partition> level{{}};
  for (int n = 1; n <= max_boxes; ++n) {
    std::set<Partition> next;
    for (const Partition& lam : level)
      for (const Cell& c : addable_cells(lam)) next.insert(with_cell_added(lam, c));
    level.assign(next.begin(), next.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

// complete homogeneous symmetric polynomial h_r evaluated at integer points
Rat complete_homogeneous(int r, const std::vector<long long>& xs) {
  if (r < 0) return Rat(0);
  std::vector<Rat> h(static_cast<size_t>(r) + 1, Rat(0));
  h[0] = Rat(1);
  for (long long x : xs)
    for (int k = 1; k <= r; ++k) h[k] += Rat(x) * h[k - 1];
  return h[r];
}

}  // namespace

TEST_CASE("corner content sums telescope to zero and one") {
  for (const Partition& lam : partitions_up_to(8)) {
    const auto add = addable_cells(lam);
    for (const Cell& corner : removable_cells(lam)) {
      Rat plain(0), weighted(0);
      for (const Cell& m : add) {
        Rat term(1);
        for (const Cell& w : removable_cells(lam)) {
          if (w.row == corner.row && w.col == corner.col) continue;
          term *= Rat(content(m) - content(w));
        }
        for (const Cell& v : add) {
          if (v.row == m.row && v.col == m.col) continue;
          term /= Rat(content(m) - content(v));
        }
        plain += term;
        weighted += Rat(content(m)) * term;
      }
      CHECK(plain == Rat(0));
      CHECK(weighted == Rat(1));
    }
  }
}

TEST_CASE("power sums over distinct points interpolate to complete homogeneous") {
  const std::vector<std::vector<long long>> samples{
      {0},         {3, -2},           {1, 0, -4},       {2, 1, -1, -3},
      {5, 2, 0, -1, -6}, {7, 4, 1, -2, -3, -8}};
  for (const auto& xs : samples) {
    const int n = static_cast<int>(xs.size());
    for (int k = 0; k <= n + 2; ++k) {
      Rat sum(0);
      for (int i = 0; i < n; ++i) {
        Rat term = Rat(xs[i]);
        Rat powed(1);
        for (int e = 0; e < k; ++e) powed *= term;
        Rat den(1);
        for (int j = 0; j < n; ++j)
          if (j != i) den *= Rat(xs[i] - xs[j]);
        sum += powed / den;
      }
      CHECK(sum == complete_homogeneous(k - n + 1, xs));
    }
  }
}

TEST_CASE("box content ties symmetric and unitary dimension ratios") {
  for (const Partition& mu : partitions_up_to(8)) {
    const long long p = boxes(mu);
    if (p == 0) continue;
    for (const Cell& x : removable_cells(mu)) {
      const Partition lam = with_cell_removed(mu, x);
      // corner products against the symmetric group dimension ratio
      Rat ratio(1);
      for (const Cell& a : addable_cells(lam)) {
        if (a.row == x.row && a.col == x.col) continue;
        ratio *= Rat(content(x) - content(a));
      }
      for (const Cell& c : removable_cells(lam)) ratio /= Rat(content(x) - content(c));
      const Rat dim_ratio = Rat(p) * Rat(syt_count(lam), syt_count(mu));
      CHECK(ratio == dim_ratio);

      // the same ratio against unitary group dimensions gives the content shift
      for (int d = static_cast<int>(num_rows(mu)); d <= 6; ++d) {
        const Rat rhs = dim_ratio * Rat(ssyt_count(mu, d), ssyt_count(lam, d));
        CHECK(Rat(d + content(x)) == rhs);
      }
    }
  }
}

TEST_CASE("span of the tensor representation matches the dimension count") {
  for (int n = 2; n <= 4; ++n) {
    for (int p = n; p >= 0; --p) {
      const int q = n - p;
      for (int d = 2; d <= 3; ++d) {
        const auto diagrams = all_diagrams(p, q);
        const long long cols = dense_dim_checked(d, 2 * n);
        Mat stacked(diagrams.size(), cols);
        for (size_t i = 0; i < diagrams.size(); ++i) {
          const Mat m = psi_dense(diagrams[i], d);
          for (long long r = 0; r < m.rows(); ++r)
            for (long long c = 0; c < m.cols(); ++c)
              stacked(static_cast<long long>(i), r * m.cols() + c) = m(r, c);
        }
        const long long rank = stacked.colPivHouseholderQr().rank();
        const Tower t = build_tower(p, q, d);
        long long expected = 0;
        for (const Staircase& leaf : t.leaves()) {
          const long long dl = path_count(t, leaf).convert_to<long long>();
          expected += dl * dl;
        }
        CHECK(rank == expected);
      }
    }
  }
}
