#include "ptp/irreps.hpp"

#include <algorithm>

#include "ptp/text.hpp"

namespace ptp {

int IrrepBasis::index_of(const PathSeq& seq) const {
  const auto it = std::lower_bound(paths.begin(), paths.end(), seq,
                                   [](const PathSeq& a, const PathSeq& b) { return a > b; });
  if (it == paths.end() || *it != seq) throw ValidationError("path not in basis");
  return static_cast<int>(it - paths.begin());
}

int IrrepSet::leaf_index(const Staircase& leaf) const {
  for (size_t i = 0; i < bases.size(); ++i)
    if (bases[i].leaf == leaf) return static_cast<int>(i);
  throw ValidationError("leaf not present: " + format_row(leaf));
}

Surd wall_coefficient(const Partition& lambda, const Cell& box, int d) {
  const long long c0 = content(box);
  Rat value(d + c0);
  for (const Cell& r : removable_cells(lambda)) value *= Rat(c0 - content(r));
  bool found = false;
  for (const Cell& a : addable_cells(lambda)) {
    if (a == box) {
      found = true;
      continue;
    }
    value /= Rat(c0 - content(a));
  }
  if (!found) throw ValidationError("box is not addable");
  return Surd::sqrt_of(value);
}

IrrepSet build_irreps(int p, int q, int d) {
  IrrepSet irr{p, q, d, build_tower(p, q, d), {}, {}};
  for (const auto& leaf : irr.tower.leaves()) {
    IrrepBasis basis{leaf, paths_to(irr.tower, leaf)};
    std::vector<SurdMat> gens;
    for (int i = 1; i < p + q; ++i) gens.push_back(irrep_generator(basis, i, p, d));
    irr.bases.push_back(std::move(basis));
    irr.gens.push_back(std::move(gens));
  }
  return irr;
}

SurdMat irrep_generator(const IrrepBasis& basis, int i, int p, int d) {
  const int n = basis.dim();
  SurdMat m(n, n);
  if (i == p) {
    for (int t = 0; t < n; ++t) {
      const PathSeq& seq = basis.paths[t];
      const MobileSet mob = mobile_set(seq, p, d);
      if (!mob.nonempty) continue;
      const Partition lambda = stripped(seq[p - 1]);
      const Surd ct = wall_coefficient(lambda, mob.box, d);
      for (size_t j = 0; j < mob.members.size(); ++j) {
        const Surd cm = wall_coefficient(lambda, mob.cells[j], d);
        m.at(basis.index_of(mob.members[j]), t) = ct * cm;
      }
    }
    return m;
  }
  for (int t = 0; t < n; ++t) {
    const PathSeq& seq = basis.paths[t];
    const long long r = axial_distance(seq, i, p);
    m.at(t, t) = Surd::of_rat(r > 0 ? Rat(1, r) : -Rat(1, -r));
    const auto other = swapped_path(seq, i, p);
    if (!other) continue;
    m.at(basis.index_of(*other), t) = Surd::sqrt_of(Rat(r * r - 1, r * r));
  }
  return m;
}

namespace {

const SurdMat& generator_matrix(const IrrepSet& irr, int leaf, int i) {
  if (leaf < 0 || leaf >= static_cast<int>(irr.bases.size()))
    throw ValidationError("leaf index out of range");
  if (i < 1 || i > static_cast<int>(irr.gens[leaf].size()))
    throw ValidationError("generator index out of range");
  return irr.gens[leaf][i - 1];
}

}  // namespace

Mat irrep_word(const IrrepSet& irr, int leaf, const std::vector<int>& word) {
  const int n = irr.bases[leaf].dim();
  Mat acc = Mat::Identity(n, n);
  for (int i : word) acc = acc * to_dense(generator_matrix(irr, leaf, i));
  return acc;
}

Mat irrep_diagram(const IrrepSet& irr, int leaf, const BrauerDiagram& a) {
  if (a.p != irr.p || a.q != irr.q) throw ValidationError("diagram shape does not match");
  const auto word = diagram_to_generators(a);
  const int loops = compose_word(word, a.p, a.q).second;
  Mat m = irrep_word(irr, leaf, word);
  for (int l = 0; l < loops; ++l) m /= irr.d;
  return m;
}

Mat irrep_combo(const IrrepSet& irr, int leaf, const DiagramCombo& x) {
  if (x.p != irr.p || x.q != irr.q) throw ValidationError("combo shape does not match");
  const int n = irr.bases[leaf].dim();
  Mat acc = Mat::Zero(n, n);
  for (const auto& [diag, coeff] : x.terms) acc += to_double(coeff) * irrep_diagram(irr, leaf, diag);
  return acc;
}

RadMat irrep_word_exact(const IrrepSet& irr, int leaf, const std::vector<int>& word) {
  RadMat acc = RadMat::identity(irr.bases[leaf].dim());
  for (int i : word) acc = mul(acc, RadMat::from_surd(generator_matrix(irr, leaf, i)));
  return acc;
}

RadMat irrep_diagram_exact(const IrrepSet& irr, int leaf, const BrauerDiagram& a) {
  if (a.p != irr.p || a.q != irr.q) throw ValidationError("diagram shape does not match");
  const auto word = diagram_to_generators(a);
  const int loops = compose_word(word, a.p, a.q).second;
  Int denom = 1;
  for (int l = 0; l < loops; ++l) denom *= irr.d;
  return scale(Rat(1, denom), irrep_word_exact(irr, leaf, word));
}

RadMat irrep_combo_exact(const IrrepSet& irr, int leaf, const DiagramCombo& x) {
  if (x.p != irr.p || x.q != irr.q) throw ValidationError("combo shape does not match");
  RadMat acc(irr.bases[leaf].dim(), irr.bases[leaf].dim());
  for (const auto& [diag, coeff] : x.terms)
    acc = add(acc, scale(coeff, irrep_diagram_exact(irr, leaf, diag)));
  return acc;
}

std::vector<long long> jm_spectrum(const IrrepBasis& basis, int k, int p) {
  std::vector<long long> out;
  out.reserve(basis.paths.size());
  for (const auto& seq : basis.paths) out.push_back(walled_content(seq, k, p));
  return out;
}

std::vector<RelationReport> verify_relations(const IrrepSet& irr) {
  std::vector<RelationReport> out;
  const auto relations = defining_relations(irr.p, irr.q);
  for (size_t leaf = 0; leaf < irr.bases.size(); ++leaf) {
    const int n = irr.bases[leaf].dim();
    for (const auto& rel : relations) {
      RelationReport rep{rel.name, irr.bases[leaf].leaf, false, 0, false};
      Int dpow = 1;
      for (int i = 0; i < rel.dpow; ++i) dpow *= irr.d;

      // exact path: multiply in SurdMat while each entry stays a single root
      auto exact_chain = [&](const std::vector<int>& word) -> std::optional<SurdMat> {
        SurdMat acc = SurdMat::identity(n);
        for (int i : word) {
          auto next = mul(acc, generator_matrix(irr, static_cast<int>(leaf), i));
          if (!next) return std::nullopt;
          acc = std::move(*next);
        }
        return acc;
      };
      const auto lhs = exact_chain(rel.lhs);
      const auto rhs = exact_chain(rel.rhs);
      if (lhs && rhs) {
        const SurdMat scaled = scale(Surd::of_rat(Rat(dpow)), *rhs);
        rep.exact = true;
        rep.pass = *lhs == scaled;
        rep.residual = rep.pass ? 0 : max_abs_diff(to_dense(*lhs), to_dense(scaled));
        out.push_back(std::move(rep));
        continue;
      }
      const Mat lhsd = irrep_word(irr, static_cast<int>(leaf), rel.lhs);
      const Mat rhsd = to_double(Rat(dpow)) * irrep_word(irr, static_cast<int>(leaf), rel.rhs);
      rep.residual = max_abs_diff(lhsd, rhsd);
      rep.pass = rep.residual <= 1e-12;
      out.push_back(std::move(rep));
    }
  }
  return out;
}

}  // namespace ptp
