#include "ptp/sdp.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "json.hpp"

#include "ptp/schur.hpp"
#include "ptp/text.hpp"

namespace ptp {

namespace {

double pattern_count(const Staircase& leaf) { return to_double(Rat(weyl_dim(leaf))); }

// exact ratio of pattern counts, converted once
double count_ratio(const Staircase& leaf, const Staircase& shorter) {
  return to_double(Rat(weyl_dim(leaf)) / Rat(weyl_dim(shorter)));
}

PathSeq prefix_of(const PathSeq& seq, int kept) {
  return PathSeq(seq.begin(), seq.begin() + kept + 1);
}

bool suffix_matches(const PathSeq& a, const PathSeq& b, int kept) {
  for (size_t i = static_cast<size_t>(kept); i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

void validate_word(const std::vector<int>& w, int n, int d) {
  if (static_cast<int>(w.size()) != n) throw ValidationError("word length differs from p+q");
  for (int s : w)
    if (s < 1 || s > d) throw ValidationError("word symbols must lie in 1..d");
}

}  // namespace

double EquivariantMatrix::coeff(const PathSeq& s, const PathSeq& t) const {
  auto it = coeffs.find(UnitKey{s, t});
  return it == coeffs.end() ? 0.0 : it->second;
}

void EquivariantMatrix::add(const PathSeq& s, const PathSeq& t, double v) {
  matrix_unit(s, t);  // validates the pair
  coeffs[UnitKey{s, t}] += v;
}

void EquivariantMatrix::check_hermitian(double tol) const {
  for (const auto& [key, v] : coeffs) {
    auto it = coeffs.find(UnitKey{key.t, key.s});
    const double w = it == coeffs.end() ? 0.0 : it->second;
    if (std::abs(v - w) > tol) throw ValidationError("coefficients are not hermitian");
  }
}

EquivariantMatrix random_equivariant(int p, int q, int d, unsigned long long seed,
                                     bool hermitian) {
  const Tower tower = build_tower(p, q, d);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  EquivariantMatrix out;
  out.p = p;
  out.q = q;
  out.d = d;
  out.hermitian = hermitian;
  for (const Staircase& leaf : tower.leaves()) {
    const std::vector<PathSeq> paths = paths_to(tower, leaf);
    for (size_t i = 0; i < paths.size(); ++i)
      for (size_t j = hermitian ? i : 0; j < paths.size(); ++j) {
        const double v = unit(rng);
        out.coeffs[UnitKey{paths[i], paths[j]}] = v;
        if (hermitian && j != i) out.coeffs[UnitKey{paths[j], paths[i]}] = v;
      }
  }
  return out;
}

Mat equivariant_dense(const EquivariantMatrix& x, const UnitBuilder& units) {
  Mat acc = Mat::Zero(units.dim(), units.dim());
  for (const auto& [key, v] : x.coeffs)
    if (v != 0.0) acc += v * units.unit_dense(key.s, key.t);
  return acc;
}

double trace_against_unit(const EquivariantMatrix& x, const PathSeq& s, const PathSeq& t) {
  const MatrixUnit u = matrix_unit(s, t);
  return x.coeff(t, s) * pattern_count(u.leaf);
}

double trace_against_computational(const EquivariantMatrix& x, const std::vector<int>& i_word,
                                   const std::vector<int>& j_word) {
  const int n = x.p + x.q;
  validate_word(i_word, n, x.d);
  validate_word(j_word, n, x.d);
  if (weight_balance(i_word, n, x.p, x.d) != weight_balance(j_word, n, x.p, x.d)) return 0.0;

  std::map<PathSeq, Vec> ket_chain, bra_chain;
  auto chain = [&](std::map<PathSeq, Vec>& cache, const PathSeq& path,
                   const std::vector<int>& word) -> const Vec& {
    auto it = cache.find(path);
    if (it == cache.end()) it = cache.emplace(path, schur_chain(x.p, path, word)).first;
    return it->second;
  };

  double acc = 0.0;
  for (const auto& [key, v] : x.coeffs) {
    if (v == 0.0) continue;
    const Vec& a = chain(bra_chain, key.s, j_word);
    const Vec& b = chain(ket_chain, key.t, i_word);
    if (a.size() == 0) continue;
    acc += v * a.dot(b);
  }
  return acc;
}

double trace_against_diagram(const EquivariantMatrix& x, const BrauerDiagram& pi,
                             const IrrepSet& irr) {
  if (pi.p != x.p || pi.q != x.q) throw ValidationError("diagram shape differs from the matrix");
  std::map<Staircase, Mat> blocks;
  double acc = 0.0;
  for (const auto& [key, v] : x.coeffs) {
    if (v == 0.0) continue;
    const Staircase leaf = key.s.back();
    auto it = blocks.find(leaf);
    if (it == blocks.end())
      it = blocks.emplace(leaf, irrep_diagram(irr, irr.leaf_index(leaf), pi)).first;
    const IrrepBasis& basis = irr.bases[irr.leaf_index(leaf)];
    acc += pattern_count(leaf) * it->second(basis.index_of(key.t), basis.index_of(key.s)) * v;
  }
  return acc;
}

double trace_full(const EquivariantMatrix& x) {
  double acc = 0.0;
  for (const auto& [key, v] : x.coeffs)
    if (key.s == key.t) acc += v * pattern_count(key.s.back());
  return acc;
}

TraceFactor identity_factor() { return TraceFactor{}; }

TraceFactor unit_factor(const MatrixUnit& u) {
  TraceFactor f;
  f.form = TraceFactor::Form::unit;
  f.unit = u;
  return f;
}

TraceFactor diagram_factor(const BrauerDiagram& a) {
  TraceFactor f;
  f.form = TraceFactor::Form::diagram;
  f.diagram = a;
  return f;
}

EquivariantMatrix partial_trace(const EquivariantMatrix& x, int kept, const TraceFactor& y,
                                const IrrepSet* irr) {
  const int n = x.p + x.q;
  if (kept < 1 || kept > n - 1) throw ValidationError("kept system count out of range");
  EquivariantMatrix out;
  out.p = std::min(x.p, kept);
  out.q = kept - out.p;
  out.d = x.d;

  switch (y.form) {
    case TraceFactor::Form::identity: {
      out.hermitian = x.hermitian;
      for (const auto& [key, v] : x.coeffs) {
        if (v == 0.0 || !suffix_matches(key.s, key.t, kept)) continue;
        out.add(prefix_of(key.s, kept), prefix_of(key.t, kept),
                v * count_ratio(key.s.back(), key.s[kept]));
      }
      return out;
    }
    case TraceFactor::Form::unit: {
      if (!y.unit) throw ValidationError("unit factor missing its unit");
      const MatrixUnit& u = *y.unit;
      for (const auto& [key, v] : x.coeffs) {
        if (v == 0.0 || key.s != u.t) continue;
        if (key.t.back() != u.leaf || !suffix_matches(u.s, key.t, kept)) continue;
        out.add(prefix_of(u.s, kept), prefix_of(key.t, kept),
                v * count_ratio(u.leaf, u.s[kept]));
      }
      return out;
    }
    case TraceFactor::Form::diagram: {
      if (!y.diagram) throw ValidationError("diagram factor missing its diagram");
      if (irr == nullptr) throw ValidationError("diagram factor needs the irrep set");
      std::map<Staircase, Mat> blocks;
      for (const auto& [key, v] : x.coeffs) {
        if (v == 0.0) continue;
        const Staircase leaf = key.s.back();
        const int l = irr->leaf_index(leaf);
        auto it = blocks.find(leaf);
        if (it == blocks.end())
          it = blocks.emplace(leaf, irrep_diagram(*irr, l, *y.diagram)).first;
        const IrrepBasis& basis = irr->bases[l];
        const int t_idx = basis.index_of(key.s);
        for (int s_idx = 0; s_idx < basis.dim(); ++s_idx) {
          const double entry = it->second(s_idx, t_idx);
          if (entry == 0.0) continue;
          const PathSeq& s_path = basis.paths[s_idx];
          if (!suffix_matches(s_path, key.t, kept)) continue;
          out.add(prefix_of(s_path, kept), prefix_of(key.t, kept),
                  entry * v * count_ratio(leaf, s_path[kept]));
        }
      }
      return out;
    }
  }
  throw ValidationError("unsupported trace factor form");
}

double LinearFunctional::eval(const EquivariantMatrix& x) const {
  double acc = 0.0;
  for (const auto& [key, v] : coeff) {
    auto it = x.coeffs.find(key);
    if (it != x.coeffs.end()) acc += v * it->second;
  }
  return acc;
}

LinearFunctional functional_of(const InputMatrix& y, const IrrepSet& irr) {
  LinearFunctional f;
  switch (y.form) {
    case MatrixForm::identity: {
      for (const IrrepBasis& basis : irr.bases) {
        const double m = pattern_count(basis.leaf);
        for (const PathSeq& t : basis.paths) f.coeff[UnitKey{t, t}] += y.scale * m;
      }
      return f;
    }
    case MatrixForm::matrix_units: {
      for (const auto& [key, v] : y.units.coeffs) {
        if (v == 0.0) continue;
        f.coeff[UnitKey{key.t, key.s}] += v * pattern_count(key.s.back());
      }
      return f;
    }
    case MatrixForm::computational_sparse: {
      const int n = irr.p + irr.q;
      for (const ComputationalEntry& e : y.entries) {
        validate_word(e.ket, n, irr.d);
        validate_word(e.bra, n, irr.d);
        if (e.value == 0.0) continue;
        const Row w = weight_balance(e.ket, n, irr.p, irr.d);
        if (w != weight_balance(e.bra, n, irr.p, irr.d)) continue;
        for (const IrrepBasis& basis : irr.bases) {
          std::vector<Vec> bra_chains(basis.dim()), ket_chains(basis.dim());
          for (int i = 0; i < basis.dim(); ++i) {
            bra_chains[i] = schur_chain(irr.p, basis.paths[i], e.bra);
            ket_chains[i] = schur_chain(irr.p, basis.paths[i], e.ket);
          }
          for (int s = 0; s < basis.dim(); ++s) {
            if (bra_chains[s].size() == 0) continue;
            for (int t = 0; t < basis.dim(); ++t) {
              const double dot = bra_chains[s].dot(ket_chains[t]);
              if (dot == 0.0) continue;
              f.coeff[UnitKey{basis.paths[s], basis.paths[t]}] += e.value * dot;
            }
          }
        }
      }
      return f;
    }
    case MatrixForm::diagram_combo: {
      for (const auto& [diagram, r] : y.combo.terms) {
        const double c = to_double(r);
        if (c == 0.0) continue;
        for (int l = 0; l < static_cast<int>(irr.bases.size()); ++l) {
          const IrrepBasis& basis = irr.bases[l];
          const Mat block = irrep_diagram(irr, l, diagram);
          const double m = pattern_count(basis.leaf);
          for (int s = 0; s < basis.dim(); ++s)
            for (int t = 0; t < basis.dim(); ++t) {
              if (block(s, t) == 0.0) continue;
              f.coeff[UnitKey{basis.paths[t], basis.paths[s]}] += c * block(s, t) * m;
            }
        }
      }
      return f;
    }
  }
  throw ValidationError("unsupported input matrix form");
}

namespace {

// expands one partial-trace equality into scalar constraints, one per unit
// of the kept prefix
std::vector<ReducedConstraint> expand_equality(const TraceEquality& eq, const IrrepSet& irr) {
  if (eq.lhs.form != MatrixForm::matrix_units)
    throw ValidationError("partial-trace equality needs its left factor in matrix-unit form");
  const int n = irr.p + irr.q;
  if (eq.kept < 0 || eq.kept > n - 1) throw ValidationError("kept system count out of range");

  std::map<UnitKey, LinearFunctional> lhs;
  for (const auto& [key, v] : eq.lhs.units.coeffs) {
    if (v == 0.0) continue;
    const Staircase leaf = key.s.back();
    const IrrepBasis& basis = irr.bases[irr.leaf_index(leaf)];
    const double ratio = count_ratio(leaf, key.s[eq.kept]);
    const UnitKey head{prefix_of(key.s, eq.kept), PathSeq{}};
    for (const PathSeq& t : basis.paths) {
      if (!suffix_matches(key.s, t, eq.kept)) continue;
      UnitKey out{head.s, prefix_of(t, eq.kept)};
      lhs[out].coeff[UnitKey{key.t, t}] += v * ratio;
    }
  }

  std::vector<ReducedConstraint> out;
  std::set<UnitKey> keys;
  for (const auto& [key, f] : lhs) keys.insert(key);
  for (const auto& [key, v] : eq.rhs.coeffs)
    if (v != 0.0) keys.insert(key);
  for (const UnitKey& key : keys) {
    ReducedConstraint c;
    auto it = lhs.find(key);
    if (it != lhs.end()) c.f = it->second;
    c.bound = eq.rhs.coeff(key.s, key.t);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

ReducedSdp reduce_sdp(const SdpProblem& prob, const IrrepSet& irr) {
  if (prob.p != irr.p || prob.q != irr.q || prob.d != irr.d)
    throw ValidationError("problem shape differs from the irrep set");
  ReducedSdp r;
  r.p = prob.p;
  r.q = prob.q;
  r.d = prob.d;
  r.variable_count = 0;
  for (const IrrepBasis& basis : irr.bases) {
    r.leaves.push_back(basis.leaf);
    r.block_dims.push_back(basis.dim());
    r.paths.push_back(basis.paths);
    r.variable_count += static_cast<long long>(basis.dim()) * basis.dim();
  }

  r.objective = functional_of(prob.objective, irr);

  r.inequalities.resize(prob.inequalities.size());
#pragma omp parallel for schedule(dynamic)
  for (long long k = 0; k < static_cast<long long>(prob.inequalities.size()); ++k)
    r.inequalities[k] =
        ReducedConstraint{functional_of(prob.inequalities[k].first, irr),
                          prob.inequalities[k].second};

  std::vector<std::vector<ReducedConstraint>> expanded(prob.equalities.size());
#pragma omp parallel for schedule(dynamic)
  for (long long k = 0; k < static_cast<long long>(prob.equalities.size()); ++k)
    expanded[k] = expand_equality(prob.equalities[k], irr);
  for (auto& group : expanded)
    for (auto& c : group) r.equalities.push_back(std::move(c));

  return r;
}

namespace {

// index lookup and symmetric per-block coefficient matrices of one functional
struct BlockIndex {
  std::map<Staircase, int> leaf_of;
  std::vector<std::map<PathSeq, int>> path_of;

  explicit BlockIndex(const ReducedSdp& r) {
    path_of.resize(r.leaves.size());
    for (size_t l = 0; l < r.leaves.size(); ++l) {
      leaf_of[r.leaves[l]] = static_cast<int>(l);
      for (size_t i = 0; i < r.paths[l].size(); ++i)
        path_of[l][r.paths[l][i]] = static_cast<int>(i);
    }
  }
};

std::vector<Mat> functional_blocks(const LinearFunctional& f, const ReducedSdp& r,
                                   const BlockIndex& index) {
  std::vector<Mat> blocks;
  for (int dim : r.block_dims) blocks.push_back(Mat::Zero(dim, dim));
  for (const auto& [key, v] : f.coeff) {
    if (v == 0.0) continue;
    const int l = index.leaf_of.at(key.s.back());
    const int si = index.path_of[l].at(key.s);
    const int ti = index.path_of[l].at(key.t);
    blocks[l](ti, si) += v;
  }
  for (Mat& b : blocks) b = ((b + b.transpose()) / 2.0).eval();
  return blocks;
}

void emit_entries(std::ostream& dat, int matno, const std::vector<Mat>& blocks) {
  for (size_t l = 0; l < blocks.size(); ++l)
    for (int i = 0; i < blocks[l].rows(); ++i)
      for (int j = i; j < blocks[l].cols(); ++j)
        if (blocks[l](i, j) != 0.0)
          dat << matno << ' ' << l + 1 << ' ' << i + 1 << ' ' << j + 1 << ' '
              << blocks[l](i, j) << '\n';
}

}  // namespace

void emit_reduced(const ReducedSdp& r, std::ostream& dat, std::ostream& manifest) {
  const BlockIndex index(r);
  const int m = static_cast<int>(r.equalities.size() + r.inequalities.size());
  const int slack = static_cast<int>(r.inequalities.size());
  const int nblocks = static_cast<int>(r.leaves.size()) + (slack > 0 ? 1 : 0);

  dat << std::setprecision(17);
  dat << m << '\n' << nblocks << '\n';
  for (size_t l = 0; l < r.leaves.size(); ++l) dat << (l ? " " : "") << r.block_dims[l];
  if (slack > 0) dat << ' ' << -slack;
  dat << '\n';
  {
    bool first = true;
    for (const ReducedConstraint& c : r.equalities) {
      dat << (first ? "" : " ") << c.bound;
      first = false;
    }
    for (const ReducedConstraint& c : r.inequalities) {
      dat << (first ? "" : " ") << c.bound;
      first = false;
    }
    dat << '\n';
  }

  emit_entries(dat, 0, functional_blocks(r.objective, r, index));
  int matno = 1;
  for (const ReducedConstraint& c : r.equalities)
    emit_entries(dat, matno++, functional_blocks(c.f, r, index));
  for (size_t k = 0; k < r.inequalities.size(); ++k) {
    emit_entries(dat, matno, functional_blocks(r.inequalities[k].f, r, index));
    dat << matno << ' ' << nblocks << ' ' << k + 1 << ' ' << k + 1 << " 1\n";
    ++matno;
  }

  nlohmann::json j;
  j["p"] = r.p;
  j["q"] = r.q;
  j["d"] = r.d;
  j["variable_count"] = r.variable_count;
  j["blocks"] = nlohmann::json::array();
  for (size_t l = 0; l < r.leaves.size(); ++l) {
    nlohmann::json b;
    b["index"] = l + 1;
    b["leaf"] = format_row(r.leaves[l]);
    b["size"] = r.block_dims[l];
    b["paths"] = nlohmann::json::array();
    for (const PathSeq& path : r.paths[l]) b["paths"].push_back(format_path(path));
    j["blocks"].push_back(std::move(b));
  }
  if (slack > 0)
    j["slack_block"] = {{"index", nblocks}, {"size", slack}};
  else
    j["slack_block"] = nullptr;
  j["equalities"] = r.equalities.size();
  j["inequalities"] = r.inequalities.size();
  manifest << j.dump(2) << '\n';
}

void emit_reduced_files(const ReducedSdp& r, const std::string& dat_path,
                        const std::string& manifest_path) {
  std::ofstream dat(dat_path);
  if (!dat) throw ValidationError("cannot open " + dat_path);
  std::ofstream manifest(manifest_path);
  if (!manifest) throw ValidationError("cannot open " + manifest_path);
  emit_reduced(r, dat, manifest);
}

namespace {

EquivariantMatrix parse_units(const nlohmann::json& j, int p, int q, int d) {
  EquivariantMatrix x;
  x.p = p;
  x.q = q;
  x.d = d;
  if (!j.contains("entries")) return x;
  for (const auto& e : j.at("entries"))
    x.add(parse_path(e.at("s").get<std::string>()), parse_path(e.at("t").get<std::string>()),
          e.at("value").get<double>());
  return x;
}

InputMatrix parse_input_matrix(const nlohmann::json& j, int p, int q, int d) {
  InputMatrix m;
  const std::string form = j.at("form").get<std::string>();
  if (form == "identity") {
    m.form = MatrixForm::identity;
    m.scale = j.value("scale", 1.0);
  } else if (form == "matrix-units") {
    m.form = MatrixForm::matrix_units;
    m.units = parse_units(j, p, q, d);
  } else if (form == "computational") {
    m.form = MatrixForm::computational_sparse;
    for (const auto& e : j.at("entries")) {
      ComputationalEntry entry;
      entry.ket = e.at("ket").get<std::vector<int>>();
      entry.bra = e.at("bra").get<std::vector<int>>();
      entry.value = e.at("value").get<double>();
      m.entries.push_back(std::move(entry));
    }
  } else if (form == "diagram") {
    m.form = MatrixForm::diagram_combo;
    m.combo = DiagramCombo(p, q);
    for (const auto& t : j.at("terms")) {
      Rat coeff;
      if (t.at("coefficient").is_string())
        coeff = parse_rat(t.at("coefficient").get<std::string>());
      else
        coeff = Rat(t.at("coefficient").get<double>());
      m.combo.add(parse_diagram(t.at("diagram").get<std::string>()), coeff);
    }
  } else {
    throw ValidationError("unknown matrix form " + form);
  }
  return m;
}

}  // namespace

SdpProblem parse_problem(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad problem json: ") + e.what());
  }
  try {
    SdpProblem prob;
    prob.p = j.at("p").get<int>();
    prob.q = j.at("q").get<int>();
    prob.d = j.at("d").get<int>();
    prob.objective = parse_input_matrix(j.at("objective"), prob.p, prob.q, prob.d);
    for (const auto& e : j.value("inequalities", nlohmann::json::array()))
      prob.inequalities.emplace_back(parse_input_matrix(e.at("matrix"), prob.p, prob.q, prob.d),
                                     e.at("bound").get<double>());
    for (const auto& e : j.value("equalities", nlohmann::json::array())) {
      TraceEquality eq;
      eq.lhs = parse_input_matrix(e.at("matrix"), prob.p, prob.q, prob.d);
      eq.kept = e.at("kept").get<int>();
      const int kp = std::min(prob.p, eq.kept);
      eq.rhs = parse_units(e.at("rhs"), kp, eq.kept - kp, prob.d);
      prob.equalities.push_back(std::move(eq));
    }
    return prob;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad problem json: ") + e.what());
  }
}

}  // namespace ptp
