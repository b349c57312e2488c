#include "ptp/pbt.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "ptp/psi.hpp"
#include "ptp/schur.hpp"

namespace ptp {

namespace {

void validate_ports(int p, int d) {
  if (p < 1) throw ValidationError("need at least one port");
  if (d < 1) throw ValidationError("local dimension must be positive");
}

// addable cells keeping at most d+1 rows, the extra row holding at most one box
std::vector<Cell> capped_addable(const Partition& v, int d) {
  std::vector<Cell> out;
  for (const Cell& c : addable_cells(v)) {
    if (c.row > d + 1) continue;
    if (c.row == d + 1 && part_at(v, d + 1) >= 1) continue;
    out.push_back(c);
  }
  return out;
}

PathSeq pad_path(const PathSeq& seq, size_t len) {
  PathSeq out;
  out.reserve(seq.size());
  for (const Staircase& v : seq) out.push_back(padded(v, len));
  return out;
}

// content of the box added at step k (1-based) of a raising-only path
long long step_content(const PathSeq& t, int k) {
  for (size_t j = 0; j < t[k].size(); ++j)
    if (t[k][j] != t[k - 1][j]) return t[k][j] - static_cast<long long>(j + 1);
  throw ComputeError("step adds no box");
}

// adjacent swap i in the orthogonal path form: 1/r on the diagonal and
// sqrt(1 - 1/r^2) toward the path with the intermediate shape swapped, where
// r is the content gap between the boxes added at steps i and i+1
SurdMat yof_generator(const std::vector<PathSeq>& paths, int i) {
  const int n = static_cast<int>(paths.size());
  std::map<PathSeq, int> index;
  for (int a = 0; a < n; ++a) index[paths[a]] = a;
  SurdMat g(n, n);
  for (int a = 0; a < n; ++a) {
    const PathSeq& t = paths[a];
    const long long r = step_content(t, i + 1) - step_content(t, i);
    g.at(a, a) = Surd::of_rat(Rat(1) / Rat(r));
    if (r == 1 || r == -1) continue;
    PathSeq s = t;
    s[i] = t[i - 1];
    for (size_t j = 0; j < t[i + 1].size(); ++j)
      if (t[i + 1][j] != t[i][j]) {
        s[i][j] += 1;
        break;
      }
    auto it = index.find(s);
    if (it == index.end()) throw ComputeError("path family is not swap-closed");
    if (a < it->second) {
      const Surd off = Surd::sqrt_of(Rat(r * r - 1, r * r));
      g.at(a, it->second) = off;
      g.at(it->second, a) = off;
    }
  }
  return g;
}

// rank-one sum over shared prefixes: for every path group agreeing up to level
// p-1 and sitting over the leaf shape there, entries sqrt(c_a*c_b)/(p*c_leaf)
// with c the box-adding path counts of the level-p shapes
ExactMat amplitude_projector(const std::vector<PathSeq>& paths, const Partition& leaf, int p) {
  const int n = static_cast<int>(paths.size());
  const Int dl = syt_count(leaf);
  std::map<PathSeq, std::vector<int>> groups;
  for (int a = 0; a < n; ++a) {
    const PathSeq& t = paths[a];
    if (stripped(t[p - 1]) != leaf) continue;
    groups[PathSeq(t.begin(), t.begin() + p)].push_back(a);
  }
  ExactMat e(n, n);
  for (const auto& [prefix, members] : groups)
    for (int a : members)
      for (int b : members) {
        const Int da = syt_count(stripped(paths[a][p]));
        const Int db = syt_count(stripped(paths[b][p]));
        e.at(a, b) = SurdSum::sqrt_of(Rat(da * db, Int(p) * p * dl * dl));
      }
  return e;
}

// conjugates x through the cyclic word built from the adjacent swaps, filling
// out[k] with the k-fold shift of x; out[0] completes to the identity
std::vector<ExactMat> cyclic_family(const ExactMat& x, const std::vector<SurdMat>& gens, int p) {
  ExactMat pi = ExactMat::identity(x.rows);
  for (const SurdMat& g : gens) pi = pi * to_exact(g);
  std::vector<ExactMat> out(p + 1, ExactMat(x.rows, x.rows));
  out[p] = x;
  for (int k = 1; k < p; ++k) out[p - k] = pi.transposed() * out[p - k + 1] * pi;
  ExactMat total(x.rows, x.rows);
  for (int k = 1; k <= p; ++k) total = total + out[k];
  out[0] = ExactMat::identity(x.rows) - total;
  return out;
}

std::vector<PathSeq> enumerate_dilated(const Partition& leaf, int p, int d) {
  std::set<Partition> tops;
  for (const Cell& c : capped_addable(leaf, d)) tops.insert(with_cell_added(leaf, c));
  std::vector<PathSeq> out;
  PathSeq cur = {padded({}, d + 1)};
  auto dfs = [&](auto&& self, const Partition& shape, int level) -> void {
    if (level == p) {
      if (!tops.count(shape)) return;
      PathSeq full = cur;
      full.push_back(padded(leaf, d + 1));
      out.push_back(full);
      return;
    }
    for (const Cell& c : capped_addable(shape, d)) {
      const Partition next = with_cell_added(shape, c);
      cur.push_back(padded(next, d + 1));
      self(self, next, level + 1);
      cur.pop_back();
    }
  };
  dfs(dfs, Partition{}, 0);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace

std::map<PathSeq, Rat> rho_spectrum(int p, int d) {
  validate_ports(p, d);
  const Tower t = build_tower(p, 1, d);
  std::map<PathSeq, Rat> out;
  for (const Staircase& leaf : t.leaves())
    for (const PathSeq& path : paths_to(t, leaf)) {
      const std::vector<long long> wc = walled_contents(path, p);
      out[path] = Rat(d) - Rat(wc.back());
    }
  return out;
}

ExactMat PbtBlock::compress(const ExactMat& x) const {
  const int n = static_cast<int>(embed.size());
  ExactMat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = x.at(embed[i], embed[j]);
  return out;
}

static PbtMeasurement build_blocks(int p, int d, bool dilate) {
  validate_ports(p, d);
  const Tower t = build_tower(p, 1, d);
  PbtMeasurement m;
  m.p = p;
  m.d = d;
  for (const Staircase& leaf : t.leaves()) {
    if (*std::min_element(leaf.begin(), leaf.end()) < 0) {
      m.silent.push_back(leaf);
      continue;
    }
    PbtBlock b;
    b.leaf = leaf;
    b.paths = paths_to(t, leaf);
    const Partition shape = stripped(leaf);

    std::vector<PathSeq> padded_paths;
    padded_paths.reserve(b.paths.size());
    for (const PathSeq& s : b.paths) padded_paths.push_back(pad_path(s, d + 1));

    std::vector<SurdMat> orig_gens;
    for (int i = 1; i <= p - 1; ++i) orig_gens.push_back(yof_generator(padded_paths, i));
    ExactMat ep(static_cast<int>(b.paths.size()), static_cast<int>(b.paths.size()));
    ep = amplitude_projector(padded_paths, shape, p);
    b.povm = cyclic_family(ep, orig_gens, p);

    if (dilate) {
      b.dilated = enumerate_dilated(shape, p, d);
      std::map<PathSeq, int> where;
      for (int i = 0; i < static_cast<int>(b.dilated.size()); ++i) where[b.dilated[i]] = i;
      for (const PathSeq& s : padded_paths) {
        auto it = where.find(s);
        if (it == where.end()) throw ComputeError("original path missing from the dilation");
        b.embed.push_back(it->second);
      }
      for (int i = 1; i <= p - 1; ++i) b.gens.push_back(yof_generator(b.dilated, i));
      const ExactMat pp = amplitude_projector(b.dilated, shape, p);
      b.pvm = cyclic_family(pp, b.gens, p);
    }
    m.blocks.push_back(std::move(b));
  }
  return m;
}

PbtMeasurement build_povm(int p, int d) { return build_blocks(p, d, false); }

PbtMeasurement build_dilated_pvm(int p, int d) { return build_blocks(p, d, true); }

WRotation w_rotation(const Partition& shape, int p, int d) {
  validate_ports(p, d);
  if (!is_partition(shape)) throw ValidationError("shape is not a partition");
  if (boxes(shape) != p - 1) throw ValidationError("shape box count differs from p-1");
  if (num_rows(shape) > d) throw ValidationError("shape has more rows than the local dimension");
  WRotation w;
  w.shape = stripped(shape);
  const Int dl = syt_count(w.shape);
  const std::vector<Cell> cells = capped_addable(w.shape, d);
  const int n = static_cast<int>(cells.size());
  Vec x(n);
  for (int i = 0; i < n; ++i) {
    w.grown.push_back(with_cell_added(w.shape, cells[i]));
    x(i) = std::sqrt(to_double(Rat(syt_count(w.grown.back()), Int(p) * dl)));
  }
  Mat rot = Mat::Identity(n, n);
  const double gap = 1.0 - x(0);
  if (gap > 1e-14) {
    Vec v = x;
    v(0) -= 1.0;
    rot -= (v * v.transpose()) / gap;
  }
  w.matrix = rot;
  return w;
}

std::vector<Mat> povm_dense(const PbtMeasurement& m, long long cap) {
  const int p = m.p, d = m.d;
  const Tower t = build_tower(p, 1, d);
  const long long dim = dense_dim_checked(d, p + 1, cap);
  const Mat u = build_usch(p, 1, d, cap);
  const std::vector<SchurLabel> labels = schur_labels(t);
  std::map<PathSeq, int> first, count;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
    if (!first.count(labels[i].path)) first[labels[i].path] = i;
    ++count[labels[i].path];
  }
  std::vector<Mat> out;
  for (int k = 0; k <= p; ++k) {
    Mat b = Mat::Zero(dim, dim);
    if (k == 0)
      for (const Staircase& leaf : m.silent)
        for (const PathSeq& path : paths_to(t, leaf)) {
          const int f = first.at(path);
          for (int j = 0; j < count.at(path); ++j) b(f + j, f + j) = 1.0;
        }
    for (const PbtBlock& blk : m.blocks)
      for (size_t s = 0; s < blk.paths.size(); ++s)
        for (size_t r = 0; r < blk.paths.size(); ++r) {
          const double v = blk.povm[k].at(static_cast<int>(s), static_cast<int>(r)).value();
          if (v == 0.0) continue;
          const int fs = first.at(blk.paths[s]);
          const int fr = first.at(blk.paths[r]);
          for (int j = 0; j < count.at(blk.paths[s]); ++j) b(fs + j, fr + j) = v;
        }
    out.push_back(u.transpose() * b * u);
  }
  return out;
}

PbtOutcome simulate_pbt(int p, int d, const Vec& input_state, unsigned long long seed) {
  validate_ports(p, d);
  if (input_state.size() != d) throw ValidationError("input state length differs from the local dimension");
  const double nrm = input_state.norm();
  if (nrm < 1e-12) throw ValidationError("input state is zero");
  const Vec psi = input_state / nrm;
  dense_dim_checked(d, 2 * p + 1, 2000000);

  const PbtMeasurement m = build_povm(p, d);
  const std::vector<Mat> e = povm_dense(m);
  long long da = 1, db = 1;
  for (int i = 0; i < p + 1; ++i) da *= d;
  for (int i = 0; i < p; ++i) db *= d;

  // sender index = (ports, input symbol); the resource pairs force the
  // receiver's index to copy the port digits
  Mat paired = Mat::Zero(da, db);
  const double amp = std::pow(static_cast<double>(d), -0.5 * p);
  for (long long a = 0; a < da; ++a) paired(a, a / d) = psi(a % d) * amp;

  PbtOutcome res;
  res.probabilities.assign(p + 1, 0.0);
  res.fidelities.assign(p + 1, 0.0);
  res.conditional.assign(p + 1, Mat());
  for (int k = 0; k <= p; ++k) {
    const Mat rho_b = paired.transpose() * e[k] * paired;
    res.probabilities[k] = rho_b.trace();
    if (k == 0) continue;
    // reduce to port k, the k-th digit of the receiver index
    long long pre_n = 1, suf_n = 1;
    for (int i = 0; i < k - 1; ++i) pre_n *= d;
    for (int i = 0; i < p - k; ++i) suf_n *= d;
    Mat port = Mat::Zero(d, d);
    for (long long pre = 0; pre < pre_n; ++pre)
      for (long long suf = 0; suf < suf_n; ++suf)
        for (int x = 0; x < d; ++x)
          for (int y = 0; y < d; ++y)
            port(x, y) += rho_b((pre * d + x) * suf_n + suf, (pre * d + y) * suf_n + suf);
    const double pr = res.probabilities[k];
    if (pr > 1e-14) {
      port /= pr;
      res.conditional[k] = port;
      res.fidelities[k] = psi.dot(port * psi);
    }
  }

  std::mt19937_64 rng(seed);
  std::vector<double> weights = res.probabilities;
  for (double& w : weights) w = std::max(w, 0.0);
  std::discrete_distribution<int> dist(weights.begin(), weights.end());
  res.sampled = dist(rng);
  return res;
}

}  // namespace ptp
