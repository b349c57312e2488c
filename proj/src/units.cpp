#include "ptp/units.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace ptp {

MatrixUnit matrix_unit(const PathSeq& s, const PathSeq& t) {
  if (s.empty() || t.empty() || s.size() != t.size() || s.back() != t.back())
    throw ValidationError("matrix unit needs two paths into the same leaf");
  return MatrixUnit{s.back(), s, t};
}

namespace {

// spectral projection onto the step-content word of one path: the product
// over levels k >= 2 of (J_k - c) / (word_k - c) with c running over every
// other step content realized at level k
Mat content_projector(const std::vector<Mat>& jm,
                      const std::vector<std::vector<long long>>& values,
                      const std::vector<long long>& word, long long dim) {
  Mat acc = Mat::Identity(dim, dim);
  for (size_t k = 0; k < jm.size(); ++k) {
    const long long own = word[k + 1];
    for (long long c : values[k]) {
      if (c == own) continue;
      acc = (jm[k] * acc - static_cast<double>(c) * acc) / static_cast<double>(own - c);
    }
  }
  return acc;
}

}  // namespace

UnitBuilder::UnitBuilder(const IrrepSet& irr, long long cap) : irr_(&irr) {
  const int n = irr.p + irr.q;
  const int d = irr.d;
  dim_ = dense_dim_checked(d, n, cap);

  std::vector<Mat> jm;
  for (int k = 2; k <= n; ++k) jm.push_back(psi_dense(jm_element(k, irr.p, irr.q, d), d, cap));

  // step contents per path; the full word must pin down the path, otherwise
  // the joint projection would mix basis vectors of different paths
  std::vector<std::vector<long long>> values(n >= 2 ? n - 1 : 0);
  std::set<std::vector<long long>> seen;
  for (const auto& basis : irr.bases)
    for (const auto& path : basis.paths) {
      std::vector<long long> w = walled_contents(path, irr.p);
      if (!seen.insert(w).second)
        throw ValidationError("step-content words do not separate the paths");
      for (int k = 2; k <= n; ++k) values[k - 2].push_back(w[k - 1]);
    }
  for (auto& v : values) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  std::vector<SpMat> gens;
  for (int i = 1; i <= n - 1; ++i) gens.push_back(psi_sparse(generator(i, irr.p, irr.q), d));

  to_base_.resize(irr.bases.size());
  for (size_t l = 0; l < irr.bases.size(); ++l) {
    const IrrepBasis& basis = irr.bases[l];
    const int blockdim = basis.dim();

    // spanning tree over single-generator moves, rooted at the first path
    std::vector<Hop> tree(blockdim);
    std::vector<char> done(blockdim, 0);
    std::vector<int> order;
    order.reserve(blockdim);
    std::queue<int> bfs;
    bfs.push(0);
    done[0] = 1;
    while (!bfs.empty()) {
      const int at = bfs.front();
      bfs.pop();
      order.push_back(at);
      for (int i = 1; i <= n - 1; ++i) {
        const SurdMat& g = irr.gens[l][i - 1];
        for (int to = 0; to < blockdim; ++to) {
          if (done[to] || to == at || g.at(to, at).is_zero()) continue;
          tree[to] = Hop{at, i, g.at(to, at).value()};
          done[to] = 1;
          bfs.push(to);
        }
      }
    }
    if (static_cast<int>(order.size()) != blockdim)
      throw ValidationError("generator moves do not connect the path basis of a leaf");

    to_base_[l].resize(blockdim);
    for (int at : order) {
      if (tree[at].parent < 0) {
        to_base_[l][at] =
            content_projector(jm, values, walled_contents(basis.paths[at], irr.p), dim_);
      } else {
        const Hop& h = tree[at];
        Mat lifted = gens[h.gen - 1] * to_base_[l][h.parent];
        Mat proj =
            content_projector(jm, values, walled_contents(basis.paths[at], irr.p), dim_);
        to_base_[l][at] = (proj * lifted) / h.amp;
      }
    }
  }
}

Mat UnitBuilder::unit_dense(const MatrixUnit& u) const { return unit_dense(u.s, u.t); }

Mat UnitBuilder::unit_dense(const PathSeq& s, const PathSeq& t) const {
  const MatrixUnit u = matrix_unit(s, t);
  const int l = irr_->leaf_index(u.leaf);
  const IrrepBasis& basis = irr_->bases[l];
  const int is = basis.index_of(s);
  const int it = basis.index_of(t);
  return to_base_[l][is] * to_base_[l][it].transpose();
}

Mat matrix_unit_dense(const MatrixUnit& u, int p, int q, int d, long long cap) {
  const IrrepSet irr = build_irreps(p, q, d);
  const UnitBuilder builder(irr, cap);
  return builder.unit_dense(u);
}

}  // namespace ptp
