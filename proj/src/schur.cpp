#include "ptp/schur.hpp"

#include <map>
#include <tuple>
#include <utility>

#include "ptp/parallel.hpp"
#include "ptp/psi.hpp"

namespace ptp {

CGKind level_kind(int k, int p) { return k <= p ? CGKind::plus : CGKind::minus; }

GTPattern trivial_pattern(int d) {
  if (d < 1) throw ValidationError("dimension must be positive");
  std::vector<Row> rows;
  for (int j = d; j >= 1; --j) rows.emplace_back(static_cast<size_t>(j), 0);
  return GTPattern{std::move(rows)};
}

Row weight_balance(const std::vector<int>& x, int k, int p, int d) {
  if (k > static_cast<int>(x.size())) throw ValidationError("weight prefix too long");
  Row w(d, 0);
  for (int t = 1; t <= k; ++t) {
    if (x[t - 1] < 1 || x[t - 1] > d) throw ValidationError("symbol out of range");
    w[x[t - 1] - 1] += t <= p ? 1 : -1;
  }
  return w;
}

namespace {

// position where `to` bumps `from` by delta, 0 when equal, -1 otherwise
int step_position(const Staircase& from, const Staircase& to, int delta) {
  if (from.size() != to.size()) return -1;
  int pos = 0;
  for (size_t t = 0; t < from.size(); ++t) {
    if (from[t] == to[t]) continue;
    if (pos != 0 || to[t] != from[t] + delta) return -1;
    pos = static_cast<int>(t) + 1;
  }
  return pos;
}

Mat fill_cg(CGKind kind, int x, const std::vector<GTPattern>& cols,
            const std::vector<GTPattern>& rows, bool reachable) {
  Mat out = Mat::Zero(rows.size(), cols.size());
  if (!reachable) return out;
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < cols.size(); ++c)
      out(static_cast<int>(r), static_cast<int>(c)) =
          cg_coefficient(kind, x, cols[c], rows[r]).value();
  return out;
}

}  // namespace

Mat cg_matrix(CGKind kind, int x, const Staircase& lambda, const Staircase& mu) {
  const bool reachable = step_position(lambda, mu, cg_delta(kind)) > 0;
  return fill_cg(kind, x, gt_patterns(lambda), gt_patterns(mu), reachable);
}

Mat cg_submatrix(CGKind kind, int x, const Staircase& lambda, const Staircase& mu,
                 const Row& col_weight) {
  if (x < 1 || x > static_cast<int>(col_weight.size()))
    throw ValidationError("symbol out of range");
  Row row_weight = col_weight;
  row_weight[x - 1] += cg_delta(kind);
  const bool reachable = step_position(lambda, mu, cg_delta(kind)) > 0;
  return fill_cg(kind, x, gt_patterns_of_weight(lambda, col_weight),
                 gt_patterns_of_weight(mu, row_weight), reachable);
}

Vec schur_chain(int p, const PathSeq& path, const std::vector<int>& x) {
  const int n = static_cast<int>(path.size()) - 1;
  if (n < 1 || p < 0 || p > n) throw ValidationError("bad path length");
  if (static_cast<int>(x.size()) != n) throw ValidationError("symbol count differs from path length");
  const int d = static_cast<int>(path.front().size());

  // every level couples one symbol, starting from the trivial pattern; the
  // first step then carries the computational-to-pattern conversion signs
  std::vector<GTPattern> cur = {trivial_pattern(d)};
  Vec v = Vec::Ones(1);
  for (int k = 1; k <= n; ++k) {
    const CGKind kind = level_kind(k, p);
    const std::vector<GTPattern> next =
        gt_patterns_of_weight(path[k], weight_balance(x, k, p, d));
    Vec w = Vec::Zero(next.size());
    for (size_t r = 0; r < next.size(); ++r)
      for (size_t c = 0; c < cur.size(); ++c)
        w(static_cast<int>(r)) +=
            cg_coefficient(kind, x[k - 1], cur[c], next[r]).value() * v(static_cast<int>(c));
    cur = std::move(next);
    v = std::move(w);
  }
  return v;
}

double schur_entry(int p, const PathSeq& path, const GTPattern& pattern,
                   const std::vector<int>& x) {
  const int n = static_cast<int>(path.size()) - 1;
  const int d = pattern.dim();
  if (n < 1) throw ValidationError("bad path length");
  if (pattern.top() != path.back()) throw ValidationError("pattern shape differs from the path leaf");
  if (pattern_weight(pattern) != weight_balance(x, n, p, d)) return 0.0;

  const Vec v = schur_chain(p, path, x);
  const std::vector<GTPattern> block =
      gt_patterns_of_weight(path.back(), weight_balance(x, n, p, d));
  for (size_t r = 0; r < block.size(); ++r)
    if (block[r] == pattern) return v(static_cast<int>(r));
  return 0.0;
}

std::vector<SchurLabel> schur_labels(const Tower& t) {
  std::vector<SchurLabel> out;
  for (const Staircase& leaf : t.leaves()) {
    const auto paths = paths_to(t, leaf);
    const auto patterns = gt_patterns(leaf);
    for (const PathSeq& seq : paths)
      for (const GTPattern& m : patterns) out.push_back({seq, m});
  }
  return out;
}

Mat cg_layer(int p, int q, int d) {
  if (p + q < 2) throw ValidationError("coupling layer needs at least two factors");
  const int n = p + q;
  const Tower outer = build_tower(p, q, d);
  const Tower inner = q >= 1 ? build_tower(p, q - 1, d) : build_tower(p - 1, 0, d);
  const auto rows = schur_labels(outer);
  const auto cols = schur_labels(inner);
  const CGKind kind = level_kind(n, p);
  Mat out = Mat::Zero(rows.size(), cols.size() * d);
  for (size_t r = 0; r < rows.size(); ++r) {
    for (size_t c = 0; c < cols.size(); ++c) {
      if (!std::equal(cols[c].path.begin(), cols[c].path.end(), rows[r].path.begin()))
        continue;
      for (int x = 1; x <= d; ++x)
        out(static_cast<int>(r), static_cast<int>(c) * d + x - 1) =
            cg_coefficient(kind, x, cols[c].pattern, rows[r].pattern).value();
    }
  }
  return out;
}

namespace {

// ranks labels like schur_labels order and maps (path, pattern rows) to rows
struct LabelIndex {
  std::map<std::pair<PathSeq, std::vector<Row>>, int> pos;

  explicit LabelIndex(const std::vector<SchurLabel>& labels) {
    for (size_t i = 0; i < labels.size(); ++i)
      pos.emplace(std::make_pair(labels[i].path, labels[i].pattern.rows),
                  static_cast<int>(i));
  }
  int at(const PathSeq& seq, const GTPattern& m) const {
    auto it = pos.find(std::make_pair(seq, m.rows));
    if (it == pos.end()) throw ComputeError("transform label missing from the index");
    return it->second;
  }
};

}  // namespace

Mat build_usch(int p, int q, int d, long long cap) {
  const int n = p + q;
  if (n < 1) throw ValidationError("need at least one tensor factor");
  const long long dim = dense_dim_checked(d, n, cap);
  const Tower t = build_tower(p, q, d);
  const auto labels = schur_labels(t);
  if (static_cast<long long>(labels.size()) != dim)
    throw ComputeError("label count differs from the space dimension");
  const LabelIndex index(labels);

  Mat out = Mat::Zero(dim, dim);
  for (long long col = 0; col < dim; ++col) {
    const std::vector<int> digits = multi_index(col, d, n);
    std::vector<int> x(n);
    for (int k = 0; k < n; ++k) x[k] = digits[k] + 1;

    // amplitude per (path prefix, pattern) after each coupling step
    std::map<std::pair<PathSeq, std::vector<Row>>, double> state;
    state[{PathSeq{tower_root(d)}, trivial_pattern(d).rows}] = 1.0;
    for (int k = 1; k <= n; ++k) {
      const CGKind kind = level_kind(k, p);
      std::map<std::pair<PathSeq, std::vector<Row>>, double> next;
      for (const auto& [key, amp] : state) {
        const GTPattern m{key.second};
        for (const Staircase& target : step_targets(key.first.back(), k - 1, p)) {
          PathSeq extended = key.first;
          extended.push_back(target);
          for (const GTPattern& nn :
               gt_patterns_of_weight(target, weight_balance(x, k, p, d))) {
            const double c = cg_coefficient(kind, x[k - 1], m, nn).value();
            if (c != 0.0) next[{extended, nn.rows}] += amp * c;
          }
        }
      }
      state = std::move(next);
    }
    for (const auto& [key, amp] : state)
      out(index.at(key.first, GTPattern{key.second}), col) = amp;
  }
  return out;
}

Mat build_usch_mps(int p, int q, int d, bool parallel, long long cap) {
  const int n = p + q;
  if (n < 1) throw ValidationError("need at least one tensor factor");
  const long long dim = dense_dim_checked(d, n, cap);
  const Tower t = build_tower(p, q, d);
  const auto labels = schur_labels(t);
  if (static_cast<long long>(labels.size()) != dim)
    throw ComputeError("label count differs from the space dimension");

  // read-mostly coupling-matrix cache, filled before the parallel sweep
  std::map<std::tuple<int, int, Staircase, Staircase>, Mat> cache;
  for (int k = 1; k <= n; ++k) {
    const CGKind kind = level_kind(k, p);
    for (const Staircase& from : t.levels[k - 1])
      for (const Staircase& to : step_targets(from, k - 1, p))
        for (int x = 1; x <= d; ++x)
          cache.try_emplace(std::make_tuple(k <= p ? 1 : -1, x, from, to),
                            cg_matrix(kind, x, from, to));
  }

  // pattern rank within gt_patterns(leaf) order, per distinct leaf
  std::map<Staircase, std::map<std::vector<Row>, int>> pattern_rank;
  for (const Staircase& leaf : t.leaves()) {
    auto& ranks = pattern_rank[leaf];
    const auto patterns = gt_patterns(leaf);
    for (size_t i = 0; i < patterns.size(); ++i)
      ranks.emplace(patterns[i].rows, static_cast<int>(i));
  }

  Mat out = Mat::Zero(dim, dim);
  parallel_for(static_cast<int>(dim), parallel, [&](int row) {
    const SchurLabel& label = labels[static_cast<size_t>(row)];
    const int target = pattern_rank.at(label.path.back()).at(label.pattern.rows);
    std::vector<int> x(n);
    for (long long col = 0; col < dim; ++col) {
      const std::vector<int> digits = multi_index(col, d, n);
      for (int k = 0; k < n; ++k) x[k] = digits[k] + 1;
      Vec v = Vec::Ones(1);
      for (int k = 1; k <= n; ++k) {
        const auto& c = cache.at(std::make_tuple(
            k <= p ? 1 : -1, x[k - 1], label.path[k - 1], label.path[k]));
        v = (c * v).eval();
      }
      out(row, col) = v(target);
    }
  });
  return out;
}

std::vector<long long> bond_dimensions(const PathSeq& path, int d) {
  std::vector<long long> out;
  out.reserve(path.size());
  for (const Staircase& s : path) {
    if (static_cast<int>(s.size()) != d) throw ValidationError("staircase length differs from d");
    out.push_back(static_cast<long long>(gt_patterns(s).size()));
  }
  return out;
}

}  // namespace ptp
