#include "ptp/bratteli.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace ptp {

namespace {

bool desc_lex(const Staircase& a, const Staircase& b) { return a > b; }

}  // namespace

Staircase tower_root(int d) {
  if (d < 1) throw ValidationError("dimension must be positive");
  return Staircase(d, 0);
}

int Tower::index_at_level(int level, const Staircase& s) const {
  if (level < 0 || level >= static_cast<int>(levels.size())) return -1;
  const auto& vs = levels[level];
  const auto it = std::lower_bound(vs.begin(), vs.end(), s, desc_lex);
  return it != vs.end() && *it == s ? static_cast<int>(it - vs.begin()) : -1;
}

bool is_step(const Staircase& from, const Staircase& to, int from_level, int p) {
  if (from.size() != to.size()) return false;
  if (!valid_staircase(from) || !valid_staircase(to)) return false;
  const long long delta = from_level < p ? 1 : -1;
  int changed = -1;
  for (size_t j = 0; j < from.size(); ++j) {
    if (from[j] == to[j]) continue;
    if (changed >= 0 || to[j] - from[j] != delta) return false;
    changed = static_cast<int>(j);
  }
  return changed >= 0;
}

std::vector<Staircase> step_targets(const Staircase& from, int from_level, int p) {
  const int d = static_cast<int>(from.size());
  std::vector<Staircase> out;
  if (from_level < p) {
    for (int j = 0; j < d; ++j) {
      if (j > 0 && from[j - 1] == from[j]) continue;
      Staircase next = from;
      ++next[j];
      out.push_back(std::move(next));
    }
  } else {
    for (int j = 0; j < d; ++j) {
      if (j + 1 < d && from[j] == from[j + 1]) continue;
      Staircase next = from;
      --next[j];
      out.push_back(std::move(next));
    }
  }
  std::sort(out.begin(), out.end(), desc_lex);
  return out;
}

Tower build_tower(int p, int q, int d) {
  if (p < 0 || q < 0 || p + q < 1) throw ValidationError("need at least one tensor slot");
  Tower t{p, q, d, {{tower_root(d)}}, {}};
  for (int l = 0; l < p + q; ++l) {
    std::vector<Staircase> next;
    for (const auto& v : t.levels[l])
      for (auto& w : step_targets(v, l, p)) next.push_back(std::move(w));
    std::sort(next.begin(), next.end(), desc_lex);
    next.erase(std::unique(next.begin(), next.end()), next.end());
    t.levels.push_back(std::move(next));
    t.children.emplace_back();
    for (const auto& v : t.levels[l]) {
      std::vector<int> kids;
      for (const auto& w : step_targets(v, l, p)) kids.push_back(t.index_at_level(l + 1, w));
      t.children[l].push_back(std::move(kids));
    }
  }
  return t;
}

bool valid_path(const PathSeq& seq, int p, int d) {
  if (static_cast<int>(seq.size()) < 2) return false;
  if (seq.front() != tower_root(d)) return false;
  for (size_t l = 0; l + 1 < seq.size(); ++l)
    if (!is_step(seq[l], seq[l + 1], static_cast<int>(l), p)) return false;
  return true;
}

std::vector<PathSeq> paths_to(const Tower& t, const Staircase& leaf) {
  const int n = t.steps();
  const int leaf_idx = t.index_at_level(n, leaf);
  if (leaf_idx < 0) throw ValidationError("leaf not present in the tower");

  // backward reachability pruning
  std::vector<std::vector<char>> reach(n + 1);
  for (int l = 0; l <= n; ++l) reach[l].assign(t.levels[l].size(), 0);
  reach[n][leaf_idx] = 1;
  for (int l = n - 1; l >= 0; --l)
    for (size_t i = 0; i < t.levels[l].size(); ++i)
      for (int c : t.children[l][i])
        if (reach[l + 1][c]) reach[l][i] = 1;

  std::vector<PathSeq> out;
  PathSeq cur{t.levels[0][0]};
  std::function<void(int, int)> dfs = [&](int l, int idx) {
    if (l == n) {
      out.push_back(cur);
      return;
    }
    for (int c : t.children[l][idx]) {
      if (!reach[l + 1][c]) continue;
      cur.push_back(t.levels[l + 1][c]);
      dfs(l + 1, c);
      cur.pop_back();
    }
  };
  if (reach[0][0]) dfs(0, 0);
  return out;
}

Int path_count(const Tower& t, const Staircase& leaf) {
  const int n = t.steps();
  const int leaf_idx = t.index_at_level(n, leaf);
  if (leaf_idx < 0) throw ValidationError("leaf not present in the tower");
  std::vector<Int> count(t.levels[n].size(), 0);
  count[leaf_idx] = 1;
  for (int l = n - 1; l >= 0; --l) {
    std::vector<Int> prev(t.levels[l].size(), 0);
    for (size_t i = 0; i < t.levels[l].size(); ++i)
      for (int c : t.children[l][i]) prev[i] += count[c];
    count = std::move(prev);
  }
  return count[0];
}

long long walled_content_step(const Staircase& pre, const Staircase& post, int from_level,
                              int p) {
  int j = -1;
  for (size_t i = 0; i < pre.size(); ++i)
    if (pre[i] != post[i]) {
      j = static_cast<int>(i);
      break;
    }
  if (j < 0 || !is_step(pre, post, from_level, p)) throw ValidationError("not a tower step");
  const long long pos = j + 1;
  return from_level < p ? (pre[j] + 1) - pos : pos - pre[j];
}

long long walled_content(const PathSeq& seq, int k, int p) {
  if (k < 1 || k >= static_cast<int>(seq.size())) throw ValidationError("step index out of range");
  return walled_content_step(seq[k - 1], seq[k], k - 1, p);
}

std::vector<long long> walled_contents(const PathSeq& seq, int p) {
  std::vector<long long> out;
  for (int k = 1; k < static_cast<int>(seq.size()); ++k) out.push_back(walled_content(seq, k, p));
  return out;
}

long long axial_distance(const PathSeq& seq, int i, int p) {
  return walled_content(seq, i + 1, p) - walled_content(seq, i, p);
}

std::optional<PathSeq> swapped_path(const PathSeq& seq, int i, int p) {
  if (i < 1 || i + 1 >= static_cast<int>(seq.size()))
    throw ValidationError("swap level out of range");
  for (const auto& z : step_targets(seq[i - 1], i - 1, p)) {
    if (z == seq[i] || !is_step(z, seq[i + 1], i, p)) continue;
    PathSeq other = seq;
    other[i] = z;
    return other;
  }
  return std::nullopt;
}

MobileSet mobile_set(const PathSeq& seq, int p, int d) {
  if (p < 1 || p + 1 >= static_cast<int>(seq.size()))
    throw ValidationError("mobile set needs a vertex on each side of the wall");
  MobileSet out;
  {
    int j = -1;
    for (size_t i = 0; i < seq[p].size(); ++i)
      if (seq[p][i] != seq[p - 1][i]) j = static_cast<int>(i);
    out.box = Cell{j + 1, seq[p - 1][j] + 1};
  }
  if (seq[p - 1] != seq[p + 1]) return out;
  out.nonempty = true;
  const Partition lambda = stripped(seq[p - 1]);
  for (const Cell& a : addable_cells(lambda)) {
    if (a.row > d) continue;
    PathSeq member = seq;
    member[p] = padded(with_cell_added(lambda, a), d);
    out.cells.push_back(a);
    out.members.push_back(std::move(member));
  }
  return out;
}

}  // namespace ptp
