#include "ptp/partition.hpp"

#include <algorithm>
#include <functional>

namespace ptp {

bool weakly_decreasing(const Row& v) {
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] < v[i]) return false;
  return true;
}

bool is_partition(const Row& v) {
  return weakly_decreasing(v) && (v.empty() || v.back() >= 0);
}

Partition stripped(Partition v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

Row padded(Row v, size_t len) {
  if (v.size() > len) throw ValidationError("tuple longer than requested padding length");
  v.resize(len, 0);
  return v;
}

long long part_at(const Row& v, size_t i) {
  return (i >= 1 && i <= v.size()) ? v[i - 1] : 0;
}

long long num_rows(const Partition& v) {
  long long n = 0;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] > 0) n = (long long)i + 1;
  return n;
}

long long boxes(const Partition& v) {
  long long s = 0;
  for (long long x : v) s += x;
  return s;
}

std::vector<Cell> addable_cells(const Partition& v) {
  std::vector<Cell> out;
  long long rows = num_rows(v);
  for (long long i = 1; i <= rows + 1; ++i) {
    long long col = part_at(v, i) + 1;
    if (i == 1 || part_at(v, i - 1) >= col) out.push_back({i, col});
  }
  return out;
}

std::vector<Cell> removable_cells(const Partition& v) {
  std::vector<Cell> out;
  long long rows = num_rows(v);
  for (long long i = 1; i <= rows; ++i) {
    long long col = part_at(v, i);
    if (col > 0 && part_at(v, i + 1) < col) out.push_back({i, col});
  }
  return out;
}

Partition with_cell_added(const Partition& v, const Cell& c) {
  Partition w = v;
  if (c.row > (long long)w.size()) w.resize(c.row, 0);
  if (w[c.row - 1] + 1 != c.col) throw ComputeError("cell is not addable here");
  w[c.row - 1] += 1;
  if (!is_partition(w)) throw ComputeError("adding cell breaks partition shape");
  return stripped(w);
}

Partition with_cell_removed(const Partition& v, const Cell& c) {
  Partition w = v;
  if (c.row > (long long)w.size() || w[c.row - 1] != c.col)
    throw ComputeError("cell is not removable here");
  w[c.row - 1] -= 1;
  if (!is_partition(w)) throw ComputeError("removing cell breaks partition shape");
  return stripped(w);
}

static long long hook_length(const Partition& v, long long i, long long j) {
  long long arm = part_at(v, i) - j;
  long long leg = 0;
  for (long long r = i + 1; part_at(v, r) >= j; ++r) ++leg;
  return arm + leg + 1;
}

Int syt_count(const Partition& v) {
  if (!is_partition(v)) throw ValidationError("not a partition");
  Int num = 1;
  for (long long t = 2; t <= boxes(v); ++t) num *= t;
  Int den = 1;
  for (long long i = 1; i <= num_rows(v); ++i)
    for (long long j = 1; j <= part_at(v, i); ++j) den *= hook_length(v, i, j);
  if (num % den != 0) throw ComputeError("hook length formula gave a non-integer");
  return num / den;
}

Int ssyt_count(const Partition& v, int d) {
  if (!is_partition(v)) throw ValidationError("not a partition");
  if (num_rows(v) > d) return 0;
  Rat m = 1;
  for (long long i = 1; i <= num_rows(v); ++i)
    for (long long j = 1; j <= part_at(v, i); ++j)
      m *= Rat(d + j - i, hook_length(v, i, j));
  return to_int(m);
}

Int weyl_dim(const Row& stair) {
  if (!weakly_decreasing(stair)) throw ValidationError("tuple is not weakly decreasing");
  Rat m = 1;
  long long d = (long long)stair.size();
  for (long long i = 1; i <= d; ++i)
    for (long long j = i + 1; j <= d; ++j)
      m *= Rat(stair[i - 1] - stair[j - 1] + j - i, j - i);
  return to_int(m);
}

Int syt_enumerate(const Partition& v) {
  // grow the shape one box at a time; each growth order is one standard tableau
  std::function<Int(const Partition&)> go = [&](const Partition& cur) -> Int {
    if (boxes(cur) == boxes(v)) return 1;
    Int total = 0;
    for (const Cell& c : addable_cells(cur)) {
      if (c.row > (long long)v.size() || part_at(v, c.row) < c.col) continue;
      total += go(with_cell_added(cur, c));
    }
    return total;
  };
  return go({});
}

Int ssyt_enumerate(const Partition& v, int d) {
  // fill cells row-major with entries in [d]; rows weakly increase,
  // columns strictly increase
  long long rows = num_rows(v);
  std::vector<Row> fill(rows);
  for (long long i = 0; i < rows; ++i) fill[i].assign(v[i], 0);
  std::function<Int(long long, long long)> go = [&](long long i, long long j) -> Int {
    if (i == rows) return 1;
    if (j == (long long)fill[i].size()) return go(i + 1, 0);
    long long lo = 1, hi = d;
    if (j > 0) lo = std::max(lo, fill[i][j - 1]);
    if (i > 0 && j < (long long)fill[i - 1].size()) lo = std::max(lo, fill[i - 1][j] + 1);
    Int total = 0;
    for (long long x = lo; x <= hi; ++x) {
      fill[i][j] = x;
      total += go(i, j + 1);
    }
    fill[i][j] = 0;
    return total;
  };
  return go(0, 0);
}

}  // namespace ptp
