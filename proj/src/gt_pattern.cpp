#include "ptp/gt_pattern.hpp"

#include <functional>

namespace ptp {

bool interlaces(const Row& lower, const Row& upper) {
  if (lower.size() + 1 != upper.size()) return false;
  for (size_t i = 0; i < lower.size(); ++i)
    if (!(upper[i] >= lower[i] && lower[i] >= upper[i + 1])) return false;
  return true;
}

bool valid_pattern(const GTPattern& m) {
  if (m.rows.empty() || m.rows.back().size() != 1) return false;
  for (size_t k = 0; k + 1 < m.rows.size(); ++k)
    if (!interlaces(m.rows[k + 1], m.rows[k])) return false;
  return true;
}

std::vector<GTPattern> gt_patterns(const Row& shape) {
  if (!weakly_decreasing(shape)) throw ValidationError("pattern shape must weakly decrease");
  if (shape.empty()) throw ValidationError("pattern shape must be nonempty");
  std::vector<GTPattern> out;
  GTPattern cur;
  cur.rows.push_back(shape);
  // fill one row below the current one, entries chosen high to low so the
  // emitted list is in canonical (descending) order
  std::function<void()> fill_next = [&]() {
    const Row upper = cur.rows.back();
    if (upper.size() == 1) {
      out.push_back(cur);
      return;
    }
    Row lower(upper.size() - 1);
    std::function<void(size_t)> choose = [&](size_t i) {
      if (i == lower.size()) {
        cur.rows.push_back(lower);
        fill_next();
        cur.rows.pop_back();
        return;
      }
      for (long long x = upper[i]; x >= upper[i + 1]; --x) {
        lower[i] = x;
        choose(i + 1);
      }
    };
    choose(0);
  };
  fill_next();
  return out;
}

Row pattern_weight(const GTPattern& m) {
  int d = m.dim();
  Row w(d, 0);
  long long prev = 0;
  for (int j = 1; j <= d; ++j) {
    long long s = 0;
    for (long long x : m.row_of_length(j)) s += x;
    w[j - 1] = s - prev;
    prev = s;
  }
  return w;
}

GTPattern fundamental_pattern(int d, int x) {
  if (x < 1 || x > d) throw ValidationError("basis index out of range");
  GTPattern m;
  for (int len = d; len >= 1; --len) {
    Row r(len, 0);
    if (len >= x) r[0] = 1;
    m.rows.push_back(r);
  }
  return m;
}

GTPattern dual_fundamental_pattern(int d, int x) {
  if (x < 1 || x > d) throw ValidationError("basis index out of range");
  GTPattern m;
  for (int len = d; len >= 1; --len) {
    Row r(len, 0);
    if (len >= x) r[len - 1] = -1;
    m.rows.push_back(r);
  }
  return m;
}

std::vector<GTPattern> gt_patterns_of_weight(const Row& shape, const Row& w) {
  std::vector<GTPattern> out;
  for (const GTPattern& m : gt_patterns(shape))
    if (pattern_weight(m) == w) out.push_back(m);
  return out;
}

}  // namespace ptp
