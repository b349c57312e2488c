#include "ptp/staircase.hpp"

namespace ptp {

bool valid_mixed(const MixedDiagram& m) {
  return is_partition(m.left) && is_partition(m.right) && m.d >= 1 &&
         num_rows(m.left) + num_rows(m.right) <= m.d;
}

bool valid_staircase(const Staircase& s) {
  return !s.empty() && weakly_decreasing(s);
}

Staircase to_staircase(const MixedDiagram& m) {
  if (!is_partition(m.left) || !is_partition(m.right))
    throw ValidationError("mixed diagram sides must be partitions");
  if (!valid_mixed(m))
    throw ValidationError("mixed diagram does not fit in the given length");
  Staircase s((size_t)m.d);
  for (long long i = 1; i <= m.d; ++i)
    s[i - 1] = part_at(m.left, i) - part_at(m.right, m.d + 1 - i);
  return s;
}

MixedDiagram mixed_from_staircase(const Staircase& s) {
  if (!valid_staircase(s)) throw ValidationError("staircase must weakly decrease");
  int d = (int)s.size();
  MixedDiagram m;
  m.d = d;
  for (long long i = 1; i <= d; ++i) {
    long long v = s[i - 1];
    if (v > 0) m.left.push_back(v);
  }
  for (long long j = 1; j <= d; ++j) {
    long long v = s[d - j];
    if (v < 0) m.right.push_back(-v);
  }
  return m;
}

std::pair<Row, long long> walled_concatenation(const Staircase& s) {
  if (!valid_staircase(s)) throw ValidationError("staircase must weakly decrease");
  long long shift = s.back() < 0 ? -s.back() : 0;
  Row hat = s;
  for (auto& x : hat) x += shift;
  return {hat, shift};
}

}  // namespace ptp
