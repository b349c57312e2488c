#pragma once

#include "ptp/partition.hpp"

namespace ptp {

// Triangular pattern: rows[0] has length d (the shape), each following row is
// one shorter, down to length 1. Entries interlace between consecutive rows.
struct GTPattern {
  std::vector<Row> rows;

  int dim() const { return (int)rows.size(); }
  const Row& top() const { return rows.front(); }
  // row with j entries, 1 <= j <= d
  const Row& row_of_length(int j) const { return rows[rows.size() - j]; }

  friend bool operator==(const GTPattern&, const GTPattern&) = default;
};

// lower has one entry fewer than upper: upper[i] >= lower[i] >= upper[i+1]
bool interlaces(const Row& lower, const Row& upper);
bool valid_pattern(const GTPattern& m);

// all patterns with the given top row, in canonical order: descending
// lexicographic on the concatenation of the rows below the top
std::vector<GTPattern> gt_patterns(const Row& shape);

// weight[j-1] = (sum of row with j entries) - (sum of row with j-1 entries)
Row pattern_weight(const GTPattern& m);

// the pattern of shape (1,0,...,0) whose weight is the x-th unit vector
GTPattern fundamental_pattern(int d, int x);
// the pattern of shape (0,...,0,-1) whose weight is minus the x-th unit vector
GTPattern dual_fundamental_pattern(int d, int x);

// patterns with the given top row and weight, in canonical order
std::vector<GTPattern> gt_patterns_of_weight(const Row& shape, const Row& w);

}  // namespace ptp
