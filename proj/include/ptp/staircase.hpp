#pragma once

#include <utility>

#include "ptp/partition.hpp"

namespace ptp {

// Weakly decreasing integer tuple of fixed length d. Encodes a pair of
// partitions (left, right) with num_rows(left) + num_rows(right) <= d:
// entries[i] = left[i] - right[d+1-i] in 1-based terms.
using Staircase = Row;

struct MixedDiagram {
  Partition left, right;
  int d = 0;
  friend bool operator==(const MixedDiagram&, const MixedDiagram&) = default;
};

bool valid_mixed(const MixedDiagram& m);
bool valid_staircase(const Staircase& s);

Staircase to_staircase(const MixedDiagram& m);
MixedDiagram mixed_from_staircase(const Staircase& s);

// shift by s = right[0]: returns the padded partition (entries + s) and s
std::pair<Row, long long> walled_concatenation(const Staircase& s);

}  // namespace ptp
