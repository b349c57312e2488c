#pragma once

#include <vector>

#include "ptp/rational.hpp"

namespace ptp {

// Shared integer-tuple type: partitions (nonnegative, usually stripped of
// trailing zeros), staircases (length d, may be negative) and GT-pattern rows.
using Row = std::vector<long long>;
using Partition = Row;

struct Cell {
  long long row = 0, col = 0;  // 1-based
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline long long content(const Cell& c) { return c.col - c.row; }

bool weakly_decreasing(const Row& v);
bool is_partition(const Row& v);     // weakly decreasing, nonnegative
Partition stripped(Partition v);     // drop trailing zeros
Row padded(Row v, size_t len);       // append zeros up to len

long long part_at(const Row& v, size_t i);  // 1-based, 0 beyond stored length
long long num_rows(const Partition& v);     // index of last positive part
long long boxes(const Partition& v);        // total box count

std::vector<Cell> addable_cells(const Partition& v);
std::vector<Cell> removable_cells(const Partition& v);
Partition with_cell_added(const Partition& v, const Cell& c);
Partition with_cell_removed(const Partition& v, const Cell& c);

// standard-tableau count via the hook length formula
Int syt_count(const Partition& v);
// semistandard-tableau count with entries in [d] via the hook content formula
Int ssyt_count(const Partition& v, int d);
// Weyl dimension formula for a weakly decreasing length-d tuple;
// shift-invariant, agrees with ssyt_count on padded partitions
Int weyl_dim(const Row& stair);

// brute-force oracles used by the test suite
Int syt_enumerate(const Partition& v);
Int ssyt_enumerate(const Partition& v, int d);

}  // namespace ptp
