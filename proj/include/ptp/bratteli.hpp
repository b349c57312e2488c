#pragma once

#include <optional>
#include <vector>

#include "ptp/partition.hpp"
#include "ptp/staircase.hpp"

namespace ptp {

// Level graph of length-d staircases: the root is the zero vector, the first p
// steps each raise one entry by one, the remaining q steps lower one entry.
struct Tower {
  int p = 0, q = 0, d = 0;
  std::vector<std::vector<Staircase>> levels;           // descending lex within a level
  std::vector<std::vector<std::vector<int>>> children;  // children[l][i] -> level l+1 indices

  int steps() const { return p + q; }
  const std::vector<Staircase>& leaves() const { return levels.back(); }
  int index_at_level(int level, const Staircase& s) const;  // -1 if absent
};

Staircase tower_root(int d);
Tower build_tower(int p, int q, int d);

bool is_step(const Staircase& from, const Staircase& to, int from_level, int p);
// legal next vertices in descending lex order
std::vector<Staircase> step_targets(const Staircase& from, int from_level, int p);

// full vertex sequence of a path, levels 0..p+q
using PathSeq = std::vector<Staircase>;

// all paths from the root to the leaf, ordered lexicographically by vertex
// sequence with vertices compared descending
std::vector<PathSeq> paths_to(const Tower& t, const Staircase& leaf);
Int path_count(const Tower& t, const Staircase& leaf);
bool valid_path(const PathSeq& seq, int p, int d);

// walled content of step k (1-based): raising entry j of v gives (v_j+1)-j,
// lowering gives j-v_j
long long walled_content_step(const Staircase& pre, const Staircase& post, int from_level, int p);
long long walled_content(const PathSeq& seq, int k, int p);
std::vector<long long> walled_contents(const PathSeq& seq, int p);
// difference of the walled contents of steps i+1 and i
long long axial_distance(const PathSeq& seq, int i, int p);

// the path with the level-i vertex replaced by the other compatible
// intermediate vertex, when one exists; 1 <= i <= p+q-1
std::optional<PathSeq> swapped_path(const PathSeq& seq, int i, int p);

// Paths reachable from seq by changing only the level-p vertex. Nonempty only
// when the vertices at levels p-1 and p+1 coincide; then the level-p vertex
// ranges over that partition plus one addable box (at most d rows).
struct MobileSet {
  bool nonempty = false;
  Cell box;                      // box added at step p of seq itself
  std::vector<Cell> cells;       // added box of each member
  std::vector<PathSeq> members;  // same order as cells
};
MobileSet mobile_set(const PathSeq& seq, int p, int d);

}  // namespace ptp
