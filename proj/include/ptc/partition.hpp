#pragma once

#include <string>
#include <vector>

namespace ptc {

// A set partition of {0..n-1} in canonical form: every block sorted
// ascending, blocks ordered by their minimum.  Ordered by refinement,
// these form the full partition lattice; dropping the discrete and
// indiscrete elements leaves the proper part.
struct Partition {
  int n = 0;
  std::vector<std::vector<int>> blocks;

  static Partition discrete(int n);
  static Partition indiscrete(int n);
  // Validates and canonicalizes; throws std::invalid_argument on bad input.
  static Partition from_blocks(int n, std::vector<std::vector<int>> blocks);
  // Builds from a block-id-per-element vector (ids arbitrary).
  static Partition from_labels(const std::vector<int>& labels);

  bool is_discrete() const { return static_cast<int>(blocks.size()) == n; }
  bool is_indiscrete() const { return blocks.size() == 1 && n >= 1; }
  int num_blocks() const { return static_cast<int>(blocks.size()); }

  // Block id of each element (position in `blocks`).
  std::vector<int> labels() const;

  // true iff every block of *this is contained in a block of other (this <= other).
  bool refines(const Partition& other) const;

  // 1-based rendering, e.g. "12|3|45".  Blocks separated by '|'.
  std::string str() const;

  bool operator==(const Partition& other) const {
    return n == other.n && blocks == other.blocks;
  }
  bool operator!=(const Partition& other) const { return !(*this == other); }
  bool operator<(const Partition& other) const { return blocks < other.blocks; }
};

// Common refinement: blocks are the nonempty pairwise intersections.
Partition partition_meet(const Partition& p, const Partition& q);
// Transitive closure of the union relation (union-find over both block sets).
Partition partition_join(const Partition& p, const Partition& q);

// Enumerates all partitions of {0..n-1} in restricted-growth-string order
// (so the indiscrete partition 0..0 comes first and the discrete one last;
// index order is *not* a linear extension of refinement).
std::vector<Partition> all_partitions(int n);

}  // namespace ptc
