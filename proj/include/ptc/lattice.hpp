#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ptc/partition.hpp"
#include "ptc/perm.hpp"

namespace ptc {

// A chain is a list of element indices in strictly increasing *lattice*
// order (front = least).  Element indices themselves need not respect the
// order, so chains are generally not numerically sorted.
using Chain = std::vector<int>;

// A finite lattice over elements 0..size-1 with a precomputed order
// bit-matrix.  Meets and joins are computed on demand (either by a
// caller-supplied function or generically from the order) and memoized.
class FiniteLattice {
 public:
  using BinOp = std::function<int(int, int)>;

  // leq(a, b) must be a partial order with a unique minimum and maximum.
  FiniteLattice(int size, const std::function<bool(int, int)>& leq,
                BinOp meet_fn = nullptr, BinOp join_fn = nullptr);

  int size() const { return size_; }
  bool leq(int a, int b) const {
    return (down_[static_cast<size_t>(b) * words_ + a / 64] >> (a % 64)) & 1;
  }
  bool lt(int a, int b) const { return a != b && leq(a, b); }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  int meet(int a, int b) const;
  int join(int a, int b) const;

  // All z with a < z < b (ascending).
  std::vector<int> open_interval(int a, int b) const;
  // x^perp: all proper y with meet(x,y)=bottom and join(x,y)=top.
  std::vector<int> complement_set(int x) const;

  // Length of the longest strict chain (number of elements minus one).
  int height() const;

  // Checks the lattice axioms exhaustively; returns an error description
  // or nullopt.  Quadratic in size, for test fixtures only.
  std::optional<std::string> validate() const;

  // Raw down-set row of b as a bitmask span (words() words per row).
  const uint64_t* down_row(int b) const { return &down_[static_cast<size_t>(b) * words_]; }
  int words() const { return words_; }

 private:
  int generic_meet(int a, int b) const;

  int size_ = 0;
  int words_ = 0;
  std::vector<uint64_t> down_;  // down_[b] = bitmask of {a : a <= b}
  std::vector<uint64_t> up_;    // up_[a] = bitmask of {b : a <= b}
  int bottom_ = -1, top_ = -1;
  BinOp meet_fn_, join_fn_;
  mutable std::unordered_map<uint64_t, int> meet_memo_, join_memo_;
};

// A closed interval [a,b] of a parent lattice, with the index maps kept.
struct IntervalLattice {
  std::shared_ptr<const FiniteLattice> parent;
  std::shared_ptr<FiniteLattice> lattice;
  std::vector<int> to_parent;             // sub index -> parent index
  std::unordered_map<int, int> to_sub;    // parent index -> sub index
};

IntervalLattice interval(std::shared_ptr<const FiniteLattice> parent, int a, int b);

// The lattice of all set partitions of {0..n-1}, ordered by refinement.
struct PartitionLattice {
  int n = 0;
  std::vector<Partition> elements;                 // restricted-growth order
  std::unordered_map<std::string, int> index_map;  // keyed by Partition::str()
  std::shared_ptr<FiniteLattice> order;

  int index_of(const Partition& p) const;
  const Partition& operator[](int i) const { return elements[i]; }
  // Index permutation induced by relabeling through g.
  std::vector<int> action_on_indices(const Permutation& g) const;
};

PartitionLattice partition_lattice(int n);

// The lattice of all subspaces of F_q^dim (q prime), ordered by inclusion.
// A subspace is represented by the sorted list of all its vectors, each
// vector encoded as an integer in base q.
struct SubspaceLattice {
  int q = 0, dim = 0;
  std::vector<std::vector<int>> elements;  // each: sorted vector list, includes 0
  std::shared_ptr<FiniteLattice> order;
};

SubspaceLattice subspace_lattice(int q, int dim);

bool is_strict_chain(const FiniteLattice& L, const Chain& c);

}  // namespace ptc
