#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ptc/partition.hpp"

namespace ptc {

// A permutation of {0..n-1} stored as its image list.
struct Permutation {
  std::vector<int> image;

  static Permutation identity(int n);
  // Parses cycle notation like "(1 2)(3 4)" or an image list "2 1 4 3";
  // both are 1-based externally.
  static Permutation parse(const std::string& text, int n);

  int degree() const { return static_cast<int>(image.size()); }
  int operator()(int x) const { return image[x]; }
  Permutation inverse() const;
  bool is_identity() const;

  std::string cycle_str() const;  // 1-based cycle notation, "()" for identity

  bool operator==(const Permutation& o) const { return image == o.image; }
  bool operator<(const Permutation& o) const { return image < o.image; }
};

// Composition: (a * b)(x) = a(b(x)).
Permutation operator*(const Permutation& a, const Permutation& b);

// Relabels the elements of a partition through g.
Partition apply_perm(const Permutation& g, const Partition& p);

// A permutation group given by generators, acting on {0..degree-1}.
struct GroupAction {
  int degree = 0;
  std::vector<Permutation> generators;
  std::string label;

  static GroupAction trivial(int n);
  static GroupAction symmetric(int n);
  // The Young subgroup preserving the consecutive blocks of the composition.
  static GroupAction young(const std::vector<int>& composition);

  // Enumerates all group elements by closure of the generators (BFS);
  // throws if the order would exceed `bound`.
  std::vector<Permutation> elements(size_t bound = 1000000) const;

  // Orbits of the natural action on {0..degree-1}.
  std::vector<std::vector<int>> point_orbits() const;
};

// A single orbit of a group acting on abstract items (given by index).
struct ItemOrbit {
  int representative = 0;            // index of the chosen representative
  std::vector<int> members;          // item indices, ascending
  std::vector<Permutation> stabilizer_generators;  // Schreier generators, deduplicated
};

// Orbit decomposition of `count` items under the action `act`, where
// act(g, i) returns the index of g.item[i].  Orbits are sorted by their
// smallest member, which is also the representative.  Throws if `act`
// ever leaves the index range.
std::vector<ItemOrbit> orbits(const GroupAction& action, int count,
                              const std::function<int(const Permutation&, int)>& act);

}  // namespace ptc
