#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ptc/homology.hpp"
#include "ptc/lattice.hpp"
#include "ptc/perm.hpp"

namespace ptc {

// The sublattice of G-invariant partitions of {0..n-1}.
struct FixedPoset {
  int n = 0;
  std::vector<Partition> elements;
  std::vector<int> parent_indices;  // positions inside partition_lattice(n) order
  std::shared_ptr<FiniteLattice> lattice;
};

FixedPoset fixed_subposet(int n, const GroupAction& G);

struct ActionClassification {
  enum class Kind { NonIsotypical, Isotypical, Transitive };
  Kind kind = Kind::NonIsotypical;
  int orbit_size = 0;    // d
  int multiplicity = 0;  // m = n/d (isotypical case)
  Partition orbit_partition;
  bool complement_nonempty = false;  // orbit partition has a complement
  bool orbits_isomorphic = false;    // all orbits isomorphic as G-sets
  // relabeling aligning the orbits into consecutive blocks of size d on
  // which the conjugated group acts diagonally (isotypical case)
  Permutation relabeling;

  std::string kind_str() const;
};

// Both isotypicality criteria are computed and must agree.
ActionClassification classify_action(int n, const GroupAction& G);

// For transitive G: invariant partitions vs subgroups between Stab(0) and G.
struct SubgroupPosetReport {
  int num_subgroups = 0;          // includes the two trivial ones
  int num_invariant = 0;          // includes bottom and top
  bool is_isomorphism = false;    // bijective + order-preserving both ways
  std::vector<int> subgroup_orders;          // ascending per subgroup index
  std::vector<Partition> coset_partitions;   // image of each subgroup
  std::string detail;
};

SubgroupPosetReport invariant_partitions_as_subgroups(int n, const GroupAction& G);

// Bouquet prediction for a free elementary abelian p-group F_p^k acting on
// n = m p^k points: (m-1)! p^{k(m-1)+C(k,2)} spheres of dimension m+k-3.
BettiTable predicted_fixed_point_betti(int p, int k, int m,
                                       const FieldDescriptor& field = FieldDescriptor::rationals());

// The free action of F_p^k on m blocks of size p^k (positions inside a
// block encode vectors base p; generators translate by unit vectors).
GroupAction elementary_abelian_action(int p, int k, int m);

// Sigma_{d_1} wr ... wr Sigma_{d_l} acting on d_1 ... d_l points.
GroupAction iterated_wreath_action(const std::vector<int>& ds);

}  // namespace ptc
