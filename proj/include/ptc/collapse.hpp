#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ptc/homology.hpp"
#include "ptc/lattice.hpp"
#include "ptc/perm.hpp"

namespace ptc {

// An orthogonality fan on a finite lattice: an ordered list of functions
// from nonempty chains (of the full lattice, by index) to lattice elements.
// Each function must be increasing and commute with the group generators.
struct Fan {
  std::shared_ptr<const FiniteLattice> lattice;
  std::vector<std::function<int(const Chain&)>> functions;
  // index action of each group generator on the lattice (may be empty for
  // a trivial group); used for equivariance checks and orbit splitting
  std::vector<std::vector<int>> generator_maps;
  std::string name;

  int f1_at_bottom() const { return functions.at(0)({lattice->bottom()}); }
};

// The scanning tree of a chain: nodes carry a label (Z in [lo, hi]) where
// lo/hi are interval endpoints (elements of the chain or the global 0/1)
// and Z is the value of the leading scoped function at the interval bottom.
struct OrthNode {
  int Z = -1, lo = -1, hi = -1;
  int beg = 0, end = 0;   // positions of the chain covered by this interval
  int y_pos = -1;         // witness position; == end means the witness is hi
  bool has_witness = false;
  std::vector<std::unique_ptr<OrthNode>> children;  // planar: left, right

  bool leaf() const { return children.empty(); }
  bool invisible_here() const { return Z == hi; }
};

// Builds the full scanning tree of sigma (a chain in the proper part).
std::unique_ptr<OrthNode> orthogonality_tree(const Fan& fan, const Chain& sigma);

// Invisibility per the leaf criterion, with the witness elements (the
// chosen y of every internal node, preorder) as certificate.
struct InvisibilityResult {
  bool invisible = false;
  std::vector<int> witnesses;
};
InvisibilityResult is_invisible(const Fan& fan, const Chain& sigma);

// All minimally invisible chains, via the recursive decomposition
// (witness element y, left part in [0,y], right part in [y,1]).
struct OrthogonalChains {
  std::vector<Chain> chains;                        // sorted
  std::vector<std::vector<std::vector<int>>> intervals;  // per chain: open intervals (0,y0),(y0,y1),...,(yr,1)
  std::vector<ItemOrbit> orbit_list;                // under the fan's generators
};
OrthogonalChains orthogonal_chains(const Fan& fan);

// The explicit Morse matching on the visible chains.
struct Matching {
  std::vector<Chain> visible;   // sorted; nonempty chains of the proper part
  std::vector<int> partner;     // index of the matched chain, -1 = fixed
  int fixed_index = -1;
  long long invisible_count = 0;

  struct Report {
    bool perfect = false, acyclic = false, equivariant = false, fixed_ok = false;
    bool face_closed = false;
    std::string detail;
    bool ok() const { return perfect && acyclic && equivariant && fixed_ok && face_closed; }
  } report;
};
Matching build_matching(const Fan& fan);

// Built-in fan families -------------------------------------------------

// The two word-attachment functions on the partition lattice for the
// colouring given by the composition (F1 merges the non-minimal classes,
// F2 the minimal ones).
Fan young_fan(std::shared_ptr<const PartitionLattice> pl, const std::vector<int>& composition);
Fan young_fan(int n, const std::vector<int>& composition);

// F([bottom]) = x, F(sigma) = top otherwise; x must be stable.
Fan point_fan(std::shared_ptr<const FiniteLattice> lattice, int x,
              std::vector<std::vector<int>> generator_maps, const std::string& name);

// S = A | B_1 | ... | B_k: F1' sends [bottom] to the partition merging all
// of B, everything else to top; F2' is the Young F2 for A < B_1 < ... < B_k.
Fan symmetry_breaking_fan(std::shared_ptr<const PartitionLattice> pl, int a_size,
                          const std::vector<int>& b_parts);

// F([B_0 < ... < B_i]) = A_{r-i} v B_i on the subspace lattice, for a flag
// A_0 < ... < A_r of proper nonzero subspaces (indices into the lattice).
Fan parabolic_fan(std::shared_ptr<const SubspaceLattice> sl, const std::vector<int>& flag);

// Wedge-sum homology prediction assembled from the orthogonal chains of a
// fan: each chain [y_0 < ... < y_r] contributes the Kunneth product of the
// reduced homologies of its open intervals (0,y_0), (y_0,y_1), ..., (y_r,1)
// -- an empty interval counts as rank 1 in degree -1 -- shifted up by
// 2(r+1) (one diamond per interval plus one suspension per inner interval).
// Interval homologies are computed simplicially and memoized per endpoint
// pair.
BettiTable assembled_wedge_betti(const Fan& fan, const FieldDescriptor& field);

// Verification ----------------------------------------------------------

// Checks the discreteness condition for every chain sigma of the full
// lattice and every z above its top; returns a counterexample description.
std::pair<bool, std::string> verify_orthogonality_function(
    const std::function<int(const Chain&)>& F, const FiniteLattice& L);

// Increasing + generator equivariance for every function of the fan,
// exhaustively over all chains of the full lattice.
std::pair<bool, std::string> verify_fan(const Fan& fan);

// All nonempty chains of the proper part (ascending DFS order).
std::vector<Chain> all_proper_chains(const FiniteLattice& L);

}  // namespace ptc
