#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ptc/homology.hpp"
#include "ptc/lattice.hpp"

namespace ptc {

// A simplicial model built from the nerve of a product poset
//   L x [l]^c x [s_1] x ... x [s_e]
// together with a face-closed "collapsed" predicate and a group action.
//
// Two flavours:
//  * open nerve (open_nerve = true): chains of the proper part of L,
//    nothing collapsed; homology is reduced via the augmentation.
//  * quotient model (open_nerve = false): the smash
//    Sigma|L-proper|^diamond ^ (S^l)^{smash c} ^ S^{s_1} ^ ...,
//    realized with "collapsed unless the lattice coordinate runs from
//    bottom to top and every sphere coordinate attains all its values".
//    Each S^m is the linear poset [m] collapsed unless surjective
//    (the Delta^m / boundary model).
//
// The group acts on lattice indices (via `lattice_index_perm`) and, when
// `permute_spheres` is set, permutes the c sphere coordinates by the same
// permutation.  The extra spheres are always fixed.
struct NerveModel {
  std::shared_ptr<const FiniteLattice> lattice;  // may be null (pure sphere smash)
  bool open_nerve = false;
  int sphere_copies = 0;
  int sphere_dim = 0;
  std::vector<int> extra_spheres;
  bool permute_spheres = false;
  GroupAction action;
  std::string name;
  int degree_cap = -1;  // -1: no cap (full poset height)

  // filled by finalize_model(): the whole group and its action on encoded
  // product elements
  std::vector<Permutation> group_elements;
  std::vector<std::vector<int>> element_maps;

  long long num_product_elements() const;
  std::string fingerprint() const;
};

// Resolves the group and the induced permutations of product elements.
// `lattice_index_perm` maps a permutation to its action on lattice indices
// (ignored when there is no lattice or the group is trivial).
void finalize_model(NerveModel& m,
                    const std::function<std::vector<int>(const Permutation&)>& lattice_index_perm);

// The nerve of the proper part of L, optionally quotiented by the action.
NerveModel open_nerve_model(std::shared_ptr<const FiniteLattice> lattice, GroupAction action,
                            const std::function<std::vector<int>(const Permutation&)>& lattice_index_perm,
                            const std::string& name);

// Sigma |proper part of L|^diamond smash (S^l)^{smash n} with its natural
// action, plus optional extra fixed spheres (suspensions).
NerveModel suspension_smash_model(std::shared_ptr<const FiniteLattice> lattice, GroupAction action,
                                  const std::function<std::vector<int>(const Permutation&)>& lattice_index_perm,
                                  int sphere_copies, int sphere_dim, std::vector<int> extra_spheres,
                                  const std::string& name);

// Sigma |Pi_n|^diamond smash_{Sigma_n} (S^l)^{smash n}; n = 1 realizes
// S^{l+1} (the weight-one convention).  extra_spheres adds suspensions.
NerveModel atom_model(int n, int l, std::vector<int> extra_spheres = {});

// (S^l)^{smash n} / Sigma_n, the strict symmetric smash power.
NerveModel sym_power_model(int n, int l);

// Orbit representatives of the model's cells, flattened per degree
// (degree m cells are runs of m+1 encoded product elements).
struct CellTable {
  std::vector<std::vector<int>> flat;  // flat[m]: cells of degree m, concatenated
  long long count(int degree) const {
    if (degree < 0 || degree >= static_cast<int>(flat.size())) return 0;
    return static_cast<long long>(flat[degree].size()) / (degree + 1);
  }
  long long total() const;
};

CellTable enumerate_cells(const NerveModel& m);

// Normalized chains of the strict quotient, over the given field.
// Asserts d.d = 0.
ChainComplex orbit_chain_complex(const NerveModel& m, const FieldDescriptor& field);

// Betti numbers with the model's reduced convention applied (open nerves
// subtract the augmentation from degree 0).
BettiTable model_betti(const NerveModel& m, const FieldDescriptor& field);

// Convenience: reduced rational/F_p Betti of |Pi_n| / (Young subgroup).
// Pass the trivial composition {n} with trivial = true for |Pi_n| itself.
BettiTable partition_quotient_betti(int n, const std::vector<int>& composition,
                                    const FieldDescriptor& field, bool quotient = true);

}  // namespace ptc
