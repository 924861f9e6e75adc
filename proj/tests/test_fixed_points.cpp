#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ptc/fixed_points.hpp"
#include "ptc/simplicial.hpp"

using namespace ptc;

namespace {

BettiTable fixed_betti(int n, const GroupAction& G,
                       const FieldDescriptor& field = FieldDescriptor::rationals()) {
  FixedPoset fp = fixed_subposet(n, G);
  NerveModel m = open_nerve_model(fp.lattice, GroupAction::trivial(1),
                                  [](const Permutation&) { return std::vector<int>{}; },
                                  "fixed(" + G.label + ")");
  return model_betti(m, field);
}

}  // namespace

TEST_CASE("fixed subposet of a free C2 action on 4 points") {
  GroupAction G = elementary_abelian_action(2, 1, 2);  // (1 2)(3 4)
  FixedPoset fp = fixed_subposet(4, G);
  // invariant partitions: 0, 12|34, 13|24, 14|23, 12|34 joins... and 1
  for (const auto& p : fp.elements)
    for (const Permutation& g : G.generators) {
      Partition img = apply_perm(g, p);
      CHECK(img == p);
    }
  CHECK(fp.lattice->validate() == std::nullopt);
  // parent indices point back at the same partitions
  PartitionLattice pl = partition_lattice(4);
  for (size_t i = 0; i < fp.elements.size(); ++i)
    CHECK(pl[fp.parent_indices[i]] == fp.elements[i]);
}

TEST_CASE("classification: isotypical, transitive, non-isotypical") {
  // two orbits of size 2, isomorphic: isotypical with d = 2, m = 2
  ActionClassification iso = classify_action(4, elementary_abelian_action(2, 1, 2));
  CHECK(iso.kind == ActionClassification::Kind::Isotypical);
  CHECK(iso.orbit_size == 2);
  CHECK(iso.multiplicity == 2);
  CHECK(iso.complement_nonempty);
  CHECK(iso.orbits_isomorphic);
  CHECK(iso.kind_str() == "isotypical");

  // one orbit of size 4
  ActionClassification tr = classify_action(4, elementary_abelian_action(2, 2, 1));
  CHECK(tr.kind == ActionClassification::Kind::Transitive);
  CHECK(tr.orbit_size == 4);
  CHECK(tr.multiplicity == 1);

  // C2 acting on 3 points with a fixed point: orbit sizes 2 and 1
  GroupAction mixed{3, {Permutation::parse("(1 2)", 3)}, "mixed"};
  ActionClassification non = classify_action(3, mixed);
  CHECK(non.kind == ActionClassification::Kind::NonIsotypical);
  CHECK(!non.orbits_isomorphic);
}

TEST_CASE("fixed point homology matches the bouquet prediction") {
  struct Case {
    int p, k, m;
  };
  for (Case c : {Case{2, 1, 2}, Case{2, 1, 3}, Case{2, 2, 1}, Case{3, 1, 2}}) {
    GroupAction G = elementary_abelian_action(c.p, c.k, c.m);
    BettiTable got = fixed_betti(G.degree, G);
    BettiTable want = predicted_fixed_point_betti(c.p, c.k, c.m);
    CHECK_MESSAGE(got.betti == want.betti,
                  "p=" << c.p << " k=" << c.k << " m=" << c.m << " got=" << got.str()
                       << " want=" << want.str());
  }
  // spot values: (2,1,2) -> 2 spheres of dim 0; (3,1,2) -> 3; (2,2,1) -> 2
  CHECK(predicted_fixed_point_betti(2, 1, 2).str() == "{\"0\":2}");
  CHECK(predicted_fixed_point_betti(3, 1, 2).str() == "{\"0\":3}");
  CHECK(predicted_fixed_point_betti(2, 2, 1).str() == "{\"0\":2}");
}

TEST_CASE("non-isotypical actions have contractible fixed posets") {
  // C2 on 4 points with orbit sizes 2,1,1
  GroupAction G{4, {Permutation::parse("(1 2)", 4)}, "c2+fix"};
  CHECK(classify_action(4, G).kind == ActionClassification::Kind::NonIsotypical);
  CHECK(fixed_betti(4, G).betti.empty());

  // C4 on 6 points: orbits of sizes 4 and 2, not isomorphic
  GroupAction H{6, {Permutation::parse("(1 2 3 4)(5 6)", 6)}, "c4c2"};
  CHECK(classify_action(6, H).kind == ActionClassification::Kind::NonIsotypical);
  CHECK(fixed_betti(6, H).betti.empty());
}

TEST_CASE("wreath products are not free: fixed posets vanish") {
  GroupAction G = iterated_wreath_action({2, 2});
  CHECK(G.degree == 4);
  CHECK(G.elements().size() == 8);  // D4
  CHECK(fixed_betti(4, G).betti.empty());
}

TEST_CASE("invariant partitions of a transitive action are intermediate subgroups") {
  // C4: subgroups 1 < C2 < C4 between Stab(0) = 1 and G
  GroupAction G{4, {Permutation::parse("(1 2 3 4)", 4)}, "c4"};
  SubgroupPosetReport r = invariant_partitions_as_subgroups(4, G);
  CHECK(r.num_subgroups == 3);
  CHECK(r.num_invariant == 3);
  CHECK(r.is_isomorphism);
  CHECK(r.subgroup_orders == std::vector<int>{1, 2, 4});
  // the middle subgroup C2 = <(1 3)(2 4)> has coset partition 13|24
  REQUIRE(r.coset_partitions.size() == 3);
  CHECK(r.coset_partitions[1].str() == "13|24");

  // F_2^2 on 4 points: five subgroups, all invariant
  SubgroupPosetReport k4 = invariant_partitions_as_subgroups(4, elementary_abelian_action(2, 2, 1));
  CHECK(k4.num_subgroups == 5);
  CHECK(k4.is_isomorphism);
}

TEST_CASE("prediction scales in m, k and the field") {
  // (m-1)! p^{k(m-1)+C(k,2)} spheres of dimension m+k-3
  BettiTable t = predicted_fixed_point_betti(2, 1, 3);
  REQUIRE(t.betti.size() == 1);
  CHECK(t.betti.at(1) == 8);  // 2! * 2^2
  BettiTable u = predicted_fixed_point_betti(2, 2, 2);
  REQUIRE(u.betti.size() == 1);
  CHECK(u.betti.at(1) == 8);  // 1! * 2^{2+1}
  // sphere counts do not depend on the coefficient field
  CHECK(predicted_fixed_point_betti(2, 1, 3, FieldDescriptor::prime(5)).betti == t.betti);
}
