#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "ptc/lattice.hpp"
#include "ptc/partition.hpp"
#include "ptc/perm.hpp"

using namespace ptc;

TEST_CASE("partition canonical form") {
  Partition p = Partition::from_blocks(5, {{4, 3}, {0}, {2, 1}});
  CHECK(p.str() == "1|23|45");
  CHECK(p.num_blocks() == 3);
  CHECK(p.labels() == std::vector<int>{0, 1, 1, 2, 2});
  CHECK(Partition::from_labels({7, 7, 3, 7}).str() == "124|3");

  CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1}}), std::invalid_argument);      // missing 2
  CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1}, {1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1, 3}}), std::invalid_argument);   // out of range
}

TEST_CASE("refinement, meet, join") {
  Partition a = Partition::from_blocks(4, {{0, 1}, {2}, {3}});
  Partition b = Partition::from_blocks(4, {{0, 1}, {2, 3}});
  Partition c = Partition::from_blocks(4, {{0, 2}, {1}, {3}});
  CHECK(a.refines(b));
  CHECK(!b.refines(a));
  CHECK(!a.refines(c));
  CHECK(Partition::discrete(4).refines(a));
  CHECK(a.refines(Partition::indiscrete(4)));

  CHECK(partition_meet(b, c) == Partition::discrete(4));
  CHECK(partition_join(a, c).str() == "123|4");
  CHECK(partition_join(b, c) == Partition::indiscrete(4));
  CHECK(partition_meet(a, b) == a);
}

TEST_CASE("all_partitions enumerates Bell numbers, discrete first") {
  long long bell[] = {1, 1, 2, 5, 15, 52, 203};
  for (int n = 1; n <= 6; ++n) {
    auto all = all_partitions(n);
    CHECK(static_cast<long long>(all.size()) == bell[n]);
    CHECK(all.front().is_indiscrete());  // restricted-growth 0...0 comes first
    std::set<std::string> seen;
    for (const auto& p : all) seen.insert(p.str());
    CHECK(seen.size() == all.size());
  }
}

TEST_CASE("partition lattice structure") {
  for (int n = 2; n <= 4; ++n) {
    PartitionLattice pl = partition_lattice(n);
    CHECK(pl.order->validate() == std::nullopt);
    CHECK(pl[pl.order->bottom()].is_discrete());
    CHECK(pl[pl.order->top()].is_indiscrete());
    CHECK(pl.order->height() == n - 1);
  }

  PartitionLattice pl = partition_lattice(4);
  int x = pl.index_of(Partition::from_blocks(4, {{0, 1}, {2, 3}}));
  // complements of 12|34: the six partitions meeting it in 0 and joining to 1
  CHECK(pl.order->complement_set(x).size() == 6);

  // meet/join agree with the combinatorial operations
  for (int a = 0; a < pl.order->size(); ++a)
    for (int b = a + 1; b < pl.order->size(); ++b) {
      CHECK(pl[pl.order->meet(a, b)] == partition_meet(pl[a], pl[b]));
      CHECK(pl[pl.order->join(a, b)] == partition_join(pl[a], pl[b]));
    }
}

TEST_CASE("lattice index order does not extend refinement") {
  // index 0 is the indiscrete top, so chains are not numerically sorted
  PartitionLattice pl = partition_lattice(4);
  CHECK(pl.order->top() == 0);
  CHECK(pl.order->bottom() != 0);
}

TEST_CASE("interval lattices") {
  auto pl = std::make_shared<PartitionLattice>(partition_lattice(4));
  int x = pl->index_of(Partition::from_blocks(4, {{0, 1}, {2, 3}}));
  IntervalLattice below = interval(std::shared_ptr<const FiniteLattice>(pl, pl->order.get()),
                                   pl->order->bottom(), x);
  CHECK(below.lattice->size() == 4);  // 0, {12}, {34}, x: Pi_2 x Pi_2
  CHECK(below.lattice->validate() == std::nullopt);
  IntervalLattice above = interval(std::shared_ptr<const FiniteLattice>(pl, pl->order.get()),
                                   x, pl->order->top());
  CHECK(above.lattice->size() == 2);  // covering pair
  for (int i = 0; i < below.lattice->size(); ++i)
    CHECK(below.to_sub.at(below.to_parent[i]) == i);
}

TEST_CASE("permutations") {
  Permutation g = Permutation::parse("(1 2)(3 4)", 5);
  CHECK(g(0) == 1);
  CHECK(g(4) == 4);
  CHECK(g.cycle_str() == "(1 2)(3 4)");
  CHECK((g * g).is_identity());
  Permutation h = Permutation::parse("2 3 1", 3);
  CHECK((h * h * h).is_identity());
  CHECK(h.inverse()(0) == 2);
  CHECK(Permutation::identity(4).cycle_str() == "()");

  Partition p = Partition::from_blocks(4, {{0, 1}, {2, 3}});
  CHECK(apply_perm(Permutation::parse("(2 3)", 4), p).str() == "13|24");
}

TEST_CASE("group actions") {
  GroupAction y = GroupAction::young({3, 2});
  CHECK(y.degree == 5);
  CHECK(y.elements().size() == 12);
  auto orbits = y.point_orbits();
  REQUIRE(orbits.size() == 2);
  CHECK(orbits[0] == std::vector<int>{0, 1, 2});
  CHECK(orbits[1] == std::vector<int>{3, 4});
  CHECK(GroupAction::symmetric(4).elements().size() == 24);
  CHECK(GroupAction::trivial(3).elements().size() == 1);
}

TEST_CASE("action on lattice indices") {
  PartitionLattice pl = partition_lattice(4);
  Permutation g = Permutation::parse("(1 2 3 4)", 4);
  auto m = pl.action_on_indices(g);
  for (int i = 0; i < pl.order->size(); ++i) {
    CHECK(pl[m[i]] == apply_perm(g, pl[i]));
    // automorphism: preserves order
    for (int j = 0; j < pl.order->size(); ++j)
      CHECK(pl.order->leq(i, j) == pl.order->leq(m[i], m[j]));
  }
}

TEST_CASE("subspace lattices") {
  SubspaceLattice s22 = subspace_lattice(2, 2);
  CHECK(s22.elements.size() == 5);  // 0, three lines, the plane
  CHECK(s22.order->validate() == std::nullopt);
  CHECK(s22.order->height() == 2);

  SubspaceLattice s32 = subspace_lattice(3, 2);
  CHECK(s32.elements.size() == 6);  // 0, four lines, the plane

  SubspaceLattice s23 = subspace_lattice(2, 3);
  // 0, 7 lines, 7 planes, the whole space
  CHECK(s23.elements.size() == 16);
  CHECK(s23.order->open_interval(s23.order->bottom(), s23.order->top()).size() == 14);
}

TEST_CASE("strict chain predicate") {
  PartitionLattice pl = partition_lattice(3);
  int a = pl.index_of(Partition::from_blocks(3, {{0, 1}, {2}}));
  CHECK(is_strict_chain(*pl.order, {pl.order->bottom(), a, pl.order->top()}));
  CHECK(!is_strict_chain(*pl.order, {a, a}));
  int b = pl.index_of(Partition::from_blocks(3, {{0, 2}, {1}}));
  CHECK(!is_strict_chain(*pl.order, {a, b}));  // incomparable
}
