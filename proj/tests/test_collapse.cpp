#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <map>
#include <memory>
#include <set>

#include "ptc/collapse.hpp"
#include "ptc/lyndon.hpp"
#include "ptc/simplicial.hpp"

using namespace ptc;

namespace {

std::vector<std::vector<int>> compositions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int rest) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int f = 1; f <= rest; ++f) {
      cur.push_back(f);
      rec(rest - f);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

std::shared_ptr<PartitionLattice> lattice_of(int n) {
  return std::make_shared<PartitionLattice>(partition_lattice(n));
}

// a chain of lattice indices as partition strings, for set comparisons
std::vector<std::string> chain_strs(const PartitionLattice& pl, const Chain& c) {
  std::vector<std::string> out;
  for (int i : c) out.push_back(pl[i].str());
  return out;
}

}  // namespace

TEST_CASE("word attachment of the Young fan at the bottom") {
  auto pl = lattice_of(4);
  Fan fan = young_fan(pl, {2, 2});
  // singleton words are c1 c1 c2 c2, so A = {1},{2} and B = {3},{4}
  Chain bottom{pl->order->bottom()};
  CHECK((*pl)[fan.functions[0](bottom)].str() == "1|2|34");
  CHECK((*pl)[fan.functions[1](bottom)].str() == "12|3|4");
}

TEST_CASE("word attachment on a longer chain") {
  auto pl = lattice_of(6);
  Fan fan = young_fan(pl, {2, 3, 1});
  // classes of 1|23|45|6 carry c1 < c1c2 < c2c2 < c3, so A = {1}
  Chain sigma{pl->index_of(Partition::from_blocks(6, {{0}, {1, 2}, {3}, {4}, {5}})),
              pl->index_of(Partition::from_blocks(6, {{0}, {1, 2}, {3, 4}, {5}}))};
  CHECK((*pl)[fan.functions[0](sigma)].str() == "1|23456");
  CHECK((*pl)[fan.functions[1](sigma)].str() == "1|23|45|6");

  // extending to 123|456 the words become c1c1c2 and c2c2c3: each function
  // merges a single class, i.e. fixes the chain top
  sigma.push_back(pl->index_of(Partition::from_blocks(6, {{0, 1, 2}, {3, 4, 5}})));
  CHECK((*pl)[fan.functions[0](sigma)].str() == "123|456");
  CHECK((*pl)[fan.functions[1](sigma)].str() == "123|456");
}

TEST_CASE("built-in fans verify exhaustively") {
  for (int n = 3; n <= 5; ++n)
    for (const auto& comp : compositions_of(n)) {
      Fan fan = young_fan(n, comp);
      auto [ok, why] = verify_fan(fan);
      CHECK_MESSAGE(ok, why);
    }
  auto pl = lattice_of(4);
  Fan sym = symmetry_breaking_fan(pl, 2, {1, 1});
  CHECK(verify_fan(sym).first);

  auto sl = std::make_shared<SubspaceLattice>(subspace_lattice(2, 2));
  int line = -1;
  for (int i = 0; i < sl->order->size(); ++i)
    if (i != sl->order->bottom() && i != sl->order->top()) {
      line = i;
      break;
    }
  Fan par = parabolic_fan(sl, {line});
  CHECK(verify_fan(par).first);
  for (const auto& f : par.functions)
    CHECK(verify_orthogonality_function(f, *sl->order).first);
}

TEST_CASE("point fan on the partition lattice of 4") {
  auto pl = lattice_of(4);
  int x = pl->index_of(Partition::from_blocks(4, {{0, 1}, {2, 3}}));
  auto base = std::shared_ptr<const FiniteLattice>(pl, pl->order.get());
  Fan fan = point_fan(base, x, {}, "pt");
  CHECK(verify_fan(fan).first);

  OrthogonalChains oc = orthogonal_chains(fan);
  // the orthogonal chains are the six singleton complements of x
  CHECK(oc.chains.size() == 6);
  std::set<int> comps(pl->order->complement_set(x).begin(), pl->order->complement_set(x).end());
  for (const auto& c : oc.chains) {
    REQUIRE(c.size() == 1);
    CHECK(comps.count(c[0]) == 1);
  }
  CHECK(is_invisible(fan, {pl->index_of(Partition::from_blocks(4, {{0, 2}, {1, 3}}))}).invisible);
  CHECK(!is_invisible(fan, {pl->index_of(Partition::from_blocks(4, {{0, 1}, {2}, {3}}))}).invisible);

  // x must be stable under the supplied generators
  PartitionLattice& plr = *pl;
  std::vector<std::vector<int>> gens{plr.action_on_indices(Permutation::parse("(2 3)", 4))};
  CHECK_THROWS_AS(point_fan(base, x, gens, "pt"), std::invalid_argument);
}

TEST_CASE("orthogonal chain counts match the labelled word count") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& comp : compositions_of(n)) {
      OrthogonalChains oc = orthogonal_chains(young_fan(n, comp));
      CHECK(mpz_class(static_cast<unsigned long>(oc.chains.size())) == labelled_word_count(comp));
    }
  // (n): only the empty chain
  OrthogonalChains trivial = orthogonal_chains(young_fan(4, {4}));
  REQUIRE(trivial.chains.size() == 1);
  CHECK(trivial.chains[0].empty());
  // (n-1,1): the (n-1)! singleton-free count
  CHECK(orthogonal_chains(young_fan(5, {4, 1})).chains.size() == 24);
}

TEST_CASE("orbit structure of the (2,2) orthogonal chains") {
  OrthogonalChains oc = orthogonal_chains(young_fan(4, {2, 2}));
  REQUIRE(oc.chains.size() == 6);
  std::multiset<size_t> sizes;
  for (const auto& orb : oc.orbit_list) sizes.insert(orb.members.size());
  CHECK(sizes == std::multiset<size_t>{2, 4});
}

TEST_CASE("orthogonal chains of (3,3): 114 chains in 4 orbits") {
  OrthogonalChains oc = orthogonal_chains(young_fan(6, {3, 3}));
  CHECK(oc.chains.size() == 114);
  CHECK(oc.orbit_list.size() == 4);
}

TEST_CASE("labelled words parametrize the orthogonal chains") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& comp : compositions_of(n)) {
      auto pl = lattice_of(n);
      std::set<std::vector<std::string>> from_fan;
      for (const auto& c : orthogonal_chains(young_fan(pl, comp)).chains)
        from_fan.insert(chain_strs(*pl, c));
      std::set<std::vector<std::string>> from_words;
      for (const auto& lw : labelled_weak_lyndon_words(comp)) {
        std::vector<std::string> key;
        for (const auto& p : chain_from_word(lw, n)) key.push_back(p.str());
        from_words.insert(key);
      }
      CHECK(from_fan == from_words);
    }
}

TEST_CASE("morse matching on proper Young fans") {
  for (int n = 3; n <= 5; ++n)
    for (const auto& comp : compositions_of(n)) {
      if (n - comp[0] < 2) continue;  // degenerate F1 at the bottom
      Fan fan = young_fan(n, comp);
      Matching m = build_matching(fan);
      CHECK_MESSAGE(m.report.ok(), m.report.detail);
      // visible and invisible chains partition the proper chains, and the
      // visible ones are matched in pairs apart from the single fixed chain
      long long all = static_cast<long long>(all_proper_chains(*fan.lattice).size());
      CHECK(static_cast<long long>(m.visible.size()) + m.invisible_count == all);
      CHECK(m.visible.size() % 2 == 1);
      CHECK(m.invisible_count >=
            static_cast<long long>(orthogonal_chains(fan).chains.size()));
      // the unique fixed chain is the singleton at F1([bottom])
      REQUIRE(m.fixed_index >= 0);
      CHECK(m.visible[m.fixed_index] == Chain{fan.f1_at_bottom()});
    }
}

TEST_CASE("matching requires a proper F1 at the bottom") {
  CHECK_THROWS_AS(build_matching(young_fan(3, {3})), std::invalid_argument);
  CHECK_THROWS_AS(build_matching(young_fan(3, {2, 1})), std::invalid_argument);
}

TEST_CASE("matching on symmetry-breaking and parabolic fans") {
  auto pl = lattice_of(4);
  Matching sym = build_matching(symmetry_breaking_fan(pl, 2, {1, 1}));
  CHECK(sym.report.ok());

  auto sl = std::make_shared<SubspaceLattice>(subspace_lattice(2, 3));
  // flag: a line inside a plane
  int line = -1, plane = -1;
  for (int i = 0; i < sl->order->size(); ++i) {
    if (i == sl->order->bottom() || i == sl->order->top()) continue;
    if (sl->elements[i].size() == 2 && line < 0) line = i;
  }
  for (int i = 0; i < sl->order->size(); ++i) {
    if (i == sl->order->bottom() || i == sl->order->top()) continue;
    if (sl->elements[i].size() == 4 && sl->order->leq(line, i)) {
      plane = i;
      break;
    }
  }
  REQUIRE(line >= 0);
  REQUIRE(plane >= 0);
  Matching par = build_matching(parabolic_fan(sl, {line, plane}));
  CHECK(par.report.ok());
}

TEST_CASE("scanning tree and witnesses are consistent") {
  Fan fan = young_fan(4, {2, 2});
  for (const Chain& c : all_proper_chains(*fan.lattice)) {
    InvisibilityResult r = is_invisible(fan, c);
    auto tree = orthogonality_tree(fan, c);
    REQUIRE(tree);
    if (r.invisible) CHECK(r.witnesses.size() >= 1);
  }
}

TEST_CASE("assembled wedge homology matches the partition complex") {
  // for n = 2 the proper part is empty and the assembled answer is the
  // reduced homology of the empty complex
  BettiTable two = assembled_wedge_betti(young_fan(2, {1, 1}), FieldDescriptor::rationals());
  CHECK(two.str() == "{\"-1\":1}");

  std::map<int, BettiTable> baseline;
  for (int n = 3; n <= 5; ++n)
    baseline[n] = partition_quotient_betti(n, {n}, FieldDescriptor::rationals(), false);
  for (int n = 3; n <= 5; ++n)
    for (const auto& comp : compositions_of(n)) {
      BettiTable assembled = assembled_wedge_betti(young_fan(n, comp), FieldDescriptor::rationals());
      CHECK_MESSAGE(assembled.betti == baseline[n].betti,
                    "n=" << n << " assembled=" << assembled.str());
    }
}
