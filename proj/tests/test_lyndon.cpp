#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <numeric>
#include <set>

#include "ptc/lyndon.hpp"
#include "ptc/perm.hpp"

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

}  // namespace

TEST_CASE("lyndon predicates") {
  CHECK(is_lyndon(word_from_letters({1, 2})));
  CHECK(is_lyndon(word_from_letters({1, 1, 2})));
  CHECK(!is_lyndon(word_from_letters({1, 2, 1})));   // rotation 1 1 2 is smaller
  CHECK(!is_lyndon(word_from_letters({1, 1})));      // periodic
  CHECK(!is_lyndon(word_from_letters({2, 1})));
  CHECK(is_weak_lyndon(word_from_letters({1, 2, 1, 2})));
  CHECK(!is_weak_lyndon(word_from_letters({2, 1, 1, 2})));
  CHECK(word_period(word_from_letters({1, 2, 1, 2})) == 2);
  CHECK(word_period(word_from_letters({1, 1, 2})) == 1);
  CHECK(word_period(word_from_letters({1, 1, 1})) == 3);
}

TEST_CASE("small Lyndon sets") {
  CHECK(lyndon_words({3, 3}).size() == 3);   // aaabbb, aababb, aabbab
  CHECK(lyndon_words({2, 2}).size() == 1);   // aabb
  CHECK(lyndon_words({1, 1, 1}).size() == 2);  // abc, acb
  CHECK(lyndon_words({3}).empty());          // aaa is periodic
  CHECK(lyndon_words({1}).size() == 1);

  // weak = powers of Lyndon roots
  auto weak22 = weak_lyndon_words({2, 2});
  CHECK(weak22.size() == 2);  // aabb and (ab)^2
  std::multiset<int> periods;
  for (const auto& w : weak22) periods.insert(word_period(w));
  CHECK(periods == std::multiset<int>{1, 2});
}

TEST_CASE("witt count equals brute-force enumeration") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& comp : compositions_of(n)) {
      mpz_class w = witt_count(comp);
      CHECK(w == mpz_class(static_cast<unsigned long>(lyndon_words(comp).size())));
    }
}

TEST_CASE("reduction worked example") {
  // w = c1 c1 c2 c1 c1 c3 c2 c3 reduces through
  //   c1 c12 c1 c13 c2 c3 -> c112 c113 c2 c3 -> c112113 c2 c3
  //   -> c1121132 c3 -> c11211323
  Word w = word_from_letters({1, 1, 2, 1, 1, 3, 2, 3});
  Word w0 = reduce_word(w);
  CHECK(word_str(w0) == "1 12 1 13 2 3");
  Word w1 = reduce_word(w0);
  CHECK(word_str(w1) == "112 113 2 3");
  Word w2 = reduce_word(w1);
  CHECK(word_str(w2) == "112113 2 3");
  Word w3 = reduce_word(w2);
  CHECK(word_str(w3) == "1121132 3");
  Word w4 = reduce_word(w3);
  CHECK(word_str(w4) == "11211323");
  CHECK(reduce_word(w4) == w4);  // single letter: stable
}

TEST_CASE("labelled word enumeration matches the closed form") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& comp : compositions_of(n)) {
      auto words = labelled_weak_lyndon_words(comp);
      CHECK(labelled_word_count(comp) ==
            mpz_class(static_cast<unsigned long>(words.size())));
      // canonical representatives are distinct and canonical
      std::set<LabelledWord> seen(words.begin(), words.end());
      CHECK(seen.size() == words.size());
      for (const auto& lw : words)
        CHECK(canonical_labelled_word(lw.word, lw.labels, lw.period) == lw);
    }
  CHECK(labelled_word_count({3, 3}) == 114);  // 36*3 + 36/3! (not /3)
  CHECK(labelled_word_count({4}) == 1);       // one letter: a single labelling
}

TEST_CASE("standard labelling is canonical and enumerated") {
  for (const auto& comp : std::vector<std::vector<int>>{{2, 2}, {3, 3}, {2, 1}}) {
    auto words = labelled_weak_lyndon_words(comp);
    std::set<LabelledWord> all(words.begin(), words.end());
    for (const auto& w : weak_lyndon_words(comp))
      CHECK(all.count(standard_labelling(w, comp)) == 1);
  }
}

TEST_CASE("young action permutes labelled words") {
  std::vector<int> comp{2, 2};
  auto words = labelled_weak_lyndon_words(comp);
  std::set<LabelledWord> all(words.begin(), words.end());
  for (const Permutation& g : GroupAction::young(comp).elements())
    for (const auto& w : words) {
      LabelledWord img = act_on_labelled_word(g, w);
      CHECK(all.count(img) == 1);
    }
  // the (c1 c2)^2 words have a stabilizer of order 2: their orbit has size 2
  std::set<LabelledWord> period2;
  for (const auto& w : words)
    if (w.period == 2) period2.insert(w);
  CHECK(period2.size() == 2);
}

TEST_CASE("chain_from_word produces strict proper chains") {
  std::vector<int> comp{2, 2};
  std::set<std::vector<std::string>> chains;
  for (const auto& w : labelled_weak_lyndon_words(comp)) {
    auto chain = chain_from_word(w, 4);
    std::vector<std::string> key;
    for (size_t i = 0; i < chain.size(); ++i) {
      CHECK(!chain[i].is_discrete());
      CHECK(!chain[i].is_indiscrete());
      if (i > 0) CHECK(chain[i - 1].refines(chain[i]));
      key.push_back(chain[i].str());
    }
    chains.insert(key);
  }
  CHECK(chains.size() == 6);  // the map is injective for (2,2)
}

TEST_CASE("branching dimension identity") {
  for (int n = 2; n <= 9; ++n)
    for (const auto& comp : compositions_of(n)) {
      DimensionIdentity id = branching_dimension_identity(comp);
      CHECK(id.equal);
      CHECK(id.lhs == id.rhs);
    }
}
