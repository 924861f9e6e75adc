#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "ptc/partition.hpp"
#include "ptc/perm.hpp"

namespace ptc {

// A letter is a nonempty string over {1..k}; plain letters are singletons,
// the reduction function concatenates them.  Lexicographic comparison of
// the underlying int vectors gives the prefix-smaller order.
using Letter = std::vector<int>;

// A word over (possibly composite) letters.
using Word = std::vector<Letter>;

Word word_from_letters(const std::vector<int>& plain);  // e.g. {1,1,2} -> c1 c1 c2
std::string word_str(const Word& w);                    // "1 12 1 13 2 3"

bool is_lyndon(const Word& w);       // strictly smaller than all nontrivial rotations
bool is_weak_lyndon(const Word& w);  // weakly smaller than all rotations

// All Lyndon words containing letter c_i exactly m[i-1] times, lexicographic.
std::vector<Word> lyndon_words(const std::vector<int>& multiplicities);
// All weak Lyndon words with the given content (= powers u^d of Lyndon roots).
std::vector<Word> weak_lyndon_words(const std::vector<int>& multiplicities);
// Period of a weak Lyndon word: the d with w = u^d, u Lyndon.
int word_period(const Word& w);

// Witt's formula: (1/m) * sum over d | gcd of mu(d) * multinomial(m/d; m_i/d).
mpz_class witt_count(const std::vector<int>& multiplicities);

// One pass of the reduction: simultaneously replace every non-overlapping
// occurrence (scanning left to right) of a minimal letter followed by a
// strictly larger letter with their concatenation.  "Minimal" means minimal
// among the letters present in the word.
Word reduce_word(const Word& w);

// A weak Lyndon word together with a bijective labelling of its positions
// by {0..n-1}; position p carrying letter c_i must receive a label from the
// i-th fibre of the composition.  Labellings differing by a permutation of
// the period copies are identified; `labels` stores the canonical one.
struct LabelledWord {
  Word word;
  std::vector<int> labels;  // position -> element of {0..n-1}
  int period = 1;

  bool operator==(const LabelledWord& o) const {
    return word == o.word && labels == o.labels;
  }
  bool operator<(const LabelledWord& o) const {
    return word != o.word ? word < o.word : labels < o.labels;
  }
};

// Canonicalize the labelling by permuting the period copies of the root.
LabelledWord canonical_labelled_word(Word w, std::vector<int> labels, int period);

// All labelled weak Lyndon words for the standard composition fibres
// C_1 = {0..n_1-1}, C_2 = {n_1..n_1+n_2-1}, ...
std::vector<LabelledWord> labelled_weak_lyndon_words(const std::vector<int>& composition);

// The standard labelling of w = u^d: copy j of u takes labels congruent to
// j mod d, increasing left to right on each letter within the copy.
LabelledWord standard_labelling(const Word& w, const std::vector<int>& composition);

// Young-group action: relabel through h, then canonicalize.
LabelledWord act_on_labelled_word(const Permutation& h, const LabelledWord& w);

// The chain of partitions attached to a labelled word: iterate reduce_word,
// after each pass record the partition grouping labels whose positions have
// merged; keep strictly increasing stages and stop before the indiscrete
// partition.  May be empty.
std::vector<Partition> chain_from_word(const LabelledWord& w, int n);

// Both sides of the nonequivariant rank identity
//   (n-1)! = sum over d | gcd of |B(n_1/d..n_k/d)| * (n_1!..n_k!/d),
// i.e. (labelled weak Lyndon words of period d) * (d-1)! summed over d.
struct DimensionIdentity {
  mpz_class lhs, rhs;
  bool equal = false;
};
DimensionIdentity branching_dimension_identity(const std::vector<int>& composition);

// Closed form for |labelled_weak_lyndon_words(composition)|:
//   sum over d | gcd of n_1!..n_k! * |B(n_1/d..n_k/d)| / d!.
mpz_class labelled_word_count(const std::vector<int>& composition);

}  // namespace ptc
