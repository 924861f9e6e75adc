#pragma once

#include <map>
#include <string>
#include <vector>

#include "ptc/homology.hpp"
#include "ptc/lyndon.hpp"

namespace ptc {

// Degree bookkeeping.  Allowable-sequence degrees refer to the doubly
// suspended model; the plain orbit space |Pi_n|/Young sits two suspensions
// below.  Off-by-suspension is the dominant failure mode, hence the named
// constants (each pinned by a computed fixture in the tests).
inline constexpr int kQuotientDegreeShift = -2;
// Degree of an atom basis element (i_1..i_a) on the suspended smash
// Sigma |Pi_{p^a}|^diamond ^_{Sigma} S^{l p^a}.
inline long long atom_degree(long long sum_i, int l, int a) { return sum_i + l + a; }
// The Euler-characteristic count lives a suspensions below the atom table.
inline int atom_euler_shift(int a) { return a; }

// A basis element (i_1..i_a, e, w) of the homology of the suspended smash
// of |Pi_n|^diamond with spheres of dimensions l_1..l_k along a Young group.
struct AllowableSequence {
  std::vector<long long> i;           // i_1..i_a, possibly empty
  int e = 0;                          // 0 or 1
  Word w;                             // Lyndon word over the k letters
  long long word_degree = 0;          // |w| = sum (1 + l_i) m_i - 1
  long long degree = 0;               // i_1+...+i_a + (1+e)|w| + e + a
  std::vector<int> multi_weight;      // m_i p^a (1+e) per letter

  std::string str() const;
};

// Exhaustive enumeration for a fixed target multi-weight; deterministic
// order, lexicographic on (a, i-vector, e, w).  Over Q only a = 0 occurs
// and e is constrained by the parity of |w|; over F_p the allowed e is
// {0, eps} with eps = 1 iff (p odd and |w| even) or |w| = 0.
std::vector<AllowableSequence> allowable_sequences(const FieldDescriptor& field,
                                                   const std::vector<int>& letter_degrees,
                                                   const std::vector<int>& multi_weight);

// Betti table of |Pi_n| / (Sigma_{n_1} x ... x Sigma_{n_k}) over the field
// (allowable sequences at letter degrees 0, shifted by kQuotientDegreeShift).
BettiTable predicted_quotient_betti(const std::vector<int>& composition,
                                    const FieldDescriptor& field);

// Betti table of Sigma |Pi_n|^diamond ^_{Sigma_n} S^{l n} over F_p: empty
// unless n is a power of p; n = 1 realizes S^{l+1}.  Requires l odd when
// p is odd (the even-l route goes through the EHP identity).
BettiTable predicted_atom_betti(int p, int l, int n);

// Graded dimensions, degree -> rank (zero ranks omitted).
using GradedDims = std::map<int, long long>;

// F_k applied to a graded vector space; F_0 is the identity.
GradedDims fk_apply(int p, int k, const GradedDims& dims);
// F_k of a single generator in degree l.
GradedDims fk_dimension(int p, int k, int l);
// Weight-a part of the free graded algebra: exterior when p = 2 (on all
// degrees, by convention), else exterior on odd and polynomial on even.
GradedDims symmetric_part(int p, const GradedDims& dims, int a);
// dim of the reduced F_p-homology of (S^l)^{smash n} / Sigma_n, assembled
// as a sum over p-partitions (a_0, a_1, ...) of n of tensor products of
// symmetric_part(p, F_j(generator), a_j).
GradedDims sym_smash_power_dims(int p, int l, int n);

// The Euler characteristic of the one-column complex whose summands are
// F_{k_1}...F_{k_r}(generator in degree l) over ordered partitions of k
// with sign (-1)^{r-1}, against (-1)^{k-1} times the atom prediction
// pulled down by atom_euler_shift(k).
struct BredonEulerReport {
  GradedDims euler;     // signed, per total degree
  GradedDims expected;  // signed
  bool match = false;
  std::string detail;
};
BredonEulerReport bredon_euler_check(int p, int l, int k);

// The three Betti tables of the weight-d EHP cofibre at an even sphere
// dimension m, computed simplicially, and the per-degree rank identity:
// over Q and odd primes b_mid(t) = b_left(t) + b_right(t); over F_2
// b_right(t) = b_mid(t) + b_left(t-1).  Odd d has a trivial left term.
struct EhpReport {
  BettiTable left, mid, right;
  bool exact = false;
  std::string detail;
};
EhpReport ehp_rank_identity(const FieldDescriptor& field, int d, int m);

// gcd = 1, or n = 2p or 3p with gcd = p prime.
struct WedgeVerdict {
  bool wedge = false;
  int gcd = 0;
  std::string clause;
  bool verified = false;  // freeness scan over predicted tables performed
  std::string detail;
};
WedgeVerdict wedge_of_spheres_classifier(const std::vector<int>& composition, bool verify = true);

// For each listed prime above the gcd, the F_p table must equal the Q one.
struct TorsionReport {
  int gcd = 0;
  struct Entry {
    int p = 0;
    bool bound_applies = false;  // p > gcd
    bool equal = false;
  };
  std::vector<Entry> entries;
  BettiTable rational;
  std::vector<BettiTable> modular;  // parallel to entries
  bool ok = false;
};
TorsionReport torsion_bound_check(const std::vector<int>& composition,
                                  const std::vector<int>& primes, bool simplicial = true);

}  // namespace ptc
