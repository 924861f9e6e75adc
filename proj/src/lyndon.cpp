#include "ptc/lyndon.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ptc {

namespace {

mpz_class factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

int moebius(int n) {
  int mu = 1;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  if (n > 1) mu = -mu;
  return mu;
}

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

int composition_gcd(const std::vector<int>& m) {
  int g = 0;
  for (int v : m) g = std::gcd(g, v);
  return g;
}

// One reduction pass; merge[i] gives the output position of input letter i.
Word reduce_with_map(const Word& w, std::vector<int>& merge) {
  merge.assign(w.size(), -1);
  if (w.empty()) return w;
  Letter min_letter = *std::min_element(w.begin(), w.end());
  Word out;
  size_t i = 0;
  while (i < w.size()) {
    if (w[i] == min_letter && i + 1 < w.size() && w[i + 1] > w[i]) {
      Letter merged = w[i];
      merged.insert(merged.end(), w[i + 1].begin(), w[i + 1].end());
      merge[i] = merge[i + 1] = static_cast<int>(out.size());
      out.push_back(std::move(merged));
      i += 2;
    } else {
      merge[i] = static_cast<int>(out.size());
      out.push_back(w[i]);
      i += 1;
    }
  }
  return out;
}

}  // namespace

Word word_from_letters(const std::vector<int>& plain) {
  Word w;
  w.reserve(plain.size());
  for (int c : plain) w.push_back({c});
  return w;
}

std::string word_str(const Word& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    for (int c : w[i]) out += std::to_string(c);
  }
  return out;
}

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  Word rot = w;
  for (size_t r = 1; r < w.size(); ++r) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (!(w < rot)) return false;
  }
  return true;
}

bool is_weak_lyndon(const Word& w) {
  if (w.empty()) return false;
  Word rot = w;
  for (size_t r = 1; r < w.size(); ++r) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < w) return false;
  }
  return true;
}

std::vector<Word> lyndon_words(const std::vector<int>& multiplicities) {
  std::vector<int> letters;
  for (size_t i = 0; i < multiplicities.size(); ++i) {
    if (multiplicities[i] < 0) throw std::invalid_argument("negative multiplicity");
    letters.insert(letters.end(), multiplicities[i], static_cast<int>(i) + 1);
  }
  if (letters.empty()) throw std::invalid_argument("empty content");
  std::vector<Word> out;
  Word w = word_from_letters(letters);  // sorted ascending = lexicographically first
  do {
    if (is_lyndon(w)) out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<Word> weak_lyndon_words(const std::vector<int>& multiplicities) {
  int g = composition_gcd(multiplicities);
  std::vector<Word> out;
  for (int d : divisors(g)) {
    std::vector<int> root(multiplicities.size());
    for (size_t i = 0; i < multiplicities.size(); ++i) root[i] = multiplicities[i] / d;
    for (const Word& u : lyndon_words(root)) {
      Word w;
      for (int c = 0; c < d; ++c) w.insert(w.end(), u.begin(), u.end());
      out.push_back(std::move(w));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int word_period(const Word& w) {
  int len = static_cast<int>(w.size());
  for (int root = 1; root <= len; ++root) {
    if (len % root) continue;
    bool ok = true;
    for (int i = root; i < len && ok; ++i)
      if (w[i] != w[i % root]) ok = false;
    if (ok) return len / root;
  }
  return 1;
}

mpz_class witt_count(const std::vector<int>& multiplicities) {
  int g = composition_gcd(multiplicities);
  int m = std::accumulate(multiplicities.begin(), multiplicities.end(), 0);
  if (m == 0) throw std::invalid_argument("empty content");
  mpz_class total = 0;
  for (int d : divisors(g)) {
    mpz_class multinomial = factorial(m / d);
    for (int mi : multiplicities) multinomial /= factorial(mi / d);
    total += moebius(d) * multinomial;
  }
  mpz_class count = total / m;
  if (count * m != total) throw std::logic_error("Witt sum not divisible by length");
  return count;
}

Word reduce_word(const Word& w) {
  std::vector<int> merge;
  return reduce_with_map(w, merge);
}

LabelledWord canonical_labelled_word(Word w, std::vector<int> labels, int period) {
  int len = static_cast<int>(w.size());
  if (static_cast<int>(labels.size()) != len) throw std::invalid_argument("label length");
  int root = len / period;
  // try every permutation of the period copies, keep the least label vector
  std::vector<int> copy_order(period);
  std::iota(copy_order.begin(), copy_order.end(), 0);
  std::vector<int> best = labels;
  do {
    std::vector<int> cand(len);
    for (int c = 0; c < period; ++c)
      for (int i = 0; i < root; ++i)
        cand[c * root + i] = labels[copy_order[c] * root + i];
    if (cand < best) best = cand;
  } while (std::next_permutation(copy_order.begin(), copy_order.end()));
  LabelledWord out;
  out.word = std::move(w);
  out.labels = std::move(best);
  out.period = period;
  return out;
}

std::vector<LabelledWord> labelled_weak_lyndon_words(const std::vector<int>& composition) {
  int k = static_cast<int>(composition.size());
  std::vector<std::vector<int>> fibre(k);
  int base = 0;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < composition[i]; ++j) fibre[i].push_back(base + j);
    base += composition[i];
  }
  std::set<LabelledWord> seen;
  for (const Word& w : weak_lyndon_words(composition)) {
    int period = word_period(w);
    // positions carrying each plain letter
    std::vector<std::vector<int>> positions(k);
    for (size_t p = 0; p < w.size(); ++p) positions[w[p][0] - 1].push_back(static_cast<int>(p));
    // assign each fibre to its positions in every order
    std::vector<int> labels(w.size());
    std::function<void(int)> rec = [&](int letter) {
      if (letter == k) {
        seen.insert(canonical_labelled_word(w, labels, period));
        return;
      }
      std::vector<int> perm = fibre[letter];
      std::sort(perm.begin(), perm.end());
      do {
        for (size_t t = 0; t < perm.size(); ++t) labels[positions[letter][t]] = perm[t];
        rec(letter + 1);
      } while (std::next_permutation(perm.begin(), perm.end()));
    };
    rec(0);
  }
  return {seen.begin(), seen.end()};
}

LabelledWord standard_labelling(const Word& w, const std::vector<int>& composition) {
  int period = word_period(w);
  int root = static_cast<int>(w.size()) / period;
  int k = static_cast<int>(composition.size());
  std::vector<int> fibre_start(k);
  int base = 0;
  for (int i = 0; i < k; ++i) {
    fibre_start[i] = base;
    base += composition[i];
  }
  std::vector<int> labels(w.size());
  for (int c = 0; c < period; ++c) {
    // next label congruent to c mod period, per letter, increasing
    std::vector<int> next(k);
    for (int i = 0; i < k; ++i) next[i] = fibre_start[i] + c;
    for (int p = 0; p < root; ++p) {
      int letter = w[c * root + p][0] - 1;
      labels[c * root + p] = next[letter];
      next[letter] += period;
    }
  }
  return canonical_labelled_word(w, labels, period);
}

LabelledWord act_on_labelled_word(const Permutation& h, const LabelledWord& w) {
  std::vector<int> labels = w.labels;
  for (int& l : labels) l = h(l);
  return canonical_labelled_word(w.word, std::move(labels), w.period);
}

std::vector<Partition> chain_from_word(const LabelledWord& w, int n) {
  // each position accumulates the labels merged into it
  std::vector<std::vector<int>> groups;
  for (int l : w.labels) groups.push_back({l});
  Word cur = w.word;
  std::vector<Partition> chain;
  while (true) {
    std::vector<int> merge;
    Word next = reduce_with_map(cur, merge);
    if (next == cur) break;
    std::vector<std::vector<int>> merged(next.size());
    for (size_t i = 0; i < groups.size(); ++i) {
      auto& dst = merged[merge[i]];
      dst.insert(dst.end(), groups[i].begin(), groups[i].end());
    }
    groups = std::move(merged);
    cur = std::move(next);
    std::vector<int> lab(n, -1);
    for (size_t b = 0; b < groups.size(); ++b)
      for (int e : groups[b]) lab[e] = static_cast<int>(b);
    Partition x = Partition::from_labels(lab);
    if (x.is_indiscrete()) break;
    if (chain.empty() || !(x == chain.back())) chain.push_back(std::move(x));
  }
  return chain;
}

DimensionIdentity branching_dimension_identity(const std::vector<int>& composition) {
  int n = std::accumulate(composition.begin(), composition.end(), 0);
  DimensionIdentity out;
  out.lhs = factorial(n - 1);
  out.rhs = 0;
  mpz_class young_order = 1;
  for (int ni : composition) young_order *= factorial(ni);
  for (int d : divisors(composition_gcd(composition))) {
    std::vector<int> root(composition.size());
    for (size_t i = 0; i < composition.size(); ++i) root[i] = composition[i] / d;
    // N_d * (d-1)! with N_d = n_1!..n_k! |B(n_i/d)| / d!  simplifies to /d
    out.rhs += witt_count(root) * (young_order / d);
  }
  out.equal = (out.lhs == out.rhs);
  return out;
}

mpz_class labelled_word_count(const std::vector<int>& composition) {
  mpz_class young_order = 1;
  for (int ni : composition) young_order *= factorial(ni);
  mpz_class total = 0;
  for (int d : divisors(composition_gcd(composition))) {
    std::vector<int> root(composition.size());
    for (size_t i = 0; i < composition.size(); ++i) root[i] = composition[i] / d;
    total += witt_count(root) * (young_order / factorial(d));
  }
  return total;
}

}  // namespace ptc
