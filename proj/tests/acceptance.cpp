// Acceptance battery: one line per criterion, exit 0 iff all pass.
// The extended atom tier only runs when PARTC_ACCEPTANCE_EXTENDED=1.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "ptc/collapse.hpp"
#include "ptc/fixed_points.hpp"
#include "ptc/lyndon.hpp"
#include "ptc/predictions.hpp"
#include "ptc/simplicial.hpp"

using namespace ptc;

namespace {

int g_failures = 0;

void criterion(int idx, const std::string& name, const std::function<bool(std::string&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string why;
  bool ok = false;
  try {
    ok = body(why);
  } catch (const std::exception& e) {
    why = std::string("exception: ") + e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::printf("criterion %2d  %-28s %s  (%lld ms)%s%s\n", idx, name.c_str(),
              ok ? "PASS" : "FAIL", static_cast<long long>(ms), why.empty() ? "" : "  -- ",
              why.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

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

long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

bool tables_equal(const BettiTable& got, const BettiTable& want, std::string& why,
                  const std::string& label) {
  if (got.betti == want.betti) return true;
  why = label + ": got " + got.str() + ", want " + want.str();
  return false;
}

BettiTable building_betti(int q, int dim, const FieldDescriptor& field) {
  SubspaceLattice sl = subspace_lattice(q, dim);
  NerveModel m = open_nerve_model(sl.order, GroupAction::trivial(1),
                                  [](const Permutation&) { return std::vector<int>{}; },
                                  "building");
  return model_betti(m, field);
}

BettiTable fixed_betti(const GroupAction& G) {
  FixedPoset fp = fixed_subposet(G.degree, G);
  NerveModel m = open_nerve_model(fp.lattice, GroupAction::trivial(1),
                                  [](const Permutation&) { return std::vector<int>{}; },
                                  "fixed(" + G.label + ")");
  return model_betti(m, FieldDescriptor::rationals());
}

// number-theoretic partitions of n (cycle types), parts descending
std::vector<std::vector<int>> cycle_types(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxp) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Permutation perm_of_cycle_type(const std::vector<int>& type, int n) {
  std::vector<int> image(n);
  int base = 0;
  for (int len : type) {
    for (int i = 0; i < len; ++i) image[base + i] = base + (i + 1) % len;
    base += len;
  }
  Permutation g;
  g.image = image;
  return g;
}

}  // namespace

int main() {
  criterion(1, "wedge baseline", [](std::string& why) {
    for (int n = 3; n <= 7; ++n) {
      BettiTable t = partition_quotient_betti(n, {n}, FieldDescriptor::rationals(), false);
      BettiTable want;
      want.field = FieldDescriptor::rationals();
      want.betti[n - 3] = factorial(n - 1);
      if (!tables_equal(t, want, why, "n=" + std::to_string(n))) return false;
    }
    return true;
  });

  criterion(2, "symmetric quotient vanishes", [](std::string& why) {
    for (int n = 3; n <= 6; ++n)
      for (const char* f : {"q", "fp:2", "fp:3"}) {
        BettiTable t = partition_quotient_betti(n, {n}, FieldDescriptor::parse(f));
        if (!t.betti.empty()) {
          why = "n=" + std::to_string(n) + " over " + f + ": " + t.str();
          return false;
        }
      }
    return true;
  });

  criterion(3, "worked example (4,4)", [](std::string& why) {
    BettiTable q = partition_quotient_betti(8, {4, 4}, FieldDescriptor::rationals());
    BettiTable f2 = partition_quotient_betti(8, {4, 4}, FieldDescriptor::prime(2));
    BettiTable wq, wf;
    wq.field = FieldDescriptor::rationals();
    wq.betti[5] = 8;
    wf.field = FieldDescriptor::prime(2);
    wf.betti[4] = 1;
    wf.betti[5] = 9;
    if (!tables_equal(q, wq, why, "Q")) return false;
    if (!tables_equal(f2, wf, why, "F2")) return false;
    // the closed-form prediction reproduces both tables
    if (!tables_equal(predicted_quotient_betti({4, 4}, FieldDescriptor::rationals()), wq, why,
                      "predicted Q"))
      return false;
    return tables_equal(predicted_quotient_betti({4, 4}, FieldDescriptor::prime(2)), wf, why,
                        "predicted F2");
  });

  criterion(4, "branching rule, structural", [](std::string& why) {
    // note: the orthogonal-chain count is Sum_{d | gcd} n_1!...n_k! |B(n_i/d)| / d!
    // (labelled words are counted modulo all d! permutations of the period
    // copies; /d! and /d agree for d <= 2 and diverge from d = 3 on, where
    // enumeration decides in favour of /d!).
    for (int n = 2; n <= 7; ++n) {
      auto pl = std::make_shared<PartitionLattice>(partition_lattice(n));
      for (const auto& comp : compositions_of(n)) {
        Fan fan = young_fan(pl, comp);
        OrthogonalChains oc = orthogonal_chains(fan);
        mpz_class want = labelled_word_count(comp);
        if (want != mpz_class(static_cast<unsigned long>(oc.chains.size()))) {
          why = "count mismatch for a composition of " + std::to_string(n);
          return false;
        }
        // bijection with labelled weak Lyndon words, as sets of chains
        std::set<std::vector<std::string>> from_fan, from_words;
        for (const Chain& c : oc.chains) {
          std::vector<std::string> key;
          for (int i : c) key.push_back((*pl)[i].str());
          from_fan.insert(key);
        }
        for (const LabelledWord& lw : labelled_weak_lyndon_words(comp)) {
          std::vector<std::string> key;
          for (const Partition& p : chain_from_word(lw, n)) key.push_back(p.str());
          from_words.insert(key);
        }
        if (from_fan != from_words) {
          why = "bijection mismatch for a composition of " + std::to_string(n);
          return false;
        }
      }
    }
    for (int n = 3; n <= 6; ++n)
      for (const auto& comp : compositions_of(n)) {
        if (n - comp[0] < 2) continue;  // F1 at the bottom is degenerate
        Matching m = build_matching(young_fan(n, comp));
        if (!m.report.ok()) {
          why = "matching on a composition of " + std::to_string(n) + ": " + m.report.detail;
          return false;
        }
      }
    return true;
  });

  criterion(5, "branching rule, homological", [](std::string& why) {
    std::map<int, BettiTable> baseline;
    for (int n = 3; n <= 7; ++n)
      baseline[n] = partition_quotient_betti(n, {n}, FieldDescriptor::rationals(), false);
    for (int n = 3; n <= 7; ++n) {
      auto pl = std::make_shared<PartitionLattice>(partition_lattice(n));
      for (const auto& comp : compositions_of(n)) {
        BettiTable assembled =
            assembled_wedge_betti(young_fan(pl, comp), FieldDescriptor::rationals());
        if (!tables_equal(assembled, baseline[n], why, "assembly at n=" + std::to_string(n)))
          return false;
      }
    }
    for (int n = 2; n <= 9; ++n)
      for (const auto& comp : compositions_of(n)) {
        DimensionIdentity id = branching_dimension_identity(comp);
        if (!id.equal) {
          why = "dimension identity fails at total " + std::to_string(n);
          return false;
        }
      }
    return true;
  });

  criterion(6, "fixed points", [](std::string& why) {
    for (auto [p, k, m] : std::vector<std::tuple<int, int, int>>{
             {2, 1, 2}, {2, 1, 3}, {2, 1, 4}, {2, 2, 1}, {2, 2, 2}, {3, 1, 2}, {3, 1, 3}}) {
      GroupAction G = elementary_abelian_action(p, k, m);
      std::string label =
          "(" + std::to_string(p) + "," + std::to_string(k) + "," + std::to_string(m) + ")";
      if (!tables_equal(fixed_betti(G), predicted_fixed_point_betti(p, k, m), why, label))
        return false;
      if (m == 1) {
        // transitive case: invariant partitions = intermediate subgroups
        SubgroupPosetReport r = invariant_partitions_as_subgroups(G.degree, G);
        if (!r.is_isomorphism) {
          why = "subgroup poset not isomorphic for " + label + ": " + r.detail;
          return false;
        }
      }
    }
    // non-isotypical cyclic actions collapse (cycle types with mixed lengths)
    for (int n = 3; n <= 6; ++n)
      for (const auto& type : cycle_types(n)) {
        if (std::set<int>(type.begin(), type.end()).size() < 2) continue;
        GroupAction G{n, {perm_of_cycle_type(type, n)}, "cyclic"};
        if (classify_action(n, G).kind != ActionClassification::Kind::NonIsotypical) {
          why = "mixed cycle type classified isotypical at n=" + std::to_string(n);
          return false;
        }
        BettiTable t = fixed_betti(G);
        if (!t.betti.empty()) {
          why = "non-isotypical fixed poset not collapsible at n=" + std::to_string(n) + ": " +
                t.str();
          return false;
        }
      }
    // the wreath product Sigma_2 wr Sigma_2 on 4 points also collapses
    BettiTable w = fixed_betti(iterated_wreath_action({2, 2}));
    if (!w.betti.empty()) {
      why = "wreath fixed poset: " + w.str();
      return false;
    }
    return true;
  });

  criterion(7, "subspace posets", [](std::string& why) {
    for (auto [q, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
      BettiTable got = building_betti(q, n, FieldDescriptor::rationals());
      long long rank = 1;
      for (int t = 0; t < n * (n - 1) / 2; ++t) rank *= q;
      BettiTable want;
      want.field = FieldDescriptor::rationals();
      want.betti[n - 2] = rank;
      if (!tables_equal(got, want, why, "q=" + std::to_string(q) + " n=" + std::to_string(n)))
        return false;
    }
    // parabolic fan on F_2^3: full flag, verified matching
    auto sl = std::make_shared<SubspaceLattice>(subspace_lattice(2, 3));
    std::vector<int> flag;
    long long want_sz = 2;
    int prev = -1;
    for (int r = 1; r < 3; ++r, want_sz *= 2)
      for (int i = 0; i < static_cast<int>(sl->elements.size()); ++i)
        if (static_cast<long long>(sl->elements[i].size()) == want_sz &&
            (prev < 0 || sl->order->leq(prev, i))) {
          flag.push_back(i);
          prev = i;
          break;
        }
    Matching m = build_matching(parabolic_fan(sl, flag));
    if (!m.report.perfect || !m.report.acyclic) {
      why = "parabolic matching: " + m.report.detail;
      return false;
    }
    return true;
  });

  criterion(8, "atom homology", [](std::string& why) {
    std::vector<std::tuple<int, int, int>> cases = {// (p, n, l)
                                                    {2, 2, 1}, {2, 2, 2}, {2, 2, 3}, {2, 2, 4},
                                                    {2, 3, 1}, {2, 3, 2}, {2, 4, 1},
                                                    {3, 2, 1}, {3, 3, 1}};
    const char* ext = std::getenv("PARTC_ACCEPTANCE_EXTENDED");
    bool extended = ext && std::strcmp(ext, "1") == 0;
    if (extended) cases.insert(cases.end(), {{2, 4, 2}, {3, 3, 3}});
    for (auto [p, n, l] : cases) {
      BettiTable got = model_betti(atom_model(n, l), FieldDescriptor::prime(p));
      std::string label =
          "p=" + std::to_string(p) + " n=" + std::to_string(n) + " l=" + std::to_string(l);
      if (!tables_equal(got, predicted_atom_betti(p, l, n), why, label)) return false;
    }
    if (!extended) why = "extended tier skipped (set PARTC_ACCEPTANCE_EXTENDED=1)";
    return true;
  });

  criterion(9, "EHP rank identity", [](std::string& why) {
    for (const char* f : {"q", "fp:2", "fp:3"}) {
      EhpReport r = ehp_rank_identity(FieldDescriptor::parse(f), 2, 2);
      if (!r.exact) {
        why = std::string(f) + ": " + r.detail;
        return false;
      }
    }
    return true;
  });

  criterion(10, "Witt oracle", [](std::string& why) {
    for (int n = 1; n <= 10; ++n)
      for (const auto& comp : compositions_of(n)) {
        mpz_class w = witt_count(comp);
        if (w != mpz_class(static_cast<unsigned long>(lyndon_words(comp).size()))) {
          why = "mismatch at total " + std::to_string(n);
          return false;
        }
      }
    return true;
  });

  criterion(11, "F_k / Bredon-Euler oracle", [](std::string& why) {
    for (auto [p, n, l] : std::vector<std::tuple<int, int, int>>{
             {2, 2, 1}, {2, 2, 2}, {2, 2, 3}, {2, 2, 4}, {2, 3, 1}, {2, 3, 2},
             {3, 2, 1}, {3, 3, 1}}) {
      BettiTable got = model_betti(sym_power_model(n, l), FieldDescriptor::prime(p));
      GradedDims gm(got.betti.begin(), got.betti.end());
      if (gm != sym_smash_power_dims(p, l, n)) {
        why = "assembled dims differ at p=" + std::to_string(p) + " n=" + std::to_string(n) +
              " l=" + std::to_string(l);
        return false;
      }
    }
    for (int p : {2, 3, 5})
      for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 7; l += 2) {
          BredonEulerReport r = bredon_euler_check(p, l, k);
          if (!r.match) {
            why = "Euler mismatch at p=" + std::to_string(p) + " k=" + std::to_string(k) +
                  " l=" + std::to_string(l) + ": " + r.detail;
            return false;
          }
        }
    return true;
  });

  criterion(12, "torsion bound + classifier", [](std::string& why) {
    for (const auto& comp : std::vector<std::vector<int>>{{2, 2}, {3, 3}, {2, 2, 2}}) {
      TorsionReport r = torsion_bound_check(comp, {2, 3, 5, 7});
      if (!r.ok) {
        why = "torsion bound violated at gcd " + std::to_string(r.gcd);
        return false;
      }
    }
    for (int n = 3; n <= 9; ++n)
      for (const auto& comp : compositions_of(n)) {
        int g = 0;
        for (int x : comp) g = std::gcd(g, x);
        bool want = g == 1 || (is_prime(g) && (n == 2 * g || (g == 2 && n == 6)));
        WedgeVerdict v = wedge_of_spheres_classifier(comp, true);
        if (v.wedge != want || (v.wedge && !v.verified)) {
          why = "classifier verdict at total " + std::to_string(n);
          return false;
        }
      }
    return true;
  });

  std::printf("%s (%d/12)\n", g_failures == 0 ? "ALL PASS" : "FAILURES", 12 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
