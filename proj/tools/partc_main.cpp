// partc: command-line front end for the partition-complex library.
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "ptc/collapse.hpp"
#include "ptc/fixed_points.hpp"
#include "ptc/lyndon.hpp"
#include "ptc/predictions.hpp"
#include "ptc/report.hpp"
#include "ptc/simplicial.hpp"

using namespace ptc;
using nlohmann::json;

namespace {

std::vector<int> parse_comma_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoi(tok));
  }
  if (out.empty()) throw std::invalid_argument("expected a comma-separated integer list");
  return out;
}

struct Ctx {
  std::string cache_dir;
  bool csv = false;
  RunReport report;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  BettiCache cache() const { return BettiCache{cache_dir}; }

  // Computes through the cache under a synthetic key.
  BettiTable cached(const std::string& key, const FieldDescriptor& field,
                    const std::function<BettiTable()>& compute) {
    BettiTable t;
    if (cache().load(key, field, t)) {
      report.cache_hit = true;
      return t;
    }
    t = compute();
    t.fingerprint = key;
    cache().store(t);
    return t;
  }

  void add_table(const std::string& name, const BettiTable& t) {
    report.payload[name] = betti_to_json(t);
    if (csv) report.payload[name + "_csv"] = betti_to_csv(t);
  }

  int finish() {
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    std::cout << report.to_json().dump(2) << std::endl;
    return report.all_passed() ? 0 : 1;
  }
};

BettiTable fixed_poset_betti(int n, const GroupAction& G, const FieldDescriptor& field) {
  FixedPoset fp = fixed_subposet(n, G);
  NerveModel m = open_nerve_model(fp.lattice, GroupAction::trivial(1),
                                  [](const Permutation&) { return std::vector<int>{}; },
                                  "fixed(" + G.label + ")");
  return model_betti(m, field);
}

BettiTable building_betti(int q, int dim, const FieldDescriptor& field) {
  SubspaceLattice sl = subspace_lattice(q, dim);
  NerveModel m = open_nerve_model(sl.order, GroupAction::trivial(1),
                                  [](const Permutation&) { return std::vector<int>{}; },
                                  "building(q=" + std::to_string(q) + ",dim=" + std::to_string(dim) + ")");
  return model_betti(m, field);
}

// A complete flag of proper nonzero subspaces, greedily by size.
std::vector<int> standard_flag(const SubspaceLattice& sl) {
  std::vector<int> flag;
  long long want = sl.q;
  int prev = -1;
  for (int r = 1; r < sl.dim; ++r, want *= sl.q)
    for (int i = 0; i < static_cast<int>(sl.elements.size()); ++i)
      if (static_cast<long long>(sl.elements[i].size()) == want &&
          (prev < 0 || sl.order->leq(prev, i))) {
        flag.push_back(i);
        prev = i;
        break;
      }
  return flag;
}

json matching_to_json(const Matching& m) {
  json j;
  j["visible"] = m.visible.size();
  j["invisible"] = m.invisible_count;
  j["fixed_index"] = m.fixed_index;
  j["perfect"] = m.report.perfect;
  j["acyclic"] = m.report.acyclic;
  j["equivariant"] = m.report.equivariant;
  j["fixed_ok"] = m.report.fixed_ok;
  j["face_closed"] = m.report.face_closed;
  if (!m.report.detail.empty()) j["detail"] = m.report.detail;
  return j;
}

// ---------------------------------------------------------------- suite --

struct SuiteCheck {
  std::string name;
  std::function<bool(std::string&)> run;
};

bool tables_equal(const BettiTable& a, const BettiTable& b, std::string& why) {
  if (a.betti == b.betti) return true;
  why = a.str() + " vs " + b.str();
  return false;
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

std::vector<SuiteCheck> suite_checks(const std::string& tier) {
  bool full = tier != "fast";
  bool extended = tier == "extended";
  std::vector<SuiteCheck> cs;
  auto add = [&](const std::string& name, std::function<bool(std::string&)> f) {
    cs.push_back({name, std::move(f)});
  };

  int base_top = full ? 7 : 5;
  for (int n = 3; n <= base_top; ++n)
    add("baseline_pi_" + std::to_string(n), [n](std::string& why) {
      BettiTable t = partition_quotient_betti(n, {n}, FieldDescriptor::rationals(), false);
      long long fact = 1;
      for (int i = 2; i < n; ++i) fact *= i;
      BettiTable want;
      want.field = FieldDescriptor::rationals();
      want.betti[n - 3] = fact;
      return tables_equal(t, want, why);
    });

  int koz_top = full ? 6 : 5;
  for (int n = 3; n <= koz_top; ++n)
    for (const std::string& f : std::vector<std::string>{"q", "fp:2", "fp:3"})
      add("kozlov_" + std::to_string(n) + "_" + f, [n, f](std::string& why) {
        BettiTable t = partition_quotient_betti(n, {n}, FieldDescriptor::parse(f));
        if (t.betti.empty()) return true;
        why = t.str();
        return false;
      });

  int quot_top = full ? 7 : 6;
  for (int n = 3; n <= quot_top; ++n)
    for (const auto& comp : compositions_of(n))
      for (const std::string& f : std::vector<std::string>{"q", "fp:2"})
        if (comp.size() > 1) {
          std::string label;
          for (int x : comp) label += std::to_string(x) + ".";
          add("quotient_" + label + f, [n, comp, f](std::string& why) {
            FieldDescriptor field = FieldDescriptor::parse(f);
            return tables_equal(partition_quotient_betti(n, comp, field),
                                predicted_quotient_betti(comp, field), why);
          });
        }

  if (full)
    add("worked_example_8_44", [](std::string& why) {
      BettiTable q = partition_quotient_betti(8, {4, 4}, FieldDescriptor::rationals());
      BettiTable f2 = partition_quotient_betti(8, {4, 4}, FieldDescriptor::prime(2));
      BettiTable wq, wf;
      wq.field = FieldDescriptor::rationals();
      wq.betti[5] = 8;
      wf.field = FieldDescriptor::prime(2);
      wf.betti[4] = 1;
      wf.betti[5] = 9;
      return tables_equal(q, wq, why) && tables_equal(f2, wf, why);
    });

  int witt_top = full ? 10 : 8;
  add("witt_vs_enumeration", [witt_top](std::string& why) {
    for (int n = 1; n <= witt_top; ++n)
      for (const auto& comp : compositions_of(n)) {
        mpz_class w = witt_count(comp);
        size_t got = lyndon_words(comp).size();
        if (w != mpz_class(static_cast<unsigned long>(got))) {
          why = "composition total " + std::to_string(n);
          return false;
        }
      }
    return true;
  });

  std::vector<std::tuple<int, int, int>> atoms = {{2, 2, 1}, {2, 2, 2}};
  if (full)
    atoms.insert(atoms.end(),
                 {{2, 2, 3}, {2, 2, 4}, {2, 3, 1}, {2, 3, 2}, {2, 4, 1}, {3, 2, 1}, {3, 3, 1}});
  if (extended) atoms.insert(atoms.end(), {{2, 4, 2}, {3, 3, 3}});
  for (auto [p, n, l] : atoms)
    add("atom_p" + std::to_string(p) + "_n" + std::to_string(n) + "_l" + std::to_string(l),
        [p = p, n = n, l = l](std::string& why) {
          BettiTable got = model_betti(atom_model(n, l), FieldDescriptor::prime(p));
          return tables_equal(got, predicted_atom_betti(p, l, n), why);
        });

  std::vector<std::tuple<int, int, int>> fks = {{2, 2, 1}, {2, 2, 2}, {2, 2, 3}};
  if (full) fks.insert(fks.end(), {{2, 2, 4}, {2, 3, 1}, {2, 3, 2}, {3, 2, 1}, {3, 3, 1}});
  for (auto [p, n, l] : fks)
    add("fk_assembly_p" + std::to_string(p) + "_n" + std::to_string(n) + "_l" + std::to_string(l),
        [p = p, n = n, l = l](std::string& why) {
          BettiTable got = model_betti(sym_power_model(n, l), FieldDescriptor::prime(p));
          GradedDims want = sym_smash_power_dims(p, l, n);
          GradedDims gm(got.betti.begin(), got.betti.end());
          if (gm == want) return true;
          why = "assembled dims differ";
          return false;
        });

  if (full) {
    for (const std::string& f : std::vector<std::string>{"q", "fp:2", "fp:3"})
      add("ehp_d2_m2_" + f, [f](std::string& why) {
        EhpReport r = ehp_rank_identity(FieldDescriptor::parse(f), 2, 2);
        why = r.detail;
        return r.exact;
      });
    add("bredon_euler", [](std::string& why) {
      for (int p : {2, 3, 5})
        for (int k = 1; k <= 3; ++k)
          for (int l = 1; l <= 7; l += 2) {
            BredonEulerReport r = bredon_euler_check(p, l, k);
            if (!r.match) {
              why = "p=" + std::to_string(p) + " k=" + std::to_string(k) +
                    " l=" + std::to_string(l) + ": " + r.detail;
              return false;
            }
          }
      return true;
    });
    add("torsion_bounds", [](std::string& why) {
      for (const auto& comp :
           std::vector<std::vector<int>>{{2, 2}, {3, 3}, {2, 2, 2}}) {
        TorsionReport r = torsion_bound_check(comp, {2, 3, 5, 7});
        if (!r.ok) {
          why = "composition gcd " + std::to_string(r.gcd);
          return false;
        }
      }
      return true;
    });
    for (auto [p, k, m] : std::vector<std::tuple<int, int, int>>{
             {2, 1, 2}, {2, 1, 3}, {2, 2, 1}, {3, 1, 2}})
      add("fixed_p" + std::to_string(p) + "_k" + std::to_string(k) + "_m" + std::to_string(m),
          [p = p, k = k, m = m](std::string& why) {
            GroupAction a = elementary_abelian_action(p, k, m);
            BettiTable got = fixed_poset_betti(a.degree, a, FieldDescriptor::rationals());
            return tables_equal(got, predicted_fixed_point_betti(p, k, m), why);
          });
    for (auto [q, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}})
      add("building_q" + std::to_string(q) + "_n" + std::to_string(n),
          [q = q, n = n](std::string& why) {
            BettiTable got = building_betti(q, n, FieldDescriptor::rationals());
            long long rank = 1;
            for (int t = 0; t < n * (n - 1) / 2; ++t) rank *= q;
            BettiTable want;
            want.field = FieldDescriptor::rationals();
            want.betti[n - 2] = rank;
            return tables_equal(got, want, why);
          });
  }

  int cls_top = full ? 9 : 7;
  add("classifier", [cls_top](std::string& why) {
    for (int n = 3; n <= cls_top; ++n)
      for (const auto& comp : compositions_of(n)) {
        int g = 0;
        for (int x : comp) g = std::gcd(g, x);
        bool want = g == 1 || (is_prime(g) && (n == 2 * g || (g == 2 && n == 6)));
        WedgeVerdict v = wedge_of_spheres_classifier(comp, false);
        if (v.wedge != want) {
          why = "total " + std::to_string(n);
          return false;
        }
      }
    return true;
  });

  int count_top = full ? 6 : 5;
  for (int n = 3; n <= count_top; ++n)
    add("young_count_" + std::to_string(n), [n](std::string& why) {
      for (const auto& comp : compositions_of(n)) {
        size_t got = orthogonal_chains(young_fan(n, comp)).chains.size();
        mpz_class want = labelled_word_count(comp);
        if (want != mpz_class(static_cast<unsigned long>(got))) {
          why = "composition of " + std::to_string(n) + ": " + std::to_string(got) +
                " chains vs " + want.get_str() + " labelled words";
          return false;
        }
      }
      return true;
    });

  int match_top = full ? 6 : 5;
  for (int n = 3; n <= match_top; ++n)
    add("young_matching_" + std::to_string(n), [n](std::string& why) {
      for (const auto& comp : compositions_of(n)) {
        if (n - comp[0] < 2) continue;  // F1 at the bottom is degenerate
        Matching m = build_matching(young_fan(n, comp));
        if (!m.report.ok()) {
          why = m.report.detail;
          return false;
        }
      }
      return true;
    });

  return cs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partition complex computations"};
  app.require_subcommand(1);

  Ctx ctx;
  const char* env_cache = std::getenv("PARTC_CACHE");
  if (env_cache) ctx.cache_dir = env_cache;
  app.add_option("--cache", ctx.cache_dir, "Betti cache directory");
  app.add_flag("--csv", ctx.csv, "include CSV renderings of Betti tables");

  // betti
  auto* cbetti = app.add_subcommand("betti", "reduced Betti numbers of |Pi_n|");
  int b_n = 5;
  std::string b_field = "q";
  bool b_compare = false;
  cbetti->add_option("--n", b_n, "number of points")->required();
  cbetti->add_option("--field", b_field, "q or fp:P");
  cbetti->add_flag("--compare", b_compare, "check against (n-1)! in degree n-3");

  // quotient
  auto* cquot = app.add_subcommand("quotient", "Betti numbers of |Pi_n|/Young");
  int q_n = 0;
  std::string q_young, q_field = "q";
  bool q_compare = false;
  cquot->add_option("--n", q_n, "number of points")->required();
  cquot->add_option("--young", q_young, "composition, e.g. 4,4")->required();
  cquot->add_option("--field", q_field, "q or fp:P");
  cquot->add_flag("--compare", q_compare, "check against the predicted table");

  // atom
  auto* catom = app.add_subcommand("atom", "Betti of Sigma|Pi_n|^d ^_{Sigma_n}(S^l)^n over F_p");
  int a_p = 2, a_l = 1, a_n = 2;
  bool a_compare = false;
  catom->add_option("--p", a_p, "prime")->required();
  catom->add_option("--l", a_l, "sphere dimension")->required();
  catom->add_option("--n", a_n, "weight")->required();
  catom->add_flag("--compare", a_compare, "check against the predicted table");

  // fixed
  auto* cfixed = app.add_subcommand("fixed", "fixed-point subposet homology");
  int f_p = 0, f_k = 0, f_m = 0, f_n = 0;
  std::string f_gens, f_wreath, f_field = "q";
  bool f_compare = false;
  cfixed->add_option("--p", f_p, "prime (elementary abelian mode)");
  cfixed->add_option("--k", f_k, "rank (elementary abelian mode)");
  cfixed->add_option("--m", f_m, "multiplicity (elementary abelian mode)");
  cfixed->add_option("--wreath", f_wreath, "wreath factors, e.g. 2,2");
  cfixed->add_option("--n", f_n, "degree for --gens");
  cfixed->add_option("--gens", f_gens, "generators in cycle notation, ; separated");
  cfixed->add_option("--field", f_field, "q or fp:P");
  cfixed->add_flag("--compare", f_compare, "check against the bouquet prediction");

  // collapse
  auto* ccol = app.add_subcommand("collapse", "build and verify a Morse matching");
  std::string col_kind = "young", col_young;
  int col_n = 0, col_q = 2, col_dim = 3, col_a = 0;
  std::string col_b;
  ccol->add_option("--kind", col_kind, "young | symmetry | parabolic");
  ccol->add_option("--n", col_n, "number of points (young/symmetry)");
  ccol->add_option("--young", col_young, "composition (young)");
  ccol->add_option("--a", col_a, "size of the A part (symmetry)");
  ccol->add_option("--b", col_b, "composition of the B part (symmetry)");
  ccol->add_option("--q", col_q, "field size (parabolic)");
  ccol->add_option("--dim", col_dim, "dimension (parabolic)");

  // lyndon
  auto* clyn = app.add_subcommand("lyndon", "Lyndon word enumeration");
  std::string l_comp;
  bool l_count = false, l_weak = false, l_labelled = false;
  clyn->add_option("--composition", l_comp, "letter multiplicities")->required();
  clyn->add_flag("--count", l_count, "only report the count");
  clyn->add_flag("--weak", l_weak, "weak Lyndon words");
  clyn->add_flag("--labelled", l_labelled, "labelled weak Lyndon words");

  // predict
  auto* cpred = app.add_subcommand("predict", "closed-form predictions");
  std::string p_kind, p_field = "q", p_young, p_letters, p_weights, p_primes = "2,3,5,7";
  int p_p = 2, p_l = 1, p_n = 2, p_k = 1, p_d = 2, p_m = 2;
  cpred->add_option("--kind", p_kind, "quotient|atom|multi|fk|euler|ehp|classify|torsion")
      ->required();
  cpred->add_option("--field", p_field, "q or fp:P");
  cpred->add_option("--young", p_young, "composition");
  cpred->add_option("--letters", p_letters, "sphere dimensions per letter");
  cpred->add_option("--weights", p_weights, "target multi-weight");
  cpred->add_option("--p", p_p, "prime");
  cpred->add_option("--l", p_l, "sphere dimension");
  cpred->add_option("--n", p_n, "weight");
  cpred->add_option("--k", p_k, "functor index");
  cpred->add_option("--d", p_d, "EHP weight");
  cpred->add_option("--m", p_m, "EHP sphere dimension");
  cpred->add_option("--primes", p_primes, "primes for the torsion report");

  // compare
  auto* ccmp = app.add_subcommand("compare", "compare two Betti-table JSON files");
  std::string cmp_lhs, cmp_rhs;
  ccmp->add_option("--computed", cmp_lhs, "JSON file")->required();
  ccmp->add_option("--predicted", cmp_rhs, "JSON file")->required();

  // suite
  auto* csuite = app.add_subcommand("suite", "run a fixture battery");
  std::string s_name = "fast";
  csuite->add_option("name", s_name, "fast | full | extended");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (cbetti->parsed()) {
      ctx.report.command = "betti";
      FieldDescriptor field = FieldDescriptor::parse(b_field);
      ctx.report.parameters = {{"n", b_n}, {"field", field.str()}};
      std::string key = "betti(n=" + std::to_string(b_n) + ")";
      BettiTable t = ctx.cached(key, field, [&] {
        return partition_quotient_betti(b_n, {b_n}, field, false);
      });
      ctx.add_table("betti", t);
      if (b_compare) {
        long long fact = 1;
        for (int i = 2; i < b_n; ++i) fact *= i;
        BettiTable want;
        want.field = field;
        want.betti[b_n - 3] = fact;
        CompareResult r = compare_tables(t, want);
        ctx.report.check("wedge_baseline", r.state);
        if (!r.diff.empty()) ctx.report.notes.push_back(r.diff);
      }
    } else if (cquot->parsed()) {
      ctx.report.command = "quotient";
      FieldDescriptor field = FieldDescriptor::parse(q_field);
      std::vector<int> comp = parse_comma_ints(q_young);
      if (std::accumulate(comp.begin(), comp.end(), 0) != q_n)
        throw std::invalid_argument("composition does not sum to n");
      ctx.report.parameters = {{"n", q_n}, {"young", q_young}, {"field", field.str()}};
      std::string key = "quotient(n=" + std::to_string(q_n) + ";" + q_young + ")";
      BettiTable t =
          ctx.cached(key, field, [&] { return partition_quotient_betti(q_n, comp, field); });
      ctx.add_table("betti", t);
      if (q_compare) {
        BettiTable pred = predicted_quotient_betti(comp, field);
        ctx.add_table("predicted", pred);
        CompareResult r = compare_tables(t, pred);
        ctx.report.check("prediction", r.state);
        if (!r.diff.empty()) ctx.report.notes.push_back(r.diff);
      }
    } else if (catom->parsed()) {
      ctx.report.command = "atom";
      FieldDescriptor field = FieldDescriptor::prime(a_p);
      ctx.report.parameters = {{"p", a_p}, {"l", a_l}, {"n", a_n}};
      std::string key = "atom(n=" + std::to_string(a_n) + ",l=" + std::to_string(a_l) + ")";
      BettiTable t =
          ctx.cached(key, field, [&] { return model_betti(atom_model(a_n, a_l), field); });
      ctx.add_table("betti", t);
      if (a_compare) {
        BettiTable pred = predicted_atom_betti(a_p, a_l, a_n);
        ctx.add_table("predicted", pred);
        CompareResult r = compare_tables(t, pred);
        ctx.report.check("prediction", r.state);
        if (!r.diff.empty()) ctx.report.notes.push_back(r.diff);
      }
    } else if (cfixed->parsed()) {
      ctx.report.command = "fixed";
      FieldDescriptor field = FieldDescriptor::parse(f_field);
      GroupAction G;
      if (f_p > 0) {
        G = elementary_abelian_action(f_p, f_k, f_m);
        ctx.report.parameters = {{"p", f_p}, {"k", f_k}, {"m", f_m}};
      } else if (!f_wreath.empty()) {
        G = iterated_wreath_action(parse_comma_ints(f_wreath));
        ctx.report.parameters = {{"wreath", f_wreath}};
      } else if (!f_gens.empty() && f_n > 0) {
        G.degree = f_n;
        std::stringstream ss(f_gens);
        std::string tok;
        while (std::getline(ss, tok, ';'))
          if (!tok.empty()) G.generators.push_back(Permutation::parse(tok, f_n));
        G.label = "custom";
        ctx.report.parameters = {{"n", f_n}, {"gens", f_gens}};
      } else {
        throw std::invalid_argument("give --p/--k/--m, --wreath, or --n/--gens");
      }
      ActionClassification cl = classify_action(G.degree, G);
      ctx.report.payload["classification"] = cl.kind_str();
      BettiTable t = fixed_poset_betti(G.degree, G, field);
      ctx.add_table("betti", t);
      if (f_compare) {
        if (f_p <= 0) throw std::invalid_argument("--compare needs the elementary abelian mode");
        BettiTable pred = predicted_fixed_point_betti(f_p, f_k, f_m, field);
        ctx.add_table("predicted", pred);
        CompareResult r = compare_tables(t, pred);
        ctx.report.check("prediction", r.state);
        if (!r.diff.empty()) ctx.report.notes.push_back(r.diff);
      }
    } else if (ccol->parsed()) {
      ctx.report.command = "collapse";
      Fan fan;
      if (col_kind == "young") {
        if (col_n <= 0 || col_young.empty())
          throw std::invalid_argument("young kind needs --n and --young");
        fan = young_fan(col_n, parse_comma_ints(col_young));
        ctx.report.parameters = {{"kind", col_kind}, {"n", col_n}, {"young", col_young}};
      } else if (col_kind == "symmetry") {
        if (col_n <= 0 || col_a <= 0 || col_b.empty())
          throw std::invalid_argument("symmetry kind needs --n, --a, --b");
        auto pl = std::make_shared<PartitionLattice>(partition_lattice(col_n));
        fan = symmetry_breaking_fan(pl, col_a, parse_comma_ints(col_b));
        ctx.report.parameters = {{"kind", col_kind}, {"n", col_n}, {"a", col_a}, {"b", col_b}};
      } else if (col_kind == "parabolic") {
        auto sl = std::make_shared<SubspaceLattice>(subspace_lattice(col_q, col_dim));
        fan = parabolic_fan(sl, standard_flag(*sl));
        ctx.report.parameters = {{"kind", col_kind}, {"q", col_q}, {"dim", col_dim}};
      } else {
        throw std::invalid_argument("unknown collapse kind " + col_kind);
      }
      auto [fan_ok, fan_why] = verify_fan(fan);
      ctx.report.check("fan_axioms", fan_ok ? CheckState::Pass : CheckState::Fail);
      if (!fan_ok) ctx.report.notes.push_back(fan_why);
      OrthogonalChains oc = orthogonal_chains(fan);
      ctx.report.payload["orthogonal_chains"] = oc.chains.size();
      ctx.report.payload["orthogonal_orbits"] = oc.orbit_list.size();
      int f10 = fan.f1_at_bottom();
      if (f10 == fan.lattice->bottom() || f10 == fan.lattice->top()) {
        // the collapse theorem needs a proper F1 at the bottom
        ctx.report.check("matching", CheckState::Skipped);
        ctx.report.notes.push_back("matching skipped: F1 at the bottom is degenerate");
      } else {
        Matching m = build_matching(fan);
        ctx.report.payload["matching"] = matching_to_json(m);
        ctx.report.check("matching", m.report.ok() ? CheckState::Pass : CheckState::Fail);
      }
    } else if (clyn->parsed()) {
      ctx.report.command = "lyndon";
      std::vector<int> comp = parse_comma_ints(l_comp);
      ctx.report.parameters = {{"composition", l_comp}};
      std::vector<Word> words =
          l_weak || l_labelled ? weak_lyndon_words(comp) : lyndon_words(comp);
      if (l_labelled) {
        std::vector<LabelledWord> lw = labelled_weak_lyndon_words(comp);
        ctx.report.payload["count"] = lw.size();
        if (!l_count) {
          json arr = json::array();
          for (const auto& w : lw) arr.push_back(word_str(w.word));
          ctx.report.payload["words"] = arr;
        }
      } else {
        ctx.report.payload["count"] = words.size();
        if (!l_count) {
          json arr = json::array();
          for (const auto& w : words) arr.push_back(word_str(w));
          ctx.report.payload["words"] = arr;
        }
        if (!l_weak) {
          mpz_class w = witt_count(comp);
          ctx.report.payload["witt"] = w.get_str();
          ctx.report.check("witt", w == mpz_class(static_cast<unsigned long>(words.size()))
                                       ? CheckState::Pass
                                       : CheckState::Fail);
        }
      }
    } else if (cpred->parsed()) {
      ctx.report.command = "predict";
      ctx.report.parameters = {{"kind", p_kind}};
      if (p_kind == "quotient") {
        FieldDescriptor field = FieldDescriptor::parse(p_field);
        std::vector<int> comp = parse_comma_ints(p_young);
        BettiTable t = predicted_quotient_betti(comp, field);
        ctx.add_table("predicted", t);
        json arr = json::array();
        std::vector<int> zeros(comp.size(), 0);
        for (const auto& s : allowable_sequences(field, zeros, comp)) arr.push_back(s.str());
        ctx.report.payload["sequences"] = arr;
      } else if (p_kind == "atom") {
        ctx.add_table("predicted", predicted_atom_betti(p_p, p_l, p_n));
      } else if (p_kind == "multi") {
        FieldDescriptor field = FieldDescriptor::parse(p_field);
        std::vector<int> letters = parse_comma_ints(p_letters);
        std::vector<int> weights = parse_comma_ints(p_weights);
        json arr = json::array();
        for (const auto& s : allowable_sequences(field, letters, weights)) {
          json e;
          e["seq"] = s.str();
          e["degree"] = s.degree;
          arr.push_back(e);
        }
        ctx.report.payload["sequences"] = arr;
      } else if (p_kind == "fk") {
        json dims = json::object();
        for (const auto& [d, r] : fk_dimension(p_p, p_k, p_l)) dims[std::to_string(d)] = r;
        ctx.report.payload["fk"] = dims;
        json asm_ = json::object();
        for (const auto& [d, r] : sym_smash_power_dims(p_p, p_l, p_n))
          asm_[std::to_string(d)] = r;
        ctx.report.payload["sym_power"] = asm_;
      } else if (p_kind == "euler") {
        BredonEulerReport r = bredon_euler_check(p_p, p_l, p_k);
        json eu = json::object(), ex = json::object();
        for (const auto& [d, v] : r.euler) eu[std::to_string(d)] = v;
        for (const auto& [d, v] : r.expected) ex[std::to_string(d)] = v;
        ctx.report.payload["euler"] = eu;
        ctx.report.payload["expected"] = ex;
        ctx.report.check("euler_match", r.match ? CheckState::Pass : CheckState::Fail);
        if (!r.detail.empty()) ctx.report.notes.push_back(r.detail);
      } else if (p_kind == "ehp") {
        EhpReport r = ehp_rank_identity(FieldDescriptor::parse(p_field), p_d, p_m);
        ctx.add_table("left", r.left);
        ctx.add_table("mid", r.mid);
        ctx.add_table("right", r.right);
        ctx.report.check("rank_identity", r.exact ? CheckState::Pass : CheckState::Fail);
        if (!r.detail.empty()) ctx.report.notes.push_back(r.detail);
      } else if (p_kind == "classify") {
        WedgeVerdict v = wedge_of_spheres_classifier(parse_comma_ints(p_young));
        ctx.report.payload["wedge"] = v.wedge;
        ctx.report.payload["gcd"] = v.gcd;
        ctx.report.payload["clause"] = v.clause;
        ctx.report.payload["detail"] = v.detail;
        ctx.report.check("verdict_verified", v.verified ? CheckState::Pass : CheckState::Fail);
      } else if (p_kind == "torsion") {
        TorsionReport r = torsion_bound_check(parse_comma_ints(p_young),
                                              parse_comma_ints(p_primes));
        json arr = json::array();
        for (size_t t = 0; t < r.entries.size(); ++t) {
          json e;
          e["p"] = r.entries[t].p;
          e["bound_applies"] = r.entries[t].bound_applies;
          e["equal"] = r.entries[t].equal;
          arr.push_back(e);
        }
        ctx.report.payload["primes"] = arr;
        ctx.add_table("rational", r.rational);
        ctx.report.check("torsion_bound", r.ok ? CheckState::Pass : CheckState::Fail);
      } else {
        throw std::invalid_argument("unknown prediction kind " + p_kind);
      }
    } else if (ccmp->parsed()) {
      ctx.report.command = "compare";
      std::ifstream la(cmp_lhs), rb(cmp_rhs);
      if (!la || !rb) throw std::invalid_argument("cannot open input files");
      BettiTable lhs = betti_from_json(json::parse(la));
      BettiTable rhs = betti_from_json(json::parse(rb));
      CompareResult r = compare_tables(lhs, rhs);
      ctx.report.check("tables_equal", r.state);
      if (!r.diff.empty()) ctx.report.notes.push_back(r.diff);
    } else if (csuite->parsed()) {
      ctx.report.command = "suite";
      if (s_name != "fast" && s_name != "full" && s_name != "extended")
        throw std::invalid_argument("unknown suite " + s_name);
      ctx.report.parameters = {{"tier", s_name}};
      for (const SuiteCheck& c : suite_checks(s_name)) {
        std::string why;
        bool ok = c.run(why);
        ctx.report.check(c.name, ok ? CheckState::Pass : CheckState::Fail);
        if (!ok) ctx.report.notes.push_back(c.name + ": " + why);
      }
    }
  } catch (const std::invalid_argument& e) {
    ctx.report.notes.push_back(std::string("argument error: ") + e.what());
    ctx.finish();
    return 2;
  } catch (const std::bad_alloc&) {
    ctx.report.notes.push_back("resource error: out of memory");
    ctx.finish();
    return 3;
  } catch (const std::exception& e) {
    ctx.report.notes.push_back(std::string("resource error: ") + e.what());
    ctx.finish();
    return 3;
  }
  return ctx.finish();
}
