#include "ptc/fixed_points.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ptc {

namespace {

bool invariant_under(const Partition& p, const std::vector<Permutation>& gens) {
  for (const Permutation& g : gens)
    if (!(apply_perm(g, p) == p)) return false;
  return true;
}

std::vector<Permutation> closure(const Permutation& id, std::vector<Permutation> gens) {
  std::set<Permutation> seen{id};
  std::vector<Permutation> queue{id};
  while (!queue.empty()) {
    Permutation cur = queue.back();
    queue.pop_back();
    for (const Permutation& g : gens) {
      Permutation next = g * cur;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};  // sorted by std::set
}

}  // namespace

FixedPoset fixed_subposet(int n, const GroupAction& G) {
  FixedPoset out;
  out.n = n;
  std::vector<Partition> all = all_partitions(n);
  for (size_t i = 0; i < all.size(); ++i)
    if (invariant_under(all[i], G.generators)) {
      out.elements.push_back(all[i]);
      out.parent_indices.push_back(static_cast<int>(i));
    }
  std::map<std::string, int> index;
  for (size_t i = 0; i < out.elements.size(); ++i) index[out.elements[i].str()] = static_cast<int>(i);
  const std::vector<Partition>& elems = out.elements;
  auto local = [index, elems](const Partition& p) {
    auto it = index.find(p.str());
    if (it == index.end())
      throw std::logic_error("meet/join of invariant partitions left the subposet");
    return it->second;
  };
  out.lattice = std::make_shared<FiniteLattice>(
      static_cast<int>(out.elements.size()),
      [&elems = out.elements](int a, int b) { return elems[a].refines(elems[b]); },
      [local, elems](int a, int b) { return local(partition_meet(elems[a], elems[b])); },
      [local, elems](int a, int b) { return local(partition_join(elems[a], elems[b])); });
  return out;
}

std::string ActionClassification::kind_str() const {
  switch (kind) {
    case Kind::NonIsotypical: return "non-isotypical";
    case Kind::Isotypical: return "isotypical";
    case Kind::Transitive: return "transitive";
  }
  return "?";
}

ActionClassification classify_action(int n, const GroupAction& G) {
  ActionClassification out;
  std::vector<std::vector<int>> orbits = G.point_orbits();
  std::vector<std::vector<int>> blocks;
  for (auto& o : orbits) blocks.push_back(o);
  out.orbit_partition = Partition::from_blocks(n, blocks);
  out.relabeling = Permutation::identity(n);
  if (orbits.size() == 1) {
    out.kind = ActionClassification::Kind::Transitive;
    out.orbit_size = n;
    out.multiplicity = 1;
    out.complement_nonempty = true;
    out.orbits_isomorphic = true;
    return out;
  }

  // criterion 1: the orbit partition has a G-invariant complement
  const Partition& x = out.orbit_partition;
  Partition bot = Partition::discrete(n), top = Partition::indiscrete(n);
  for (const Partition& y : all_partitions(n)) {
    if (y == bot || y == top) continue;
    bool invariant = true;
    for (const Permutation& g : G.generators)
      if (apply_perm(g, y) != y) {
        invariant = false;
        break;
      }
    if (!invariant) continue;
    if (partition_meet(x, y) == bot && partition_join(x, y) == top) {
      out.complement_nonempty = true;
      break;
    }
  }

  // criterion 2: explicit equivariant isomorphisms between the orbits
  std::vector<Permutation> elems = G.elements();
  size_t d = orbits[0].size();
  bool iso = true;
  std::vector<int> base;  // for each orbit i, the chosen image b of orbits[0][0]
  int a0 = orbits[0][0];
  base.push_back(a0);
  for (size_t i = 1; i < orbits.size() && iso; ++i) {
    if (orbits[i].size() != d) {
      iso = false;
      break;
    }
    bool found = false;
    for (int b : orbits[i]) {
      bool well = true;
      for (const Permutation& g : elems)
        for (const Permutation& h : elems)
          if (g(a0) == h(a0) && g(b) != h(b)) {
            well = false;
            break;
          }
      if (well) {
        base.push_back(b);
        found = true;
        break;
      }
    }
    iso = found;
  }
  out.orbits_isomorphic = iso;
  if (x != bot && out.complement_nonempty != out.orbits_isomorphic)
    throw std::logic_error("isotypicality criteria disagree");

  if (!iso) {
    out.kind = ActionClassification::Kind::NonIsotypical;
    return out;
  }
  out.kind = ActionClassification::Kind::Isotypical;
  out.orbit_size = static_cast<int>(d);
  out.multiplicity = n / static_cast<int>(d);
  // relabel f_i(g(a0)) -> i*d + position of g(a0) in sorted orbit 0
  std::vector<int> pos_in_first(n, -1);
  for (size_t t = 0; t < d; ++t) pos_in_first[orbits[0][t]] = static_cast<int>(t);
  std::vector<int> image(n, -1);
  for (size_t i = 0; i < orbits.size(); ++i)
    for (const Permutation& g : elems)
      image[g(base[i])] = static_cast<int>(i * d) + pos_in_first[g(a0)];
  out.relabeling.image = image;
  for (int v : image)
    if (v < 0) throw std::logic_error("relabeling incomplete");
  return out;
}

SubgroupPosetReport invariant_partitions_as_subgroups(int n, const GroupAction& G) {
  SubgroupPosetReport rep;
  std::vector<Permutation> elems = G.elements();
  Permutation id = Permutation::identity(n);
  std::vector<Permutation> H;
  for (const Permutation& g : elems)
    if (g(0) == 0) H.push_back(g);

  // all subgroups between H and G, by saturation
  std::set<std::vector<Permutation>> groups{closure(id, H)};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<Permutation>> snapshot(groups.begin(), groups.end());
    for (const auto& S : snapshot)
      for (const Permutation& g : elems) {
        if (std::binary_search(S.begin(), S.end(), g)) continue;
        std::vector<Permutation> gens = S;
        gens.push_back(g);
        if (groups.insert(closure(id, gens)).second) grew = true;
      }
  }
  std::vector<std::vector<Permutation>> list(groups.begin(), groups.end());
  std::sort(list.begin(), list.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  rep.num_subgroups = static_cast<int>(list.size());

  // coset representatives g_i with g_i(0) = i
  std::vector<Permutation> rep_of(n, id);
  std::vector<char> have(n, 0);
  for (const Permutation& g : elems)
    if (!have[g(0)]) {
      have[g(0)] = 1;
      rep_of[g(0)] = g;
    }
  for (int i = 0; i < n; ++i)
    if (!have[i]) throw std::invalid_argument("group is not transitive");

  for (const auto& K : list) {
    rep.subgroup_orders.push_back(static_cast<int>(K.size()));
    // i ~ j iff rep_j^{-1} rep_i lies in K
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 0);
    std::vector<std::vector<int>> blocks;
    std::vector<char> used(n, 0);
    for (int i = 0; i < n; ++i) {
      if (used[i]) continue;
      std::vector<int> block{i};
      used[i] = 1;
      for (int j = i + 1; j < n; ++j) {
        if (used[j]) continue;
        Permutation t = rep_of[j].inverse() * rep_of[i];
        if (std::binary_search(K.begin(), K.end(), t)) {
          block.push_back(j);
          used[j] = 1;
        }
      }
      blocks.push_back(std::move(block));
    }
    rep.coset_partitions.push_back(Partition::from_blocks(n, blocks));
  }

  FixedPoset fixed = fixed_subposet(n, G);
  rep.num_invariant = static_cast<int>(fixed.elements.size());

  // verify the bijection and order preservation in both directions
  rep.is_isomorphism = true;
  std::set<std::string> images;
  for (const Partition& p : rep.coset_partitions) {
    if (!invariant_under(p, G.generators)) {
      rep.is_isomorphism = false;
      rep.detail += "coset partition not invariant; ";
    }
    images.insert(p.str());
  }
  if (static_cast<int>(images.size()) != rep.num_subgroups) {
    rep.is_isomorphism = false;
    rep.detail += "map not injective; ";
  }
  if (rep.num_subgroups != rep.num_invariant) {
    rep.is_isomorphism = false;
    rep.detail += "cardinalities differ; ";
  }
  for (const Partition& p : fixed.elements)
    if (!images.count(p.str())) {
      rep.is_isomorphism = false;
      rep.detail += "invariant partition " + p.str() + " missed; ";
    }
  for (size_t a = 0; a < list.size() && rep.is_isomorphism; ++a)
    for (size_t b = 0; b < list.size(); ++b) {
      bool sub = std::includes(list[b].begin(), list[b].end(), list[a].begin(), list[a].end());
      bool ref = rep.coset_partitions[a].refines(rep.coset_partitions[b]);
      if (sub != ref) {
        rep.is_isomorphism = false;
        rep.detail += "order not preserved; ";
        break;
      }
    }
  return rep;
}

BettiTable predicted_fixed_point_betti(int p, int k, int m, const FieldDescriptor& field) {
  if (k < 1 || m < 1) throw std::invalid_argument("need k >= 1, m >= 1");
  long long rank = 1;
  for (int t = 2; t < m; ++t) rank *= t;  // (m-1)!
  long long e = static_cast<long long>(k) * (m - 1) + static_cast<long long>(k) * (k - 1) / 2;
  for (long long t = 0; t < e; ++t) rank *= p;
  BettiTable out;
  out.field = field;
  out.betti[m + k - 3] = rank;
  out.fingerprint = "fixed-prediction(p=" + std::to_string(p) + ",k=" + std::to_string(k) +
                    ",m=" + std::to_string(m) + ")";
  return out;
}

GroupAction elementary_abelian_action(int p, int k, int m) {
  int block = 1;
  for (int t = 0; t < k; ++t) block *= p;
  int n = m * block;
  GroupAction a;
  a.degree = n;
  a.label = "F" + std::to_string(p) + "^" + std::to_string(k) + " x" + std::to_string(m);
  int stride = 1;
  for (int j = 0; j < k; ++j) {
    Permutation g = Permutation::identity(n);
    for (int b = 0; b < m; ++b)
      for (int v = 0; v < block; ++v) {
        int digit = (v / stride) % p;
        int w = v + (digit + 1 == p ? stride * (1 - p) : stride);
        g.image[b * block + v] = b * block + w;
      }
    a.generators.push_back(g);
    stride *= p;
  }
  return a;
}

GroupAction iterated_wreath_action(const std::vector<int>& ds) {
  if (ds.empty()) throw std::invalid_argument("empty wreath data");
  int inner = 1;
  GroupAction a;
  a.degree = 1;
  for (int d : ds) {
    GroupAction next;
    next.degree = a.degree * d;
    // the previous group acting on the first block
    for (const Permutation& g : a.generators) {
      Permutation ext = Permutation::identity(next.degree);
      for (int t = 0; t < a.degree; ++t) ext.image[t] = g(t);
      next.generators.push_back(ext);
    }
    // Sigma_d permuting the blocks of size a.degree
    for (const Permutation& s : GroupAction::symmetric(d).generators) {
      Permutation ext = Permutation::identity(next.degree);
      for (int b = 0; b < d; ++b)
        for (int t = 0; t < a.degree; ++t) ext.image[b * a.degree + t] = s(b) * a.degree + t;
      next.generators.push_back(ext);
    }
    a = std::move(next);
    inner *= d;
  }
  a.label = "wreath";
  return a;
}

}  // namespace ptc
