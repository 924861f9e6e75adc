#include "ptc/collapse.hpp"

#include "ptc/simplicial.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace ptc {

namespace {

using Fn = std::function<int(const Chain&)>;

// (F_2^{<=y}, ..., F_r^{<=y}) on [lo, y]
std::vector<Fn> scope_left(const std::vector<Fn>& fns, const FiniteLattice* L, int y) {
  std::vector<Fn> out;
  for (size_t i = 1; i < fns.size(); ++i) {
    Fn f = fns[i];
    out.push_back([f, L, y](const Chain& tau) { return L->meet(f(tau), y); });
  }
  return out;
}

// (F_1^{>=y}, ..., F_r^{>=y}) on [y, hi]; the scoped bottom is prepended
std::vector<Fn> scope_right(const std::vector<Fn>& fns, const FiniteLattice* L, int y, int lo) {
  std::vector<Fn> out;
  for (size_t i = 0; i < fns.size(); ++i) {
    Fn f = fns[i];
    out.push_back([f, L, y, lo](const Chain& tau) {
      Chain ext;
      ext.reserve(tau.size() + 1);
      ext.push_back(lo);
      ext.insert(ext.end(), tau.begin(), tau.end());
      return L->join(f(ext), y);
    });
  }
  return out;
}

bool perp_in(const FiniteLattice& L, int t, int x, int lo, int hi) {
  return L.meet(t, x) == lo && L.join(t, x) == hi;
}

std::unique_ptr<OrthNode> build_tree(const FiniteLattice& L, const Chain& sigma,
                                     const std::vector<Fn>& fns, int beg, int end, int lo,
                                     int hi) {
  if (fns.empty()) return nullptr;
  auto node = std::make_unique<OrthNode>();
  node->lo = lo;
  node->hi = hi;
  node->beg = beg;
  node->end = end;
  node->Z = fns[0]({lo});
  if (node->Z == hi) return node;
  // the witness is the unique element of [sigma < hi] perpendicular to Z;
  // hi itself qualifies exactly when Z == lo
  int witness_pos = -1;
  for (int t = beg; t < end; ++t)
    if (perp_in(L, sigma[t], node->Z, lo, hi)) {
      witness_pos = t;
      break;
    }
  if (witness_pos < 0 && node->Z == lo) witness_pos = end;  // y = hi
  if (witness_pos < 0) return node;
  node->has_witness = true;
  node->y_pos = witness_pos;
  int y = witness_pos == end ? hi : sigma[witness_pos];
  auto left = build_tree(L, sigma, scope_left(fns, &L, y), beg, witness_pos, lo, y);
  int right_beg = witness_pos == end ? end : witness_pos + 1;
  auto right = build_tree(L, sigma, scope_right(fns, &L, y, lo), right_beg, end, y, hi);
  if (left) node->children.push_back(std::move(left));
  node->children.push_back(std::move(right));
  return node;
}

bool all_leaves_invisible(const OrthNode* node) {
  if (node->leaf()) return node->invisible_here();
  for (const auto& c : node->children)
    if (!all_leaves_invisible(c.get())) return false;
  return true;
}

const OrthNode* leftmost_bad_leaf(const OrthNode* node) {
  if (node->leaf()) return node->invisible_here() ? nullptr : node;
  for (const auto& c : node->children)
    if (const OrthNode* bad = leftmost_bad_leaf(c.get())) return bad;
  return nullptr;
}

void collect_witnesses(const OrthNode* node, const Chain& sigma, std::vector<int>& out) {
  if (node->has_witness) {
    out.push_back(node->y_pos == node->end ? node->hi : sigma[node->y_pos]);
    for (const auto& c : node->children) collect_witnesses(c.get(), sigma, out);
  }
}

void orth_rec(const FiniteLattice& L, const std::vector<Fn>& fns, int lo, int hi,
              std::vector<Chain>& out, Chain& prefix) {
  // appends every orthogonal chain of the scoped fan on [lo,hi] to prefix
  if (fns.empty()) {
    out.push_back(prefix);
    return;
  }
  int f10 = fns[0]({lo});
  if (f10 == hi) {
    out.push_back(prefix);
    return;
  }
  for (int t : L.open_interval(lo, hi)) {
    if (!perp_in(L, t, f10, lo, hi)) continue;
    // left part lives in (lo,t), then t, then the right part in (t,hi)
    size_t mark = prefix.size();
    std::vector<Chain> lefts;
    {
      std::vector<Chain> tmp;
      Chain empty;
      orth_rec(L, scope_left(fns, &L, t), lo, t, tmp, empty);
      lefts = std::move(tmp);
    }
    for (const Chain& l : lefts) {
      prefix.insert(prefix.end(), l.begin(), l.end());
      prefix.push_back(t);
      orth_rec(L, scope_right(fns, &L, t, lo), t, hi, out, prefix);
      prefix.resize(mark);
    }
  }
  if (f10 == lo) {
    // witness y = hi: the chain must be orthogonal to the shortened fan
    std::vector<Fn> tail(fns.begin() + 1, fns.end());
    orth_rec(L, tail, lo, hi, out, prefix);
  }
}

void chains_dfs(const FiniteLattice& L, const std::vector<std::vector<int>>& up, Chain& cur,
                std::vector<Chain>& out) {
  out.push_back(cur);
  for (int y : up[cur.back()]) {
    cur.push_back(y);
    chains_dfs(L, up, cur, out);
    cur.pop_back();
  }
}

// Image of a chain under a lattice automorphism; the positional image is
// again in lattice order, so no re-sorting happens (index order need not
// extend the lattice order).
Chain apply_map(const std::vector<int>& m, const Chain& c) {
  Chain out(c.size());
  for (size_t i = 0; i < c.size(); ++i) out[i] = m[c[i]];
  return out;
}

}  // namespace

std::vector<Chain> all_proper_chains(const FiniteLattice& L) {
  std::vector<std::vector<int>> up(L.size());
  std::vector<int> proper;
  for (int a = 0; a < L.size(); ++a) {
    if (a == L.bottom() || a == L.top()) continue;
    proper.push_back(a);
    for (int b = 0; b < L.size(); ++b)
      if (b != L.top() && L.lt(a, b)) up[a].push_back(b);
  }
  std::vector<Chain> out;
  Chain cur;
  for (int a : proper) {
    cur.assign(1, a);
    chains_dfs(L, up, cur, out);
  }
  return out;
}

std::unique_ptr<OrthNode> orthogonality_tree(const Fan& fan, const Chain& sigma) {
  const FiniteLattice& L = *fan.lattice;
  return build_tree(L, sigma, fan.functions, 0, static_cast<int>(sigma.size()), L.bottom(),
                    L.top());
}

InvisibilityResult is_invisible(const Fan& fan, const Chain& sigma) {
  InvisibilityResult res;
  auto tree = orthogonality_tree(fan, sigma);
  if (!tree) {  // empty fan: everything is invisible
    res.invisible = true;
    return res;
  }
  res.invisible = all_leaves_invisible(tree.get());
  if (res.invisible) collect_witnesses(tree.get(), sigma, res.witnesses);
  return res;
}

OrthogonalChains orthogonal_chains(const Fan& fan) {
  // Invisibility makes sense for any fan; a degenerate F1 at the bottom only
  // rules out the collapse/matching theorems, not the chain enumeration.
  // F1([0^]) = 1^ makes everything invisible (only the empty chain is
  // orthogonal); F1([0^]) = 0^ forces the witness y = 1^ and the enumeration
  // proceeds with the shortened fan.
  const FiniteLattice& L = *fan.lattice;
  OrthogonalChains out;
  Chain prefix;
  orth_rec(L, fan.functions, L.bottom(), L.top(), out.chains, prefix);
  std::sort(out.chains.begin(), out.chains.end());
  for (const Chain& c : out.chains) {
    std::vector<std::vector<int>> ivs;
    int lo = L.bottom();
    for (size_t i = 0; i <= c.size(); ++i) {
      int hi = i == c.size() ? L.top() : c[i];
      ivs.push_back(L.open_interval(lo, hi));
      lo = hi;
    }
    out.intervals.push_back(std::move(ivs));
  }
  if (!fan.generator_maps.empty()) {
    std::map<Chain, int> index;
    for (size_t i = 0; i < out.chains.size(); ++i) index[out.chains[i]] = static_cast<int>(i);
    std::vector<int> orbit_of(out.chains.size(), -1);
    for (size_t i = 0; i < out.chains.size(); ++i) {
      if (orbit_of[i] >= 0) continue;
      ItemOrbit orb;
      orb.representative = static_cast<int>(i);
      std::vector<int> queue{static_cast<int>(i)};
      orbit_of[i] = static_cast<int>(out.orbit_list.size());
      while (!queue.empty()) {
        int cur = queue.back();
        queue.pop_back();
        orb.members.push_back(cur);
        for (const auto& m : fan.generator_maps) {
          Chain img = apply_map(m, out.chains[cur]);
          auto it = index.find(img);
          if (it == index.end())
            throw std::logic_error("orthogonal chains are not stable under the action");
          if (orbit_of[it->second] < 0) {
            orbit_of[it->second] = orbit_of[i];
            queue.push_back(it->second);
          }
        }
      }
      std::sort(orb.members.begin(), orb.members.end());
      out.orbit_list.push_back(std::move(orb));
    }
  }
  return out;
}

BettiTable assembled_wedge_betti(const Fan& fan, const FieldDescriptor& field) {
  const auto& L = fan.lattice;
  OrthogonalChains oc = orthogonal_chains(fan);
  // reduced Betti of the open interval (lo,hi), memoized; the empty
  // interval is the reduced homology of the empty space: rank 1 in -1
  std::map<std::pair<int, int>, std::map<int, long long>> memo;
  auto interval_betti = [&](int lo, int hi) -> const std::map<int, long long>& {
    auto key = std::make_pair(lo, hi);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::map<int, long long> dims;
    if (L->open_interval(lo, hi).empty()) {
      dims[-1] = 1;
    } else {
      IntervalLattice il = interval(L, lo, hi);
      NerveModel m = open_nerve_model(il.lattice, GroupAction::trivial(1), {}, "interval");
      for (const auto& [d, r] : model_betti(m, field).betti) dims[d] = r;
    }
    return memo.emplace(key, std::move(dims)).first->second;
  };

  std::map<int, long long> total;
  for (const Chain& c : oc.chains) {
    // Kunneth product over the m+1 intervals, shifted by 2m
    std::map<int, long long> acc{{0, 1}};
    int lo = L->bottom();
    for (size_t i = 0; i <= c.size(); ++i) {
      int hi = i == c.size() ? L->top() : c[i];
      const auto& f = interval_betti(lo, hi);
      std::map<int, long long> next;
      for (const auto& [da, ra] : acc)
        for (const auto& [db, rb] : f) next[da + db] += ra * rb;
      acc = std::move(next);
      lo = hi;
    }
    int shift = 2 * static_cast<int>(c.size());
    for (const auto& [d, r] : acc) total[d + shift] += r;
  }
  BettiTable out;
  out.field = field;
  for (const auto& [d, r] : total)
    if (r != 0) out.betti[d] = r;
  return out;
}

Matching build_matching(const Fan& fan) {
  const FiniteLattice& L = *fan.lattice;
  int f10 = fan.f1_at_bottom();
  if (f10 == L.bottom() || f10 == L.top())
    throw std::invalid_argument("build_matching: F1 at the bottom must be proper");
  Matching m;
  std::vector<Chain> all = all_proper_chains(L);
  for (Chain& c : all) {
    if (is_invisible(fan, c).invisible)
      ++m.invisible_count;
    else
      m.visible.push_back(std::move(c));
  }
  std::sort(m.visible.begin(), m.visible.end());
  std::map<Chain, int> index;
  for (size_t i = 0; i < m.visible.size(); ++i) index[m.visible[i]] = static_cast<int>(i);
  m.partner.assign(m.visible.size(), -1);

  auto fail = [&](const std::string& why, const Chain& sigma) {
    std::string s = why + " at chain [";
    for (size_t i = 0; i < sigma.size(); ++i) s += (i ? " " : "") + std::to_string(sigma[i]);
    throw std::logic_error(s + "]");
  };

  Chain fixed_chain{f10};
  auto fit = index.find(fixed_chain);
  if (fit == index.end()) fail("fixed point not visible", fixed_chain);
  m.fixed_index = fit->second;

  for (size_t ci = 0; ci < m.visible.size(); ++ci) {
    if (static_cast<int>(ci) == m.fixed_index) continue;
    const Chain& sigma = m.visible[ci];
    auto tree = orthogonality_tree(fan, sigma);
    const OrthNode* w = leftmost_bad_leaf(tree.get());
    if (!w) fail("visible chain has no bad leaf", sigma);
    int k = static_cast<int>(sigma.size()) - 1;
    auto elem = [&](int pos) {
      if (pos < 0) return L.bottom();
      if (pos > k) return L.top();
      return sigma[pos];
    };
    int alpha = w->beg - 1, omega = w->end;
    int Z = w->Z;
    // largest i >= alpha with y_i ^ Z = y_alpha
    int i = alpha;
    for (int t = alpha + 1; t < omega; ++t)
      if (L.meet(elem(t), Z) == w->lo) i = t;
    // largest j >= i with y_j <= y_i v Z
    int up = L.join(elem(i), Z);
    int j = i;
    for (int t = i + 1; t < omega; ++t)
      if (L.leq(elem(t), up)) j = t;
    int mid = L.meet(up, elem(j + 1));
    Chain partner = sigma;
    if (elem(j) != mid)
      partner.insert(partner.begin() + (j + 1), mid);  // sigma+
    else
      partner.erase(partner.begin() + j);  // sigma-
    auto pit = index.find(partner);
    if (pit == index.end()) fail("matching partner is not visible", partner);
    m.partner[ci] = pit->second;
  }

  // -------- verification report --------
  Matching::Report& rep = m.report;
  rep.perfect = true;
  rep.fixed_ok = true;
  for (size_t ci = 0; ci < m.visible.size(); ++ci) {
    if (m.partner[ci] < 0) {
      if (static_cast<int>(ci) != m.fixed_index) {
        rep.fixed_ok = false;
        rep.detail += "unmatched non-fixed chain; ";
      }
      continue;
    }
    int p = m.partner[ci];
    if (m.partner[p] != static_cast<int>(ci)) {
      rep.perfect = false;
      rep.detail += "matching is not an involution; ";
      break;
    }
    const Chain &a = m.visible[ci], &b = m.visible[p];
    if (a.size() + 1 != b.size() && b.size() + 1 != a.size()) {
      rep.perfect = false;
      rep.detail += "matched pair not codimension one; ";
    } else {
      const Chain& small = a.size() < b.size() ? a : b;
      const Chain& big = a.size() < b.size() ? b : a;
      // chains are in lattice order, so test as ordered subsequence
      bool nested = true;
      size_t bi = 0;
      for (int x : small) {
        while (bi < big.size() && big[bi] != x) ++bi;
        if (bi == big.size()) {
          nested = false;
          break;
        }
        ++bi;
      }
      if (!nested) {
        rep.perfect = false;
        rep.detail += "matched pair not nested; ";
      }
    }
  }
  if (m.partner[m.fixed_index] != -1) {
    rep.fixed_ok = false;
    rep.detail += "fixed chain is matched; ";
  }

  rep.equivariant = true;
  for (const auto& gmap : fan.generator_maps) {
    for (size_t ci = 0; ci < m.visible.size() && rep.equivariant; ++ci) {
      if (m.partner[ci] < 0) continue;
      Chain gs = apply_map(gmap, m.visible[ci]);
      Chain gp = apply_map(gmap, m.visible[m.partner[ci]]);
      auto it = index.find(gs);
      if (it == index.end() || m.partner[it->second] < 0 ||
          m.visible[m.partner[it->second]] != gp) {
        rep.equivariant = false;
        rep.detail += "matching not equivariant; ";
      }
    }
  }

  // face-closedness of the visible complex + acyclicity of the Morse digraph
  rep.face_closed = true;
  std::vector<std::vector<int>> adj(m.visible.size());
  for (size_t ci = 0; ci < m.visible.size(); ++ci) {
    const Chain& c = m.visible[ci];
    if (m.partner[ci] >= 0 && m.visible[m.partner[ci]].size() > c.size())
      adj[ci].push_back(m.partner[ci]);  // upward matched edge
    if (c.size() == 1) continue;
    for (size_t drop = 0; drop < c.size(); ++drop) {
      Chain face;
      face.reserve(c.size() - 1);
      for (size_t t = 0; t < c.size(); ++t)
        if (t != drop) face.push_back(c[t]);
      auto it = index.find(face);
      if (it == index.end()) {
        rep.face_closed = false;
        rep.detail += "face of a visible chain is invisible; ";
        continue;
      }
      if (m.partner[ci] != it->second) adj[ci].push_back(it->second);  // ordinary face edge
    }
  }
  rep.acyclic = true;
  std::vector<int> colour(m.visible.size(), 0);
  std::vector<std::pair<int, size_t>> stack;
  for (size_t s = 0; s < m.visible.size() && rep.acyclic; ++s) {
    if (colour[s]) continue;
    stack.push_back({static_cast<int>(s), 0});
    colour[s] = 1;
    while (!stack.empty() && rep.acyclic) {
      auto& [v, next] = stack.back();
      if (next < adj[v].size()) {
        int u = adj[v][next++];
        if (colour[u] == 1) {
          rep.acyclic = false;
          rep.detail += "cycle in the Morse digraph; ";
        } else if (colour[u] == 0) {
          colour[u] = 1;
          stack.push_back({u, 0});
        }
      } else {
        colour[v] = 2;
        stack.pop_back();
      }
    }
    stack.clear();
  }
  return m;
}

// ---------------- fan families ----------------

namespace {

using Word = std::vector<int>;

// word attachment for a colouring: returns the words of the classes of the
// top partition of the chain, indexed like Partition::blocks
std::vector<Word> attach_words(const std::vector<Partition>& chain,
                               const std::vector<int>& colour) {
  std::vector<Word> words;
  const Partition& first = chain.front();
  for (const auto& block : first.blocks) {
    Word w;
    for (int s : block) w.push_back(colour[s]);
    std::sort(w.begin(), w.end());
    words.push_back(std::move(w));
  }
  for (size_t step = 1; step < chain.size(); ++step) {
    const Partition& prev = chain[step - 1];
    const Partition& cur = chain[step];
    // map each element to its class index in cur
    std::vector<int> cls(cur.n, -1);
    for (size_t b = 0; b < cur.blocks.size(); ++b)
      for (int s : cur.blocks[b]) cls[s] = static_cast<int>(b);
    std::vector<std::vector<Word>> grouped(cur.blocks.size());
    for (size_t b = 0; b < prev.blocks.size(); ++b)
      grouped[cls[prev.blocks[b].front()]].push_back(words[b]);
    std::vector<Word> next;
    for (auto& g : grouped) {
      std::sort(g.begin(), g.end());
      Word w;
      for (const Word& part : g) w.insert(w.end(), part.begin(), part.end());
      next.push_back(std::move(w));
    }
    words = std::move(next);
  }
  return words;
}

// merge the selected classes of p into one
Partition merge_classes(const Partition& p, const std::vector<char>& selected) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> merged;
  for (size_t b = 0; b < p.blocks.size(); ++b) {
    if (selected[b])
      merged.insert(merged.end(), p.blocks[b].begin(), p.blocks[b].end());
    else
      blocks.push_back(p.blocks[b]);
  }
  if (!merged.empty()) {
    std::sort(merged.begin(), merged.end());
    blocks.push_back(std::move(merged));
  }
  return Partition::from_blocks(p.n, blocks);
}

Fn young_function(std::shared_ptr<const PartitionLattice> pl, std::vector<int> colour,
                  bool merge_minimal) {
  auto memo = std::make_shared<std::unordered_map<std::string, int>>();
  return [pl, colour, merge_minimal, memo](const Chain& sigma) {
    std::string key(reinterpret_cast<const char*>(sigma.data()), sigma.size() * sizeof(int));
    auto it = memo->find(key);
    if (it != memo->end()) return it->second;
    std::vector<Partition> parts;
    parts.reserve(sigma.size());
    for (int idx : sigma) parts.push_back((*pl)[idx]);
    std::vector<Word> words = attach_words(parts, colour);
    const Word* min = &words[0];
    for (const Word& w : words)
      if (w < *min) min = &w;
    std::vector<char> selected(words.size());
    for (size_t b = 0; b < words.size(); ++b)
      selected[b] = merge_minimal ? (words[b] == *min) : (words[b] != *min);
    int result = pl->index_of(merge_classes(parts.back(), selected));
    (*memo)[key] = result;
    return result;
  };
}

std::vector<int> composition_colours(int n, const std::vector<int>& composition) {
  std::vector<int> colour;
  for (size_t c = 0; c < composition.size(); ++c)
    for (int t = 0; t < composition[c]; ++t) colour.push_back(static_cast<int>(c));
  if (static_cast<int>(colour.size()) != n)
    throw std::invalid_argument("composition does not sum to n");
  return colour;
}

std::vector<std::vector<int>> young_generator_maps(const PartitionLattice& pl,
                                                   const std::vector<int>& composition) {
  std::vector<std::vector<int>> maps;
  for (const Permutation& g : GroupAction::young(composition).generators)
    maps.push_back(pl.action_on_indices(g));
  return maps;
}

}  // namespace

Fan young_fan(std::shared_ptr<const PartitionLattice> pl, const std::vector<int>& composition) {
  std::vector<int> colour = composition_colours(pl->n, composition);
  Fan fan;
  fan.lattice = std::shared_ptr<const FiniteLattice>(pl, pl->order.get());
  fan.functions.push_back(young_function(pl, colour, false));  // F1: merge non-minimal
  fan.functions.push_back(young_function(pl, colour, true));   // F2: merge minimal
  fan.generator_maps = young_generator_maps(*pl, composition);
  fan.name = "young(";
  for (size_t i = 0; i < composition.size(); ++i)
    fan.name += (i ? "," : "") + std::to_string(composition[i]);
  fan.name += ")";
  return fan;
}

Fan young_fan(int n, const std::vector<int>& composition) {
  return young_fan(std::make_shared<PartitionLattice>(partition_lattice(n)), composition);
}

Fan point_fan(std::shared_ptr<const FiniteLattice> lattice, int x,
              std::vector<std::vector<int>> generator_maps, const std::string& name) {
  for (const auto& m : generator_maps)
    if (m[x] != x) throw std::invalid_argument("point_fan: x is not stable under the action");
  Fan fan;
  fan.lattice = lattice;
  int bottom = lattice->bottom(), top = lattice->top();
  fan.functions.push_back([x, bottom, top](const Chain& sigma) {
    return (sigma.size() == 1 && sigma[0] == bottom) ? x : top;
  });
  fan.generator_maps = std::move(generator_maps);
  fan.name = name;
  return fan;
}

Fan symmetry_breaking_fan(std::shared_ptr<const PartitionLattice> pl, int a_size,
                          const std::vector<int>& b_parts) {
  std::vector<int> composition{a_size};
  composition.insert(composition.end(), b_parts.begin(), b_parts.end());
  std::vector<int> colour = composition_colours(pl->n, composition);
  // x merges all of B into one class
  std::vector<std::vector<int>> blocks;
  std::vector<int> b_block;
  for (int s = 0; s < pl->n; ++s) {
    if (s < a_size)
      blocks.push_back({s});
    else
      b_block.push_back(s);
  }
  if (b_block.empty()) throw std::invalid_argument("symmetry_breaking_fan: B is empty");
  blocks.push_back(b_block);
  int x = pl->index_of(Partition::from_blocks(pl->n, blocks));
  Fan fan;
  fan.lattice = std::shared_ptr<const FiniteLattice>(pl, pl->order.get());
  int bottom = fan.lattice->bottom(), top = fan.lattice->top();
  fan.functions.push_back([x, bottom, top](const Chain& sigma) {
    return (sigma.size() == 1 && sigma[0] == bottom) ? x : top;
  });
  fan.functions.push_back(young_function(pl, colour, true));  // F2 of the Young fan
  fan.generator_maps = young_generator_maps(*pl, composition);
  fan.name = "symbreak(" + std::to_string(a_size) + "|...)";
  return fan;
}

Fan parabolic_fan(std::shared_ptr<const SubspaceLattice> sl, const std::vector<int>& flag) {
  const FiniteLattice& L = *sl->order;
  if (flag.empty()) throw std::invalid_argument("parabolic_fan: empty flag");
  for (size_t i = 0; i < flag.size(); ++i) {
    if (flag[i] == L.bottom() || flag[i] == L.top())
      throw std::invalid_argument("parabolic_fan: flag members must be proper nonzero");
    if (i + 1 < flag.size() && !L.lt(flag[i], flag[i + 1]))
      throw std::invalid_argument("parabolic_fan: not a strictly increasing flag");
  }
  Fan fan;
  fan.lattice = std::shared_ptr<const FiniteLattice>(sl, sl->order.get());
  int r = static_cast<int>(flag.size()) - 1;
  const FiniteLattice* Lp = fan.lattice.get();
  std::vector<int> A = flag;
  fan.functions.push_back([Lp, A, r](const Chain& sigma) {
    int i = static_cast<int>(sigma.size()) - 1;
    if (r - i < 0) return Lp->top();
    return Lp->join(A[r - i], sigma.back());
  });
  fan.name = "parabolic(r=" + std::to_string(r) + ")";
  return fan;
}

// ---------------- verification ----------------

namespace {

// all nonempty chains of the full lattice, ascending DFS
void full_chains_dfs(const FiniteLattice& L, const std::vector<std::vector<int>>& up, Chain& cur,
                     const std::function<bool(const Chain&)>& visit) {
  if (!visit(cur)) return;
  for (int y : up[cur.back()]) {
    cur.push_back(y);
    full_chains_dfs(L, up, cur, visit);
    cur.pop_back();
  }
}

void for_each_full_chain(const FiniteLattice& L, const std::function<bool(const Chain&)>& visit) {
  std::vector<std::vector<int>> up(L.size());
  for (int a = 0; a < L.size(); ++a)
    for (int b = 0; b < L.size(); ++b)
      if (L.lt(a, b)) up[a].push_back(b);
  Chain cur;
  for (int a = 0; a < L.size(); ++a) {
    cur.assign(1, a);
    full_chains_dfs(L, up, cur, visit);
  }
}

std::string chain_str(const Chain& c) {
  std::string s = "[";
  for (size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + std::to_string(c[i]);
  return s + "]";
}

}  // namespace

std::pair<bool, std::string> verify_orthogonality_function(
    const std::function<int(const Chain&)>& F, const FiniteLattice& L) {
  bool ok = true;
  std::string detail;
  for_each_full_chain(L, [&](const Chain& sigma) {
    if (!ok) return false;
    int ym = sigma.back();
    int f = F(sigma);
    for (int z = 0; z < L.size() && ok; ++z) {
      if (!L.lt(ym, z)) continue;
      std::vector<int> T;
      for (int t : L.open_interval(ym, z))
        if (L.meet(t, f) == ym && L.meet(L.join(t, f), z) == z) T.push_back(t);
      for (size_t a = 0; a < T.size() && ok; ++a)
        for (size_t b = a + 1; b < T.size() && ok; ++b)
          if (L.leq(T[a], T[b]) || L.leq(T[b], T[a])) {
            ok = false;
            detail = "comparable pair (" + std::to_string(T[a]) + "," + std::to_string(T[b]) +
                     ") in the subposet of sigma=" + chain_str(sigma) +
                     ", z=" + std::to_string(z);
          }
    }
    return ok;
  });
  return {ok, detail};
}

std::pair<bool, std::string> verify_fan(const Fan& fan) {
  const FiniteLattice& L = *fan.lattice;
  bool ok = true;
  std::string detail;
  for_each_full_chain(L, [&](const Chain& sigma) {
    if (!ok) return false;
    for (size_t fi = 0; fi < fan.functions.size() && ok; ++fi) {
      int v = fan.functions[fi](sigma);
      for (int y : sigma)
        if (!L.leq(y, v)) {
          ok = false;
          detail = "F" + std::to_string(fi + 1) + " not increasing at " + chain_str(sigma);
        }
      for (const auto& gmap : fan.generator_maps) {
        Chain gs = apply_map(gmap, sigma);
        if (fan.functions[fi](gs) != gmap[v]) {
          ok = false;
          detail = "F" + std::to_string(fi + 1) + " not equivariant at " + chain_str(sigma);
        }
      }
    }
    return ok;
  });
  return {ok, detail};
}

}  // namespace ptc
