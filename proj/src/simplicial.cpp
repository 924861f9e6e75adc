#include "ptc/simplicial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ptc {

namespace {

// mixed-radix layout of product elements: lattice index first, then the
// permuted sphere coordinates, then the extra (fixed) spheres
struct Layout {
  int lat_size = 1;
  int sphere_copies = 0, sphere_dim = 0;
  std::vector<int> extra;
  long long total = 1;

  explicit Layout(const NerveModel& m) {
    lat_size = m.lattice ? m.lattice->size() : 1;
    sphere_copies = m.sphere_copies;
    sphere_dim = m.sphere_dim;
    extra = m.extra_spheres;
    total = lat_size;
    for (int i = 0; i < sphere_copies; ++i) total *= sphere_dim + 1;
    for (int s : extra) total *= s + 1;
    if (total > (1LL << 31) - 1) throw std::runtime_error("product poset too large");
  }

  struct Point {
    int lat;
    std::vector<int> sphere;
    std::vector<int> extra;
  };

  int encode(const Point& p) const {
    long long e = p.lat;
    for (int i = 0; i < sphere_copies; ++i) e = e * (sphere_dim + 1) + p.sphere[i];
    for (size_t j = 0; j < extra.size(); ++j) e = e * (extra[j] + 1) + p.extra[j];
    return static_cast<int>(e);
  }

  Point decode(int enc) const {
    Point p;
    p.extra.resize(extra.size());
    p.sphere.resize(sphere_copies);
    long long e = enc;
    for (int j = static_cast<int>(extra.size()) - 1; j >= 0; --j) {
      p.extra[j] = static_cast<int>(e % (extra[j] + 1));
      e /= extra[j] + 1;
    }
    for (int i = sphere_copies - 1; i >= 0; --i) {
      p.sphere[i] = static_cast<int>(e % (sphere_dim + 1));
      e /= sphere_dim + 1;
    }
    p.lat = static_cast<int>(e);
    return p;
  }
};

// cells of one degree, lex-sorted (DFS emits them in lex order)
int find_cell(const std::vector<int>& flat, int stride, const int* key) {
  long long count = static_cast<long long>(flat.size()) / stride;
  long long lo = 0, hi = count;
  while (lo < hi) {
    long long mid = (lo + hi) / 2;
    const int* cand = &flat[mid * stride];
    int cmp = std::lexicographical_compare_three_way(cand, cand + stride, key, key + stride) < 0
                  ? -1
                  : (std::equal(cand, cand + stride, key) ? 0 : 1);
    if (cmp == 0) return static_cast<int>(mid);
    if (cmp < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  return -1;
}

struct Enumerator {
  const NerveModel& m;
  Layout layout;
  int bottom_enc = 0, top_enc = 0;
  std::vector<std::vector<int>> lat_up;      // strictly-greater lists per lattice index
  std::vector<int> proper;                   // proper lattice elements (open nerve)
  CellTable cells;
  int cap;
  bool with_group;

  explicit Enumerator(const NerveModel& model) : m(model), layout(model) {
    with_group = m.group_elements.size() > 1;
    int lat_n = layout.lat_size;
    lat_up.resize(lat_n);
    if (m.lattice) {
      for (int a = 0; a < lat_n; ++a)
        for (int b = 0; b < lat_n; ++b)
          if (m.lattice->lt(a, b)) lat_up[a].push_back(b);
      for (int a = 0; a < lat_n; ++a)
        if (a != m.lattice->bottom() && a != m.lattice->top()) proper.push_back(a);
    }
    Layout::Point bot, top;
    bot.lat = m.lattice ? m.lattice->bottom() : 0;
    top.lat = m.lattice ? m.lattice->top() : 0;
    bot.sphere.assign(layout.sphere_copies, 0);
    top.sphere.assign(layout.sphere_copies, layout.sphere_dim);
    for (int s : layout.extra) {
      bot.extra.push_back(0);
      top.extra.push_back(s);
    }
    bottom_enc = layout.encode(bot);
    top_enc = layout.encode(top);
    cap = m.degree_cap;
  }

  void record(const std::vector<int>& chain) {
    int degree = static_cast<int>(chain.size()) - 1;
    if (cap >= 0 && degree > cap) return;
    if (degree >= static_cast<int>(cells.flat.size())) cells.flat.resize(degree + 1);
    cells.flat[degree].insert(cells.flat[degree].end(), chain.begin(), chain.end());
  }

  // successors of `cur` in the quotient model: every coordinate may grow,
  // sphere-type coordinates by at most one (larger jumps skip a value and
  // the chain could never cover it)
  std::vector<int> quotient_candidates(int cur) const {
    Layout::Point p = layout.decode(cur);
    std::vector<int> lats{p.lat};
    for (int b : lat_up[p.lat]) lats.push_back(b);
    std::vector<int> out;
    int nv = layout.sphere_copies + static_cast<int>(layout.extra.size());
    for (int lat : lats)
      for (int mask = 0; mask < (1 << nv); ++mask) {
        if (lat == p.lat && mask == 0) continue;
        Layout::Point q = p;
        q.lat = lat;
        bool ok = true;
        for (int i = 0; i < layout.sphere_copies && ok; ++i)
          if (mask & (1 << i)) {
            if (++q.sphere[i] > layout.sphere_dim) ok = false;
          }
        for (size_t j = 0; j < layout.extra.size() && ok; ++j)
          if (mask & (1 << (layout.sphere_copies + j))) {
            if (++q.extra[j] > layout.extra[j]) ok = false;
          }
        if (ok) out.push_back(layout.encode(q));
      }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<int> open_candidates(int cur) const {
    Layout::Point p = layout.decode(cur);
    std::vector<int> out;
    for (int b : lat_up[p.lat])
      if (b != m.lattice->top()) out.push_back(b);  // bottom is never above
    return out;
  }

  // ---- trivial-group DFS ----

  void dfs_plain(std::vector<int>& chain) {
    bool is_cell = m.open_nerve || chain.back() == top_enc;
    if (is_cell) record(chain);
    if (cap >= 0 && static_cast<int>(chain.size()) > cap) return;
    std::vector<int> cand =
        m.open_nerve ? open_candidates(chain.back()) : quotient_candidates(chain.back());
    for (int y : cand) {
      chain.push_back(y);
      dfs_plain(chain);
      chain.pop_back();
    }
  }

  // ---- orbit-representative DFS ----
  // A canonical chain's prefix is canonical, so extending a canonical
  // chain by the minimum of each prefix-stabilizer orbit of candidates
  // yields each cell orbit exactly once, already in canonical form.

  int apply_elem(int g, int enc) const { return m.element_maps[g][enc]; }

  void dfs_orbit(std::vector<int>& chain, const std::vector<int>& stab) {
    bool is_cell = m.open_nerve || chain.back() == top_enc;
    if (is_cell) record(chain);
    if (cap >= 0 && static_cast<int>(chain.size()) > cap) return;
    std::vector<int> cand =
        m.open_nerve ? open_candidates(chain.back()) : quotient_candidates(chain.back());
    std::vector<char> marked(cand.size(), 0);
    for (size_t ci = 0; ci < cand.size(); ++ci) {
      if (marked[ci]) continue;
      int y = cand[ci];
      // mark the stabilizer orbit of y; collect the stabilizer of y inside
      std::vector<int> new_stab;
      for (int g : stab) {
        int gy = apply_elem(g, y);
        if (gy == y) {
          new_stab.push_back(g);
        } else {
          auto it = std::lower_bound(cand.begin(), cand.end(), gy);
          if (it != cand.end() && *it == gy) marked[it - cand.begin()] = 1;
        }
      }
      chain.push_back(y);
      dfs_orbit(chain, new_stab);
      chain.pop_back();
    }
  }

  void run() {
    std::vector<int> chain;
    if (m.open_nerve) {
      if (!with_group) {
        for (int a : proper) {
          chain.assign(1, layout.encode({a, {}, {}}));
          dfs_plain(chain);
        }
      } else {
        int ng = static_cast<int>(m.group_elements.size());
        for (int a : proper) {
          int enc = layout.encode({a, {}, {}});
          // keep only orbit-minimal starting vertices
          bool canonical = true;
          std::vector<int> stab;
          for (int g = 0; g < ng && canonical; ++g) {
            int ge = apply_elem(g, enc);
            if (ge < enc) canonical = false;
            if (ge == enc) stab.push_back(g);
          }
          if (!canonical) continue;
          chain.assign(1, enc);
          dfs_orbit(chain, stab);
        }
      }
    } else {
      chain.assign(1, bottom_enc);
      if (!with_group) {
        dfs_plain(chain);
      } else {
        std::vector<int> all(m.group_elements.size());
        std::iota(all.begin(), all.end(), 0);
        dfs_orbit(chain, all);  // the bottom is fixed by everything
      }
    }
  }

  // collapsed test for a face of a cell (the only failure modes are losing
  // an endpoint or skipping a sphere value at the merged step)
  bool face_is_cell(const std::vector<int>& face) const {
    if (m.open_nerve) return true;
    if (face.front() != bottom_enc || face.back() != top_enc) return false;
    for (size_t i = 0; i + 1 < face.size(); ++i) {
      Layout::Point a = layout.decode(face[i]);
      Layout::Point b = layout.decode(face[i + 1]);
      for (int t = 0; t < layout.sphere_copies; ++t)
        if (b.sphere[t] - a.sphere[t] > 1) return false;
      for (size_t j = 0; j < layout.extra.size(); ++j)
        if (b.extra[j] - a.extra[j] > 1) return false;
    }
    return true;
  }

  // full-group canonical form (used for boundary faces only)
  std::vector<int> canonicalize(const std::vector<int>& chain) const {
    if (!with_group) return chain;
    std::vector<int> best = chain, tmp(chain.size());
    bool best_is_input = true;
    for (size_t g = 0; g < m.element_maps.size(); ++g) {
      const std::vector<int>& map = m.element_maps[g];
      bool smaller = false, decided = false;
      for (size_t i = 0; i < chain.size(); ++i) {
        tmp[i] = map[chain[i]];
        if (!decided && tmp[i] != best[i]) {
          decided = true;
          smaller = tmp[i] < best[i];
          if (!smaller) break;
        }
      }
      if (decided && smaller) {
        // finish mapping the tail
        for (size_t i = 0; i < chain.size(); ++i) tmp[i] = map[chain[i]];
        best = tmp;
        best_is_input = false;
      }
    }
    (void)best_is_input;
    return best;
  }
};

}  // namespace

long long NerveModel::num_product_elements() const { return Layout(*this).total; }

std::string NerveModel::fingerprint() const {
  std::string fp = name + "|" + (open_nerve ? "open" : "quot") + "|s" +
                   std::to_string(sphere_copies) + "x" + std::to_string(sphere_dim) + "|g" +
                   action.label + "|v1";
  for (int s : extra_spheres) fp += "+S" + std::to_string(s);
  return fp;
}

void finalize_model(NerveModel& m,
                    const std::function<std::vector<int>(const Permutation&)>& lattice_index_perm) {
  m.group_elements = m.action.generators.empty() ? std::vector<Permutation>{Permutation::identity(m.action.degree)}
                                                 : m.action.elements();
  if (m.group_elements.size() <= 1) {
    m.element_maps.clear();
    return;
  }
  Layout layout(m);
  m.element_maps.assign(m.group_elements.size(), {});
  for (size_t gi = 0; gi < m.group_elements.size(); ++gi) {
    const Permutation& g = m.group_elements[gi];
    std::vector<int> lat_map;
    if (m.lattice && lattice_index_perm)
      lat_map = lattice_index_perm(g);
    else if (m.lattice) {
      lat_map.resize(m.lattice->size());
      std::iota(lat_map.begin(), lat_map.end(), 0);
    }
    std::vector<int>& out = m.element_maps[gi];
    out.resize(layout.total);
    for (long long e = 0; e < layout.total; ++e) {
      Layout::Point p = layout.decode(static_cast<int>(e));
      Layout::Point q = p;
      if (!lat_map.empty()) q.lat = lat_map[p.lat];
      if (m.permute_spheres)
        for (int i = 0; i < layout.sphere_copies; ++i) q.sphere[g(i)] = p.sphere[i];
      out[e] = layout.encode(q);
    }
  }
}

NerveModel open_nerve_model(std::shared_ptr<const FiniteLattice> lattice, GroupAction action,
                            const std::function<std::vector<int>(const Permutation&)>& lattice_index_perm,
                            const std::string& name) {
  NerveModel m;
  m.lattice = std::move(lattice);
  m.open_nerve = true;
  m.action = std::move(action);
  m.name = name;
  finalize_model(m, lattice_index_perm);
  return m;
}

NerveModel suspension_smash_model(std::shared_ptr<const FiniteLattice> lattice, GroupAction action,
                                  const std::function<std::vector<int>(const Permutation&)>& lattice_index_perm,
                                  int sphere_copies, int sphere_dim, std::vector<int> extra_spheres,
                                  const std::string& name) {
  NerveModel m;
  m.lattice = std::move(lattice);
  m.open_nerve = false;
  m.sphere_copies = sphere_copies;
  m.sphere_dim = sphere_dim;
  m.extra_spheres = std::move(extra_spheres);
  m.permute_spheres = sphere_copies > 0;
  m.action = std::move(action);
  m.name = name;
  finalize_model(m, lattice_index_perm);
  return m;
}

NerveModel atom_model(int n, int l, std::vector<int> extra_spheres) {
  if (n < 1 || l < 1) throw std::invalid_argument("atom_model: need n >= 1, l >= 1");
  if (n == 1) {
    // weight-one convention: the atom is plain S^{l+1}
    NerveModel m;
    m.open_nerve = false;
    m.sphere_copies = 0;
    m.extra_spheres = extra_spheres;
    m.extra_spheres.insert(m.extra_spheres.begin(), l + 1);
    m.action = GroupAction::trivial(1);
    m.name = "atom(1," + std::to_string(l) + ")";
    finalize_model(m, nullptr);
    return m;
  }
  auto pl = std::make_shared<PartitionLattice>(partition_lattice(n));
  auto index_perm = [pl](const Permutation& g) { return pl->action_on_indices(g); };
  NerveModel m = suspension_smash_model(
      std::shared_ptr<const FiniteLattice>(pl, pl->order.get()), GroupAction::symmetric(n),
      index_perm, n, l, std::move(extra_spheres),
      "atom(" + std::to_string(n) + "," + std::to_string(l) + ")");
  return m;
}

NerveModel sym_power_model(int n, int l) {
  NerveModel m;
  m.open_nerve = false;
  m.sphere_copies = n;
  m.sphere_dim = l;
  m.permute_spheres = true;
  m.action = GroupAction::symmetric(n);
  m.name = "sympow(" + std::to_string(n) + "," + std::to_string(l) + ")";
  finalize_model(m, nullptr);
  return m;
}

long long CellTable::total() const {
  long long t = 0;
  for (int d = 0; d < static_cast<int>(flat.size()); ++d) t += count(d);
  return t;
}

CellTable enumerate_cells(const NerveModel& m) {
  Enumerator e(m);
  e.run();
  return std::move(e.cells);
}

ChainComplex orbit_chain_complex(const NerveModel& m, const FieldDescriptor& field) {
  Enumerator e(m);
  e.run();
  const CellTable& cells = e.cells;
  ChainComplex c;
  c.field = field;
  c.fingerprint = m.fingerprint() + "|" + field.str();
  int top = static_cast<int>(cells.flat.size()) - 1;
  if (top < 0) {
    c.basis_size = {0};
    c.boundary.resize(1);
    return c;
  }
  c.basis_size.resize(top + 1);
  c.boundary.resize(top + 1);
  for (int d = 0; d <= top; ++d) c.basis_size[d] = cells.count(d);
  for (int d = 1; d <= top; ++d) {
    SparseMatrix& bd = c.boundary[d];
    bd.rows = static_cast<int>(cells.count(d - 1));
    bd.cols = static_cast<int>(cells.count(d));
    int stride = d + 1;
    std::vector<int> face(d);
    for (long long ci = 0; ci < bd.cols; ++ci) {
      const int* cell = &cells.flat[d][ci * stride];
      for (int i = 0; i <= d; ++i) {
        face.assign(cell, cell + i);
        face.insert(face.end(), cell + i + 1, cell + stride);
        if (!e.face_is_cell(face)) continue;
        std::vector<int> canon = e.canonicalize(face);
        int row = find_cell(cells.flat[d - 1], d, canon.data());
        if (row < 0) throw std::logic_error("face of a cell not found in the basis");
        bd.add(row, static_cast<int>(ci), (i % 2 == 0) ? 1 : -1);
      }
    }
  }
  return c;
}

BettiTable model_betti(const NerveModel& m, const FieldDescriptor& field) {
  ChainComplex c = orbit_chain_complex(m, field);
  BettiTable t = betti_numbers(c);
  if (m.open_nerve) {
    // reduced homology of an (unpointed, nonempty) nerve: drop the
    // augmentation class in degree 0
    if (c.basis_size.empty() || c.basis_size[0] == 0)
      return t;  // empty complex; reduced homology left to the caller
    auto it = t.betti.find(0);
    if (it == t.betti.end() || it->second < 1)
      throw std::logic_error("connected component count vanished");
    if (--it->second == 0) t.betti.erase(it);
  }
  return t;
}

BettiTable partition_quotient_betti(int n, const std::vector<int>& composition,
                                    const FieldDescriptor& field, bool quotient) {
  auto pl = std::make_shared<PartitionLattice>(partition_lattice(n));
  auto index_perm = [pl](const Permutation& g) { return pl->action_on_indices(g); };
  GroupAction action = quotient ? GroupAction::young(composition) : GroupAction::trivial(n);
  NerveModel m = open_nerve_model(std::shared_ptr<const FiniteLattice>(pl, pl->order.get()),
                                  std::move(action), index_perm,
                                  "Pi" + std::to_string(n));
  return model_betti(m, field);
}

}  // namespace ptc
