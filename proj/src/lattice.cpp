#include "ptc/lattice.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace ptc {

FiniteLattice::FiniteLattice(int size, const std::function<bool(int, int)>& leq,
                             BinOp meet_fn, BinOp join_fn)
    : size_(size),
      words_((size + 63) / 64),
      down_(static_cast<size_t>(size) * ((size + 63) / 64), 0),
      up_(static_cast<size_t>(size) * ((size + 63) / 64), 0),
      meet_fn_(std::move(meet_fn)),
      join_fn_(std::move(join_fn)) {
  if (size <= 0) throw std::invalid_argument("empty lattice");
  for (int b = 0; b < size; ++b)
    for (int a = 0; a < size; ++a)
      if (leq(a, b)) {
        down_[static_cast<size_t>(b) * words_ + a / 64] |= uint64_t{1} << (a % 64);
        up_[static_cast<size_t>(a) * words_ + b / 64] |= uint64_t{1} << (b % 64);
      }
  for (int i = 0; i < size; ++i) {
    bool is_bot = true, is_top = true;
    for (int j = 0; j < size && (is_bot || is_top); ++j) {
      if (!this->leq(i, j)) is_bot = false;
      if (!this->leq(j, i)) is_top = false;
    }
    if (is_bot) bottom_ = i;
    if (is_top) top_ = i;
  }
  if (bottom_ < 0 || top_ < 0)
    throw std::invalid_argument("poset has no unique bottom or top");
}

int FiniteLattice::generic_meet(int a, int b) const {
  // glb = the element of the common down-set whose down-set contains the
  // whole common down-set.
  std::vector<uint64_t> common(words_);
  const uint64_t* da = down_row(a);
  const uint64_t* db = down_row(b);
  for (int w = 0; w < words_; ++w) common[w] = da[w] & db[w];
  for (int w = 0; w < words_; ++w) {
    uint64_t bits = common[w];
    while (bits) {
      int m = w * 64 + std::countr_zero(bits);
      bits &= bits - 1;
      const uint64_t* dm = down_row(m);
      bool covers = true;
      for (int v = 0; v < words_ && covers; ++v)
        if ((dm[v] & common[v]) != common[v]) covers = false;
      if (covers) return m;
    }
  }
  throw std::runtime_error("not a lattice: meet missing");
}

int FiniteLattice::meet(int a, int b) const {
  if (a == b) return a;
  if (a > b) std::swap(a, b);
  uint64_t key = (static_cast<uint64_t>(a) << 32) | static_cast<uint32_t>(b);
  auto it = meet_memo_.find(key);
  if (it != meet_memo_.end()) return it->second;
  int m = meet_fn_ ? meet_fn_(a, b) : generic_meet(a, b);
  meet_memo_.emplace(key, m);
  return m;
}

int FiniteLattice::join(int a, int b) const {
  if (a == b) return a;
  if (a > b) std::swap(a, b);
  uint64_t key = (static_cast<uint64_t>(a) << 32) | static_cast<uint32_t>(b);
  auto it = join_memo_.find(key);
  if (it != join_memo_.end()) return it->second;
  int j;
  if (join_fn_) {
    j = join_fn_(a, b);
  } else {
    // lub via the dual of generic_meet, using the up-sets
    std::vector<uint64_t> common(words_);
    for (int w = 0; w < words_; ++w)
      common[w] = up_[static_cast<size_t>(a) * words_ + w] &
                  up_[static_cast<size_t>(b) * words_ + w];
    j = -1;
    for (int w = 0; w < words_ && j < 0; ++w) {
      uint64_t bits = common[w];
      while (bits) {
        int m = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        const uint64_t* um = &up_[static_cast<size_t>(m) * words_];
        bool covers = true;
        for (int v = 0; v < words_ && covers; ++v)
          if ((um[v] & common[v]) != common[v]) covers = false;
        if (covers) { j = m; break; }
      }
    }
    if (j < 0) throw std::runtime_error("not a lattice: join missing");
  }
  join_memo_.emplace(key, j);
  return j;
}

std::vector<int> FiniteLattice::open_interval(int a, int b) const {
  std::vector<int> out;
  for (int z = 0; z < size_; ++z)
    if (z != a && z != b && leq(a, z) && leq(z, b)) out.push_back(z);
  return out;
}

std::vector<int> FiniteLattice::complement_set(int x) const {
  std::vector<int> out;
  for (int y = 0; y < size_; ++y) {
    if (y == bottom_ || y == top_) continue;
    if (meet(x, y) == bottom_ && join(x, y) == top_) out.push_back(y);
  }
  return out;
}

int FiniteLattice::height() const {
  // longest strict chain, by DP over a linear extension
  std::vector<int> order(size_);
  for (int i = 0; i < size_; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int ca = 0, cb = 0;
    for (int w = 0; w < words_; ++w) {
      ca += std::popcount(down_[static_cast<size_t>(a) * words_ + w]);
      cb += std::popcount(down_[static_cast<size_t>(b) * words_ + w]);
    }
    return ca < cb;
  });
  std::vector<int> best(size_, 0);
  int h = 0;
  for (int bi : order) {
    for (int a = 0; a < size_; ++a)
      if (lt(a, bi)) best[bi] = std::max(best[bi], best[a] + 1);
    h = std::max(h, best[bi]);
  }
  return h;
}

std::optional<std::string> FiniteLattice::validate() const {
  for (int a = 0; a < size_; ++a) {
    if (!leq(a, a)) return "not reflexive at " + std::to_string(a);
    for (int b = 0; b < size_; ++b) {
      if (a != b && leq(a, b) && leq(b, a)) return "not antisymmetric";
      for (int c = 0; c < size_; ++c)
        if (leq(a, b) && leq(b, c) && !leq(a, c)) return "not transitive";
    }
  }
  for (int a = 0; a < size_; ++a)
    for (int b = a; b < size_; ++b) {
      int m = meet(a, b), j = join(a, b);
      if (!leq(m, a) || !leq(m, b)) return "meet not a lower bound";
      if (!leq(a, j) || !leq(b, j)) return "join not an upper bound";
      for (int z = 0; z < size_; ++z) {
        if (leq(z, a) && leq(z, b) && !leq(z, m)) return "meet not greatest";
        if (leq(a, z) && leq(b, z) && !leq(j, z)) return "join not least";
      }
    }
  return std::nullopt;
}

IntervalLattice interval(std::shared_ptr<const FiniteLattice> parent, int a, int b) {
  if (!parent->leq(a, b)) throw std::invalid_argument("interval: a is not <= b");
  IntervalLattice iv;
  iv.parent = parent;
  for (int z = 0; z < parent->size(); ++z)
    if (parent->leq(a, z) && parent->leq(z, b)) {
      iv.to_sub[z] = static_cast<int>(iv.to_parent.size());
      iv.to_parent.push_back(z);
    }
  // meet/join lambdas own copies of the maps plus the parent handle, so the
  // interval stays valid however it is moved around
  auto up = std::make_shared<std::vector<int>>(iv.to_parent);
  auto down = std::make_shared<std::unordered_map<int, int>>(iv.to_sub);
  iv.lattice = std::make_shared<FiniteLattice>(
      static_cast<int>(up->size()),
      [&](int x, int y) { return parent->leq((*up)[x], (*up)[y]); },
      [parent, up, down](int x, int y) { return down->at(parent->meet((*up)[x], (*up)[y])); },
      [parent, up, down](int x, int y) { return down->at(parent->join((*up)[x], (*up)[y])); });
  return iv;
}

int PartitionLattice::index_of(const Partition& p) const {
  auto it = index_map.find(p.str());
  if (it == index_map.end()) throw std::invalid_argument("partition not in lattice");
  return it->second;
}

std::vector<int> PartitionLattice::action_on_indices(const Permutation& g) const {
  std::vector<int> img(elements.size());
  for (size_t i = 0; i < elements.size(); ++i)
    img[i] = index_of(apply_perm(g, elements[i]));
  return img;
}

PartitionLattice partition_lattice(int n) {
  PartitionLattice L;
  L.n = n;
  L.elements = all_partitions(n);
  for (size_t i = 0; i < L.elements.size(); ++i)
    L.index_map.emplace(L.elements[i].str(), static_cast<int>(i));
  auto elems = std::make_shared<std::vector<Partition>>(L.elements);
  auto idx = std::make_shared<std::unordered_map<std::string, int>>(L.index_map);
  L.order = std::make_shared<FiniteLattice>(
      static_cast<int>(L.elements.size()),
      [elems](int a, int b) { return (*elems)[a].refines((*elems)[b]); },
      [elems, idx](int a, int b) {
        return idx->at(partition_meet((*elems)[a], (*elems)[b]).str());
      },
      [elems, idx](int a, int b) {
        return idx->at(partition_join((*elems)[a], (*elems)[b]).str());
      });
  return L;
}

namespace {

// span of a set of vectors in F_q^dim, returned sorted (0 included)
std::vector<int> span(int q, int dim, std::vector<int> gens) {
  int total = 1;
  for (int i = 0; i < dim; ++i) total *= q;
  auto add = [&](int a, int b) {
    int out = 0, mul = 1;
    for (int i = 0; i < dim; ++i) {
      out += ((a % q + b % q) % q) * mul;
      a /= q;
      b /= q;
      mul *= q;
    }
    return out;
  };
  std::set<int> members{0};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(members.begin(), members.end());
    for (int v : cur)
      for (int g : gens) {
        int w = add(v, g);
        if (w < 0 || w >= total) throw std::logic_error("span arithmetic");
        if (members.insert(w).second) grew = true;
      }
  }
  return {members.begin(), members.end()};
}

}  // namespace

SubspaceLattice subspace_lattice(int q, int dim) {
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) throw std::invalid_argument("q must be prime");
  if (q < 2 || dim < 1) throw std::invalid_argument("bad subspace lattice parameters");
  SubspaceLattice L;
  L.q = q;
  L.dim = dim;
  int total = 1;
  for (int i = 0; i < dim; ++i) total *= q;
  std::set<std::vector<int>> found;
  found.insert({0});
  // grow: adjoin every outside vector to every known subspace
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> cur(found.begin(), found.end());
    for (const auto& sub : cur)
      for (int v = 1; v < total; ++v) {
        if (std::binary_search(sub.begin(), sub.end(), v)) continue;
        std::vector<int> gens = sub;
        gens.push_back(v);
        if (found.insert(span(q, dim, gens)).second) grew = true;
      }
  }
  L.elements.assign(found.begin(), found.end());
  std::sort(L.elements.begin(), L.elements.end(),
            [](const auto& a, const auto& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  auto elems = std::make_shared<std::vector<std::vector<int>>>(L.elements);
  L.order = std::make_shared<FiniteLattice>(
      static_cast<int>(L.elements.size()),
      [elems](int a, int b) {
        const auto& A = (*elems)[a];
        const auto& B = (*elems)[b];
        return std::includes(B.begin(), B.end(), A.begin(), A.end());
      });
  return L;
}

bool is_strict_chain(const FiniteLattice& L, const Chain& c) {
  for (size_t i = 0; i + 1 < c.size(); ++i)
    if (!L.lt(c[i], c[i + 1])) return false;
  return true;
}

}  // namespace ptc
