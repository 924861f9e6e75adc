#include "ptc/perm.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ptc {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.image.resize(n);
  std::iota(p.image.begin(), p.image.end(), 0);
  return p;
}

Permutation Permutation::parse(const std::string& text, int n) {
  // Cycle notation if a '(' appears, otherwise a 1-based image list.
  if (text.find('(') != std::string::npos) {
    Permutation p = identity(n);
    size_t pos = 0;
    while (pos < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[pos]))) { ++pos; continue; }
      if (text[pos] != '(') throw std::invalid_argument("bad cycle notation: " + text);
      size_t close = text.find(')', pos);
      if (close == std::string::npos) throw std::invalid_argument("unbalanced cycle: " + text);
      std::istringstream cyc(text.substr(pos + 1, close - pos - 1));
      std::vector<int> pts;
      std::string tok;
      while (cyc >> tok) {
        // allow comma separators too
        for (char& c : tok) if (c == ',') c = ' ';
        std::istringstream sub(tok);
        int v;
        while (sub >> v) pts.push_back(v - 1);
      }
      for (int v : pts)
        if (v < 0 || v >= n) throw std::invalid_argument("cycle point out of range: " + text);
      for (size_t i = 0; i < pts.size(); ++i)
        p.image[pts[i]] = pts[(i + 1) % pts.size()];
      pos = close + 1;
    }
    // validate bijectivity (overlapping cycles could break it)
    std::vector<char> hit(n, 0);
    for (int v : p.image) {
      if (hit[v]) throw std::invalid_argument("overlapping cycles: " + text);
      hit[v] = 1;
    }
    return p;
  }
  std::istringstream in(text);
  Permutation p;
  int v;
  while (in >> v) p.image.push_back(v - 1);
  if (static_cast<int>(p.image.size()) != n)
    throw std::invalid_argument("image list has wrong length: " + text);
  std::vector<char> hit(n, 0);
  for (int x : p.image) {
    if (x < 0 || x >= n || hit[x]) throw std::invalid_argument("not a permutation: " + text);
    hit[x] = 1;
  }
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.image.resize(image.size());
  for (size_t i = 0; i < image.size(); ++i) p.image[image[i]] = static_cast<int>(i);
  return p;
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < image.size(); ++i)
    if (image[i] != static_cast<int>(i)) return false;
  return true;
}

std::string Permutation::cycle_str() const {
  std::string out;
  std::vector<char> done(image.size(), 0);
  for (size_t i = 0; i < image.size(); ++i) {
    if (done[i] || image[i] == static_cast<int>(i)) continue;
    out += '(';
    size_t j = i;
    bool first = true;
    while (!done[j]) {
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      done[j] = 1;
      j = image[j];
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  Permutation c;
  c.image.resize(b.image.size());
  for (size_t i = 0; i < b.image.size(); ++i) c.image[i] = a.image[b.image[i]];
  return c;
}

Partition apply_perm(const Permutation& g, const Partition& p) {
  std::vector<std::vector<int>> blocks = p.blocks;
  for (auto& b : blocks)
    for (int& e : b) e = g(e);
  return Partition::from_blocks(p.n, std::move(blocks));
}

GroupAction GroupAction::trivial(int n) {
  GroupAction a;
  a.degree = n;
  a.label = "trivial";
  return a;
}

GroupAction GroupAction::symmetric(int n) {
  GroupAction a;
  a.degree = n;
  a.label = "S" + std::to_string(n);
  if (n >= 2) {
    Permutation t = Permutation::identity(n);
    std::swap(t.image[0], t.image[1]);
    a.generators.push_back(t);
    if (n >= 3) {
      Permutation c = Permutation::identity(n);
      for (int i = 0; i < n; ++i) c.image[i] = (i + 1) % n;
      a.generators.push_back(c);
    }
  }
  return a;
}

GroupAction GroupAction::young(const std::vector<int>& composition) {
  GroupAction a;
  a.degree = 0;
  std::string lab = "Young(";
  for (size_t i = 0; i < composition.size(); ++i) {
    if (composition[i] < 1) throw std::invalid_argument("composition parts must be >= 1");
    if (i) lab += ",";
    lab += std::to_string(composition[i]);
    a.degree += composition[i];
  }
  a.label = lab + ")";
  int base = 0;
  for (int part : composition) {
    if (part >= 2) {
      Permutation t = Permutation::identity(a.degree);
      std::swap(t.image[base], t.image[base + 1]);
      a.generators.push_back(t);
      if (part >= 3) {
        Permutation c = Permutation::identity(a.degree);
        for (int i = 0; i < part; ++i) c.image[base + i] = base + (i + 1) % part;
        a.generators.push_back(c);
      }
    }
    base += part;
  }
  return a;
}

std::vector<Permutation> GroupAction::elements(size_t bound) const {
  std::set<Permutation> seen;
  std::deque<Permutation> queue;
  Permutation id = Permutation::identity(degree);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Permutation g = queue.front();
    queue.pop_front();
    for (const Permutation& s : generators) {
      Permutation h = s * g;
      if (seen.insert(h).second) {
        if (seen.size() > bound)
          throw std::runtime_error("group order exceeds bound " + std::to_string(bound));
        queue.push_back(h);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<int>> GroupAction::point_orbits() const {
  std::vector<int> parent(degree);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Permutation& g : generators)
    for (int i = 0; i < degree; ++i) parent[find(i)] = find(g(i));
  std::map<int, std::vector<int>> by_root;
  for (int i = 0; i < degree; ++i) by_root[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [root, orbit] : by_root) out.push_back(orbit);
  return out;
}

std::vector<ItemOrbit> orbits(const GroupAction& action, int count,
                              const std::function<int(const Permutation&, int)>& act) {
  std::vector<char> visited(count, 0);
  std::vector<ItemOrbit> out;
  for (int start = 0; start < count; ++start) {
    if (visited[start]) continue;
    ItemOrbit orbit;
    orbit.representative = start;
    // transversal[i] maps `start` to i, for every i reached so far
    std::map<int, Permutation> transversal;
    transversal[start] = Permutation::identity(action.degree);
    std::deque<int> queue{start};
    visited[start] = 1;
    std::set<Permutation> stab;
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      for (const Permutation& g : action.generators) {
        int j = act(g, i);
        if (j < 0 || j >= count)
          throw std::runtime_error("orbit action left the item range");
        auto it = transversal.find(j);
        if (it == transversal.end()) {
          transversal[j] = g * transversal[i];
          visited[j] = 1;
          queue.push_back(j);
        } else {
          // Schreier generator for the stabilizer of `start`
          Permutation s = it->second.inverse() * g * transversal[i];
          if (!s.is_identity()) stab.insert(s);
        }
      }
    }
    for (auto& [i, g] : transversal) orbit.members.push_back(i);
    orbit.stabilizer_generators.assign(stab.begin(), stab.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace ptc
