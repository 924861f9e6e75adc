#include "ptc/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ptc {

Partition Partition::discrete(int n) {
  Partition p;
  p.n = n;
  p.blocks.reserve(n);
  for (int i = 0; i < n; ++i) p.blocks.push_back({i});
  return p;
}

Partition Partition::indiscrete(int n) {
  Partition p;
  p.n = n;
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  p.blocks.push_back(std::move(all));
  return p;
}

Partition Partition::from_blocks(int n, std::vector<std::vector<int>> blocks) {
  std::vector<char> seen(n, 0);
  for (auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("empty block");
    std::sort(b.begin(), b.end());
    for (int e : b) {
      if (e < 0 || e >= n) throw std::invalid_argument("element out of range");
      if (seen[e]) throw std::invalid_argument("duplicate element in partition");
      seen[e] = 1;
    }
  }
  for (int i = 0; i < n; ++i)
    if (!seen[i]) throw std::invalid_argument("partition does not cover {0..n-1}");
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  Partition p;
  p.n = n;
  p.blocks = std::move(blocks);
  return p;
}

Partition Partition::from_labels(const std::vector<int>& labels) {
  int n = static_cast<int>(labels.size());
  std::vector<std::vector<int>> by_label;
  std::vector<int> remap;  // label value -> position in by_label, built on first sight
  std::vector<int> first_seen_label;
  for (int i = 0; i < n; ++i) {
    int lab = labels[i];
    int slot = -1;
    for (size_t j = 0; j < first_seen_label.size(); ++j)
      if (first_seen_label[j] == lab) { slot = static_cast<int>(j); break; }
    if (slot < 0) {
      slot = static_cast<int>(by_label.size());
      first_seen_label.push_back(lab);
      by_label.emplace_back();
    }
    by_label[slot].push_back(i);
  }
  Partition p;
  p.n = n;
  p.blocks = std::move(by_label);  // already sorted by minimum: minima appear in index order
  return p;
}

std::vector<int> Partition::labels() const {
  std::vector<int> lab(n, -1);
  for (int b = 0; b < num_blocks(); ++b)
    for (int e : blocks[b]) lab[e] = b;
  return lab;
}

bool Partition::refines(const Partition& other) const {
  std::vector<int> lab = other.labels();
  for (const auto& b : blocks) {
    int l = lab[b[0]];
    for (int e : b)
      if (lab[e] != l) return false;
  }
  return true;
}

std::string Partition::str() const {
  std::string out;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += '|';
    for (int e : blocks[i]) {
      if (e + 1 >= 10) out += ' ';
      out += std::to_string(e + 1);
    }
  }
  return out;
}

Partition partition_meet(const Partition& p, const Partition& q) {
  if (p.n != q.n) throw std::invalid_argument("partition_meet: size mismatch");
  std::vector<int> lp = p.labels(), lq = q.labels();
  std::vector<int> key(p.n);
  int nb = q.num_blocks();
  for (int i = 0; i < p.n; ++i) key[i] = lp[i] * nb + lq[i];
  return Partition::from_labels(key);
}

Partition partition_join(const Partition& p, const Partition& q) {
  if (p.n != q.n) throw std::invalid_argument("partition_join: size mismatch");
  std::vector<int> parent(p.n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (const auto& blocks : {p.blocks, q.blocks})
    for (const auto& b : blocks)
      for (size_t i = 1; i < b.size(); ++i) unite(b[0], b[i]);
  std::vector<int> lab(p.n);
  for (int i = 0; i < p.n; ++i) lab[i] = find(i);
  return Partition::from_labels(lab);
}

std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> rgs(n, 0);
  // Restricted growth strings: rgs[0]=0 and rgs[i] <= 1+max(rgs[0..i-1]).
  while (true) {
    out.push_back(Partition::from_labels(rgs));
    int i = n - 1;
    for (; i > 0; --i) {
      int mx = 0;
      for (int j = 0; j < i; ++j) mx = std::max(mx, rgs[j]);
      if (rgs[i] <= mx) { ++rgs[i]; break; }
      rgs[i] = 0;
    }
    if (i == 0) break;
  }
  return out;
}

}  // namespace ptc
