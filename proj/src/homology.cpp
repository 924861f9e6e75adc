#include "ptc/homology.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace ptc {

namespace {

struct RationalOps {
  using Value = mpq_class;
  Value from_int(long long v) const { return mpq_class(static_cast<long>(v)); }
  bool is_zero(const Value& v) const { return sgn(v) == 0; }
  Value quotient(const Value& a, const Value& b) const { return a / b; }
  void submul(Value& x, const Value& f, const Value& v) const { x -= f * v; }
};

struct PrimeOps {
  uint64_t p;
  using Value = uint64_t;
  Value from_int(long long v) const {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return static_cast<uint64_t>(r);
  }
  bool is_zero(Value v) const { return v == 0; }
  Value quotient(Value a, Value b) const { return a * inverse(b) % p; }
  void submul(Value& x, Value f, Value v) const { x = (x + (p - f) * v % p) % p; }
  Value inverse(Value a) const {
    // Fermat; p is prime and a != 0
    Value result = 1, base = a % p;
    uint64_t e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  }
};

// Sparse Gaussian elimination.  Pivot choice: the column with fewest
// surviving entries, then the shortest row meeting it — a cheap Markowitz
// approximation that keeps fill-in tolerable on boundary matrices.
template <class Ops>
long long sparse_rank_impl(const SparseMatrix& m, const Ops& ops) {
  using V = typename Ops::Value;
  std::vector<std::unordered_map<int, V>> row(m.rows);
  for (const auto& [r, c, v] : m.entries) {
    if (r < 0 || r >= m.rows || c < 0 || c >= m.cols)
      throw std::invalid_argument("matrix entry out of range");
    V val = ops.from_int(v);
    auto it = row[r].find(c);
    if (it == row[r].end()) {
      if (!ops.is_zero(val)) row[r].emplace(c, std::move(val));
    } else {
      ops.submul(it->second, ops.from_int(-1), val);  // accumulate duplicates
      if (ops.is_zero(it->second)) row[r].erase(it);
    }
  }
  std::vector<std::unordered_set<int>> col_rows(m.cols);
  for (int r = 0; r < m.rows; ++r)
    for (const auto& [c, v] : row[r]) col_rows[c].insert(r);

  // columns bucketed by live entry count, for cheap min-count lookup
  std::vector<std::unordered_set<int>> bucket(m.rows + 1);
  std::vector<int> col_count(m.cols, 0);
  for (int c = 0; c < m.cols; ++c) {
    col_count[c] = static_cast<int>(col_rows[c].size());
    if (col_count[c] > 0) bucket[col_count[c]].insert(c);
  }
  auto move_col = [&](int c, int delta) {
    if (col_count[c] > 0) bucket[col_count[c]].erase(c);
    col_count[c] += delta;
    if (col_count[c] > 0) bucket[col_count[c]].insert(c);
  };

  long long rank = 0;
  int scan = 1;
  while (true) {
    while (scan <= m.rows && bucket[scan].empty()) ++scan;
    if (scan > m.rows) break;
    // a pivot elimination can also *lower* counts; re-check below scan
    int floor_check = 1;
    for (; floor_check < scan; ++floor_check)
      if (!bucket[floor_check].empty()) break;
    if (floor_check < scan) scan = floor_check;
    int pc = *bucket[scan].begin();
    int pr = -1;
    size_t best = SIZE_MAX;
    for (int r : col_rows[pc])
      if (row[r].size() < best) {
        best = row[r].size();
        pr = r;
      }
    V pivot = row[pr].at(pc);
    // eliminate pc from every other row that meets it
    std::vector<int> victims(col_rows[pc].begin(), col_rows[pc].end());
    for (int r2 : victims) {
      if (r2 == pr) continue;
      V factor = ops.quotient(row[r2].at(pc), pivot);
      for (const auto& [c, v] : row[pr]) {
        auto it = row[r2].find(c);
        if (it == row[r2].end()) {
          V nv = ops.from_int(0);
          ops.submul(nv, factor, v);
          if (!ops.is_zero(nv)) {
            row[r2].emplace(c, std::move(nv));
            col_rows[c].insert(r2);
            move_col(c, +1);
          }
        } else {
          ops.submul(it->second, factor, v);
          if (ops.is_zero(it->second)) {
            row[r2].erase(it);
            col_rows[c].erase(r2);
            move_col(c, -1);
          }
        }
      }
    }
    // retire the pivot row and column
    for (const auto& [c, v] : row[pr]) {
      col_rows[c].erase(pr);
      move_col(c, -1);
    }
    row[pr].clear();
    ++rank;
  }
  return rank;
}

}  // namespace

long long matrix_rank(const SparseMatrix& m, const FieldDescriptor& field) {
  if (m.rows == 0 || m.cols == 0) return 0;
  if (field.is_rational()) return sparse_rank_impl(m, RationalOps{});
  return sparse_rank_impl(m, PrimeOps{static_cast<uint64_t>(field.p)});
}

std::string check_boundary_squares_to_zero(const ChainComplex& c) {
  for (int m = 1; m + 1 <= c.top_degree(); ++m) {
    const SparseMatrix& a = c.boundary[m];      // deg m -> m-1
    const SparseMatrix& b = c.boundary[m + 1];  // deg m+1 -> m
    // a's entries grouped by column (a column is a degree-m basis element)
    std::unordered_map<int, std::vector<std::pair<int, long long>>> a_by_col;
    for (const auto& [r, col, v] : a.entries) a_by_col[col].push_back({r, v});
    std::unordered_map<long long, long long> product;
    for (const auto& [r, col, v] : b.entries) {
      auto it = a_by_col.find(r);
      if (it == a_by_col.end()) continue;
      for (const auto& [r2, v2] : it->second)
        product[static_cast<long long>(r2) * b.cols + col] += v * v2;
    }
    for (const auto& [key, v] : product)
      if (v != 0)
        return "d.d != 0 at degree " + std::to_string(m + 1) + " entry (" +
               std::to_string(key / b.cols) + "," + std::to_string(key % b.cols) +
               ") = " + std::to_string(v);
  }
  return "";
}

BettiTable betti_numbers(const ChainComplex& c) {
  std::string err = check_boundary_squares_to_zero(c);
  if (!err.empty()) throw std::logic_error("betti_numbers: " + err);
  BettiTable out;
  out.field = c.field;
  out.fingerprint = c.fingerprint;
  int top = c.top_degree();
  std::vector<long long> rank(top + 2, 0);
  for (int m = 1; m <= top; ++m) rank[m] = matrix_rank(c.boundary[m], c.field);
  for (int m = 0; m <= top; ++m) {
    long long b = c.basis_size[m] - rank[m] - rank[m + 1];
    if (b < 0) throw std::logic_error("negative Betti number: rank bookkeeping broken");
    if (b > 0) out.betti[m] = b;
  }
  return out;
}

std::string BettiTable::str() const {
  std::string s = "{";
  bool first = true;
  for (const auto& [deg, rank] : betti) {
    if (!first) s += ",";
    s += "\"" + std::to_string(deg) + "\":" + std::to_string(rank);
    first = false;
  }
  return s + "}";
}

long long euler_characteristic(const ChainComplex& c) {
  long long chi = 0;
  for (int m = 0; m <= c.top_degree(); ++m)
    chi += (m % 2 == 0 ? 1 : -1) * c.basis_size[m];
  return chi;
}

long long euler_characteristic(const BettiTable& t) {
  long long chi = 0;
  for (const auto& [deg, rank] : t.betti) chi += (deg % 2 == 0 ? 1 : -1) * rank;
  return chi;
}

}  // namespace ptc
