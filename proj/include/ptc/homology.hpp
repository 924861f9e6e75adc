#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ptc/field.hpp"

namespace ptc {

// Sparse integer matrix in triplet form (duplicates are summed).
struct SparseMatrix {
  int rows = 0, cols = 0;
  std::vector<std::tuple<int, int, long long>> entries;

  void add(int r, int c, long long v) { entries.emplace_back(r, c, v); }
};

// Exact rank over the given field; Markowitz-style pivoting on sparsity,
// arbitrary-precision rationals or machine-word residues.
long long matrix_rank(const SparseMatrix& m, const FieldDescriptor& field);

// A nonnegatively graded chain complex with integer boundary matrices.
// boundary[m] maps degree m to degree m-1 (rows indexed by degree m-1
// basis, cols by degree m basis); boundary[0] is always empty.
struct ChainComplex {
  FieldDescriptor field;
  std::vector<long long> basis_size;       // by degree, 0..top
  std::vector<SparseMatrix> boundary;      // same length as basis_size
  std::vector<std::vector<std::string>> basis_labels;  // optional, may be empty
  std::string fingerprint;

  int top_degree() const { return static_cast<int>(basis_size.size()) - 1; }
};

// Verifies boundary . boundary = 0 with integer arithmetic; returns an
// offending (degree, row, col) description or empty string.
std::string check_boundary_squares_to_zero(const ChainComplex& c);

struct BettiTable {
  FieldDescriptor field;
  std::map<int, long long> betti;  // degree -> rank, zero ranks omitted
  std::string fingerprint;

  bool operator==(const BettiTable& o) const {
    return field == o.field && betti == o.betti;
  }
  std::string str() const;  // {"4":1,"5":9}-style rendering
};

// b_m = dim ker d_m - rank d_{m+1}; requires d.d = 0 (asserted).
BettiTable betti_numbers(const ChainComplex& c);

// Alternating sum of basis sizes (equals the one of the Betti table).
long long euler_characteristic(const ChainComplex& c);
long long euler_characteristic(const BettiTable& t);

}  // namespace ptc
