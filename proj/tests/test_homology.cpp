#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ptc/field.hpp"
#include "ptc/homology.hpp"

using namespace ptc;

TEST_CASE("field descriptors") {
  CHECK(FieldDescriptor::parse("q").is_rational());
  CHECK(FieldDescriptor::parse("Q").is_rational());
  CHECK(FieldDescriptor::parse("fp:2") == FieldDescriptor::prime(2));
  CHECK(FieldDescriptor::parse("f3") == FieldDescriptor::prime(3));
  CHECK(FieldDescriptor::prime(7).str() == "F7");
  CHECK(FieldDescriptor::rationals().str() == "Q");
  CHECK_THROWS_AS(FieldDescriptor::prime(4), std::invalid_argument);
  CHECK_THROWS_AS(FieldDescriptor::parse("fp:9"), std::invalid_argument);
  CHECK_THROWS_AS(FieldDescriptor::parse("bogus"), std::invalid_argument);
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK(!is_prime(1));
  CHECK(!is_prime(91));  // 7 * 13
}

TEST_CASE("matrix rank over Q and F_p") {
  SparseMatrix m;
  m.rows = 2;
  m.cols = 2;
  m.add(0, 0, 2);
  m.add(1, 1, 3);
  CHECK(matrix_rank(m, FieldDescriptor::rationals()) == 2);
  CHECK(matrix_rank(m, FieldDescriptor::prime(2)) == 1);  // the 2 dies
  CHECK(matrix_rank(m, FieldDescriptor::prime(3)) == 1);  // the 3 dies
  CHECK(matrix_rank(m, FieldDescriptor::prime(5)) == 2);

  // duplicates are summed: 1 + (-1) = 0
  SparseMatrix z;
  z.rows = 1;
  z.cols = 1;
  z.add(0, 0, 1);
  z.add(0, 0, -1);
  CHECK(matrix_rank(z, FieldDescriptor::rationals()) == 0);

  // a rank-1 matrix with large intermediate values: exact arithmetic only
  SparseMatrix big;
  big.rows = 2;
  big.cols = 2;
  big.add(0, 0, 1000000007LL);
  big.add(0, 1, 2000000014LL);
  big.add(1, 0, 3);
  big.add(1, 1, 6);
  CHECK(matrix_rank(big, FieldDescriptor::rationals()) == 1);

  SparseMatrix empty;
  empty.rows = 0;
  empty.cols = 5;
  CHECK(matrix_rank(empty, FieldDescriptor::rationals()) == 0);
}

namespace {

// the simplicial circle: 3 vertices, 3 edges
ChainComplex circle(const FieldDescriptor& field) {
  ChainComplex c;
  c.field = field;
  c.basis_size = {3, 3};
  c.boundary.resize(2);
  c.boundary[1].rows = 3;
  c.boundary[1].cols = 3;
  // edges 01, 12, 02
  c.boundary[1].add(1, 0, 1);
  c.boundary[1].add(0, 0, -1);
  c.boundary[1].add(2, 1, 1);
  c.boundary[1].add(1, 1, -1);
  c.boundary[1].add(2, 2, 1);
  c.boundary[1].add(0, 2, -1);
  return c;
}

}  // namespace

TEST_CASE("betti numbers of the circle") {
  for (const auto& f : {FieldDescriptor::rationals(), FieldDescriptor::prime(2)}) {
    ChainComplex c = circle(f);
    CHECK(check_boundary_squares_to_zero(c).empty());
    BettiTable t = betti_numbers(c);
    CHECK(t.betti.at(0) == 1);
    CHECK(t.betti.at(1) == 1);
    CHECK(euler_characteristic(c) == 0);
    CHECK(euler_characteristic(t) == euler_characteristic(c));
  }
}

TEST_CASE("boundary square check catches errors") {
  ChainComplex c;
  c.field = FieldDescriptor::rationals();
  c.basis_size = {1, 1, 1};
  c.boundary.resize(3);
  c.boundary[1].rows = 1;
  c.boundary[1].cols = 1;
  c.boundary[1].add(0, 0, 1);
  c.boundary[2].rows = 1;
  c.boundary[2].cols = 1;
  c.boundary[2].add(0, 0, 1);  // d.d = 1 != 0
  CHECK(!check_boundary_squares_to_zero(c).empty());
}

TEST_CASE("betti table rendering and comparison") {
  BettiTable t;
  t.field = FieldDescriptor::prime(2);
  t.betti[4] = 1;
  t.betti[5] = 9;
  CHECK(t.str() == "{\"4\":1,\"5\":9}");
  BettiTable u = t;
  CHECK(t == u);
  u.betti[5] = 8;
  CHECK(!(t == u));
}
