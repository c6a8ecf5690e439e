#include <doctest.h>

#include "hsc/error.hpp"
#include "hsc/linmap.hpp"
#include "test_util.hpp"

using namespace hsc;
using hsctest::Dense;
using hsctest::dense_to_map;
using hsctest::map_equals_dense;
using hsctest::schoolbook_mul_mod;

static const FieldSpec Q = FieldSpec::rationals();
static const FieldSpec F7 = FieldSpec::prime(7);

TEST_CASE("compose matches schoolbook multiplication over GF(7)") {
  Dense a = {{3, 5}, {2, 1}};
  Dense b = {{6, 0}, {4, 2}};
  Dense expect = schoolbook_mul_mod(a, b, 7);
  // Frozen: (0,0) is 3*6 + 5*4 = 38 = 3 (mod 7).
  CHECK(expect == Dense{{3, 3}, {2, 2}});
  LinMap prod = compose(dense_to_map(F7, a), dense_to_map(F7, b));
  CHECK(map_equals_dense(prod, expect));
}

TEST_CASE("compose unit laws and associativity") {
  Dense a = {{1, -2, 0}, {0, 3, 5}};
  Dense b = {{2, 0}, {1, 1}, {-4, 7}};
  Dense c = {{1, 1}, {0, -3}};
  LinMap A = dense_to_map(Q, a), B = dense_to_map(Q, b), C = dense_to_map(Q, c);
  CHECK(compose(LinMap::identity(Q, 3), LinMap::identity(Q, 3)) == LinMap::identity(Q, 3));
  CHECK(compose(A, LinMap::identity(Q, 3)) == A);
  CHECK(compose(LinMap::identity(Q, 2), A) == A);
  CHECK(compose(compose(A, B), C) == compose(A, compose(B, C)));
  CHECK_THROWS_AS(compose(A, C), Error);
}

TEST_CASE("kron interchange law") {
  LinMap f = dense_to_map(Q, {{1, 2}, {3, 4}});
  LinMap f2 = dense_to_map(Q, {{0, 1}, {1, 1}});
  LinMap g = dense_to_map(Q, {{2, 0, 1}, {0, 1, -1}});
  LinMap g2 = dense_to_map(Q, {{1}, {2}, {3}});
  CHECK(compose(kron(f, g), kron(f2, g2)) == kron(compose(f, f2), compose(g, g2)));
  CHECK(kron(LinMap::identity(Q, 2), LinMap::identity(Q, 3)) == LinMap::identity(Q, 6));
}

TEST_CASE("kron flattening puts the left factor in the high position") {
  LinMap f = dense_to_map(Q, {{0, 1}, {1, 0}});
  LinMap g = LinMap::identity(Q, 3);
  LinMap k = kron(f, g);
  // e_0 (x) e_2 sits at index 2 and maps to e_1 (x) e_2 at index 5.
  CHECK(k.get(5, 2).is_one());
  CHECK(k.get(2, 5).is_one());
  CHECK(k.nnz() == 6);
}

TEST_CASE("transpose is a contravariant involution") {
  LinMap f = dense_to_map(Q, {{1, 2, 0}, {0, 3, -1}});
  LinMap g = dense_to_map(Q, {{5, 0}, {1, 1}, {2, -2}});
  CHECK(transpose_dual(transpose_dual(f)) == f);
  CHECK(transpose_dual(compose(f, g)) == compose(transpose_dual(g), transpose_dual(f)));
  CHECK(transpose_dual(kron(f, g)) == kron(transpose_dual(f), transpose_dual(g)));
  CHECK(transpose_dual(f).get(0, 0) == Scalar::from_int(Q, 1));
  CHECK(transpose_dual(f).get(2, 1) == Scalar::from_int(Q, -1));
}

TEST_CASE("flip and tensor_perm") {
  LinMap s = LinMap::flip(Q, 2, 3);
  // e_0 (x) e_1 at index 1 goes to e_1 (x) e_0 at index 1*2 + 0 = 2.
  CHECK(s.get(2, 1).is_one());
  CHECK(compose(LinMap::flip(Q, 3, 2), s) == LinMap::identity(Q, 6));
  LinMap rot = LinMap::tensor_perm(Q, {2, 3, 4}, {2, 0, 1});
  LinMap rot2 = LinMap::tensor_perm(Q, {4, 2, 3}, {1, 2, 0});
  CHECK(compose(rot2, rot) == LinMap::identity(Q, 24));
  // Index (i,j,k) = (1,2,3): input 1*12 + 2*4 + 3 = 23 -> (k,i,j) = 3*6+1*3+2 = 23;
  // use (0,1,2): input 6 -> (2,0,1) = 2*6 + 0 + 1 = 13.
  CHECK(rot.get(13, 6).is_one());
  CHECK_THROWS_AS(LinMap::tensor_perm(Q, {2, 2}, {0, 0}), Error);
}

TEST_CASE("solve_linear finds exact solutions and detects inconsistency") {
  LinMap A = dense_to_map(Q, {{2, 1}, {1, 3}});
  LinMap B = dense_to_map(Q, {{1, 0}, {0, 1}});
  auto X = solve_linear(A, B);
  REQUIRE(X.has_value());
  CHECK(compose(A, *X) == B);
  CHECK(X->get(0, 0) == Scalar::from_fraction(Q, 3, 5));

  // Singular but consistent: free variable pinned to zero.
  LinMap S = dense_to_map(Q, {{1, 1}, {2, 2}});
  LinMap rhs = dense_to_map(Q, {{3}, {6}});
  auto Y = solve_linear(S, rhs);
  REQUIRE(Y.has_value());
  CHECK(compose(S, *Y) == rhs);
  CHECK(Y->get(1, 0).is_zero());

  // Inconsistent.
  LinMap bad = dense_to_map(Q, {{3}, {7}});
  CHECK_FALSE(solve_linear(S, bad).has_value());

  // Rectangular, over GF(7).
  LinMap R = dense_to_map(F7, {{1, 2, 3}, {0, 1, 4}});
  LinMap rb = dense_to_map(F7, {{5}, {6}});
  auto Z = solve_linear(R, rb);
  REQUIRE(Z.has_value());
  CHECK(compose(R, *Z) == rb);
}

TEST_CASE("invert") {
  LinMap A = dense_to_map(Q, {{1, 2}, {3, 5}});
  auto Ai = invert(A);
  REQUIRE(Ai.has_value());
  CHECK(compose(A, *Ai) == LinMap::identity(Q, 2));
  CHECK(compose(*Ai, A) == LinMap::identity(Q, 2));
  CHECK_FALSE(invert(dense_to_map(Q, {{1, 1}, {2, 2}})).has_value());
  CHECK_FALSE(invert(dense_to_map(Q, {{1, 0, 0}, {0, 1, 0}})).has_value());
}

TEST_CASE("apply and apply_sandwich") {
  LinMap f = dense_to_map(Q, {{1, 2}, {0, 1}});
  SparseVec v = {{0, Scalar::from_int(Q, 1)}, {1, Scalar::from_int(Q, 10)}};
  SparseVec fv = f.apply(v);
  REQUIRE(fv.size() == 2);
  CHECK(fv[0].idx == 0);
  CHECK(fv[0].v == Scalar::from_int(Q, 21));
  CHECK(fv[1].v == Scalar::from_int(Q, 10));

  // id_3 (x) f (x) id_2 agrees with the materialized Kronecker product.
  LinMap big = kron(kron(LinMap::identity(Q, 3), f), LinMap::identity(Q, 2));
  for (uint32_t j = 0; j < big.cols(); ++j) {
    SparseVec got = apply_sandwich(f, 3, 2, basis_vec(j));
    SparseVec want = big.apply(basis_vec(j));
    REQUIRE(got.size() == want.size());
    for (size_t t = 0; t < got.size(); ++t) {
      CHECK(got[t].idx == want[t].idx);
      CHECK(got[t].v == want[t].v);
    }
  }
}

TEST_CASE("first_difference reports the row-major least mismatch") {
  LinMap a = dense_to_map(Q, {{1, 2}, {3, 4}});
  CHECK_FALSE(first_difference(a, a).has_value());
  LinMap b = dense_to_map(Q, {{1, 2}, {0, 9}});
  auto d = first_difference(a, b);
  REQUIRE(d.has_value());
  CHECK(d->row == 1);
  CHECK(d->col == 0);
  CHECK(d->lhs == Scalar::from_int(Q, 3));
  CHECK(d->rhs == Scalar::zero());

  // Differences at (1,1) and (0,1): the row-major least is (0,1).
  LinMap c = dense_to_map(Q, {{1, 7}, {3, 9}});
  auto e = first_difference(a, c);
  REQUIRE(e.has_value());
  CHECK(e->row == 0);
  CHECK(e->col == 1);
}

TEST_CASE("sparse storage drops explicit zeros") {
  LinMap m(Q, 2, 2);
  m.set(0, 0, Scalar::from_int(Q, 5));
  m.add_to(0, 0, Scalar::from_int(Q, -5));
  CHECK(m.nnz() == 0);
  CHECK(m == LinMap::zero(Q, 2, 2));
  m.set(1, 1, Scalar::from_int(Q, 2));
  m.set(1, 1, Scalar::zero());
  CHECK(m.nnz() == 0);
  CHECK_THROWS_AS(m.set(2, 0, Scalar::one()), Error);
}
