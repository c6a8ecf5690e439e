#include <doctest.h>

#include "hsc/chain.hpp"
#include "hsc/error.hpp"
#include "test_util.hpp"

using namespace hsc;
using hsctest::dense_to_map;

static const FieldSpec Q = FieldSpec::rationals();

TEST_CASE("chain application matches materialized composition") {
  LinMap f = dense_to_map(Q, {{1, 2}, {0, 1}});
  LinMap g = dense_to_map(Q, {{1, 0}, {-1, 3}});
  MapChain c(Q, 2);
  c.then(f).then(g);
  CHECK(c.dom() == 2);
  CHECK(c.cod() == 2);
  CHECK(c.materialize() == compose(g, f));

  MapChain viaOf = MapChain::of(f);
  viaOf.then(g);
  CHECK(viaOf.materialize() == compose(g, f));
}

TEST_CASE("sandwich stages compose like Kronecker factors") {
  LinMap f = dense_to_map(Q, {{2, 1}, {1, 1}});
  LinMap g = dense_to_map(Q, {{0, 1}, {1, 0}});
  // id_2 (x) f, then g (x) id_2.
  MapChain c(Q, 4);
  c.then(own(LinMap(f)), 2, 1);
  c.then(own(LinMap(g)), 1, 2);
  LinMap expect = compose(kron(g, LinMap::identity(Q, 2)), kron(LinMap::identity(Q, 2), f));
  CHECK(c.materialize() == expect);
  CHECK_THROWS_AS(c.then(own(LinMap::identity(Q, 3))), Error);
}

TEST_CASE("tensor_chain equals kron") {
  LinMap f = dense_to_map(Q, {{1, 2, 3}, {0, 1, 0}});
  LinMap g = dense_to_map(Q, {{1, 1}, {2, -1}});
  MapChain A = MapChain::of(f), B = MapChain::of(g);
  CHECK(tensor_chain(A, B).materialize() == kron(f, g));
  CHECK(tensor_chain(B, A).materialize() == kron(g, f));
}

TEST_CASE("then_outer lifts a whole chain") {
  LinMap f = dense_to_map(Q, {{1, 1}, {0, 2}});
  LinMap g = dense_to_map(Q, {{3, 0}, {0, 1}});
  MapChain inner = MapChain::of(f);
  inner.then(g);
  MapChain outer(Q, 8);
  outer.then_outer(inner, 2, 2);
  LinMap expect = kron(kron(LinMap::identity(Q, 2), compose(g, f)), LinMap::identity(Q, 2));
  CHECK(outer.materialize() == expect);
}

TEST_CASE("check_equal scans small domains fully with row-major witness") {
  LinMap a = dense_to_map(Q, {{1, 2}, {3, 4}});
  LinMap b = dense_to_map(Q, {{1, 2}, {5, 4}});
  CheckOptions opt;
  CheckResult eq = check_equal(MapChain::of(a), MapChain::of(a), opt);
  CHECK(eq.passed);
  CHECK_FALSE(eq.sampled);
  CHECK(eq.columns_checked == 2);

  CheckResult ne = check_equal(MapChain::of(a), MapChain::of(b), opt);
  CHECK_FALSE(ne.passed);
  REQUIRE(ne.witness.has_value());
  CHECK(ne.witness->row == 1);
  CHECK(ne.witness->col == 0);
  CHECK(ne.witness->lhs == "3");
  CHECK(ne.witness->rhs == "5");

  CHECK_THROWS_AS(check_equal(MapChain::of(a), MapChain(Q, 3), opt), Error);
}

TEST_CASE("check_equal samples huge domains deterministically") {
  // Two identity chains over a virtual 2^20-dimensional space, one written
  // as flip then flip back. Sampling must engage (domain > full_limit).
  uint32_t n = 1024;
  LinMap sw = LinMap::flip(Q, n, n);
  MapChain L(Q, uint64_t(n) * n);
  L.then(own(LinMap(sw))).then(own(LinMap(sw)));
  MapChain R(Q, uint64_t(n) * n);
  CheckOptions opt;
  opt.samples = 64;
  CheckResult res = check_equal(L, R, opt);
  CHECK(res.passed);
  CHECK(res.sampled);
  CHECK(res.columns_checked == 64);

  // A defect on every column fails on the first draw, and reruns with the
  // same seed reproduce the same witness.
  LinMap twice(Q, n, n);
  for (uint32_t j = 0; j < n; ++j) twice.set(j, j, Scalar::from_int(Q, 2));
  MapChain Lbad(Q, uint64_t(n) * n);
  Lbad.then(own(std::move(twice)), 1, n);
  CheckResult r2 = check_equal(Lbad, MapChain(Q, uint64_t(n) * n), opt);
  CHECK_FALSE(r2.passed);
  CHECK(r2.sampled);
  CHECK(r2.columns_checked == 1);
  REQUIRE(r2.witness.has_value());
  CHECK(r2.witness->lhs == "2");
  CHECK(r2.witness->rhs == "1");
  CheckResult r3 = check_equal(Lbad, MapChain(Q, uint64_t(n) * n), opt);
  CHECK(r3.witness->col == r2.witness->col);
}
