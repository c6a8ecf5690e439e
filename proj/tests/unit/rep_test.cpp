#include <doctest.h>

#include <memory>

#include "hsc/error.hpp"
#include "hsc/rep.hpp"
#include "hsc/zoo.hpp"

using namespace hsc;

namespace {

std::shared_ptr<const HopfAlgebra> make_hopf(const std::string& name) {
  return std::make_shared<const HopfAlgebra>(zoo(name));
}

YDModule regular_action_trivial_coaction(std::shared_ptr<const HopfAlgebra> H) {
  auto B = bialgebra_of(std::move(H));
  const uint32_t n = static_cast<uint32_t>(B->dim);
  YDModule M;
  M.algebra = B;
  M.dim = n;
  M.action = {Side::Left, B, n, B->mult};
  M.coaction = {Side::Left, B, n, kron(B->unit, LinMap::identity(B->field, n))};
  return M;
}

}  // namespace

TEST_CASE("trivial module is Yetter-Drinfeld over every zoo entry") {
  for (const auto& name : zoo_names()) {
    CAPTURE(name);
    auto B = bialgebra_of(make_hopf(name));
    AxiomReport one = check_yd(trivial_yd(B));
    CHECK(one.all_passed());
    AxiomReport three = check_yd(trivial_yd(B, 3));
    CHECK(three.all_passed());
  }
}

TEST_CASE("adjoint module is Yetter-Drinfeld over every zoo entry") {
  for (const auto& name : zoo_names()) {
    CAPTURE(name);
    AxiomReport rep = check_yd(adjoint_yd(make_hopf(name)));
    for (const auto& e : rep.entries) {
      CAPTURE(e.name);
      CHECK(e.result.passed);
    }
  }
}

TEST_CASE("regular action with trivial coaction is compatible iff cocommutative") {
  for (const auto& name : {"c2_q", "c3_gf7", "s3_q"}) {
    CAPTURE(name);
    CHECK(check_yd(regular_action_trivial_coaction(make_hopf(name))).all_passed());
  }
  for (const auto& name : {"s3_dual_q", "sweedler_q", "taft3_gf7"}) {
    CAPTURE(name);
    AxiomReport rep = check_yd(regular_action_trivial_coaction(make_hopf(name)));
    CHECK(rep.find("module")->result.passed);
    CHECK(rep.find("comodule")->result.passed);
    const CheckResult& yc = rep.find("yd_compat")->result;
    CHECK_FALSE(yc.passed);
    REQUIRE(yc.witness.has_value());
    CHECK(yc.witness->lhs != yc.witness->rhs);
  }
}

TEST_CASE("opposite multiplication is a right action only when commutative") {
  auto check_flipped = [](const std::string& name) {
    auto H = make_hopf(name);
    const uint32_t n = static_cast<uint32_t>(H->b.dim);
    const FieldSpec F = H->b.field;
    auto B = bialgebra_of(H);
    LinMap opp = compose(B->mult, LinMap::flip(F, n, n));
    return check_action({Side::Right, B, n, opp});
  };
  AxiomReport abelian = check_flipped("c3_gf7");
  CHECK(abelian.all_passed());
  AxiomReport nonabelian = check_flipped("s3_q");
  CHECK_FALSE(nonabelian.find("assoc_action")->result.passed);
  CHECK(nonabelian.find("unit_action")->result.passed);
  CHECK(nonabelian.find("assoc_action")->result.witness.has_value());
}

TEST_CASE("right regular structures satisfy the mirrored laws") {
  for (const auto& name : {"sweedler_q", "taft3_gf7"}) {
    CAPTURE(name);
    auto B = bialgebra_of(make_hopf(name));
    const uint32_t n = static_cast<uint32_t>(B->dim);
    CHECK(check_action({Side::Right, B, n, B->mult}).all_passed());
    CHECK(check_coaction({Side::Right, B, n, B->comult}).all_passed());
    CHECK(check_action({Side::Left, B, n, B->mult}).all_passed());
    CHECK(check_coaction({Side::Left, B, n, B->comult}).all_passed());
  }
}

TEST_CASE("shape and base mismatches are rejected") {
  auto Hc2 = make_hopf("c2_q");
  auto Hsw = make_hopf("sweedler_q");
  auto Bc2 = bialgebra_of(Hc2);
  auto Bsw = bialgebra_of(Hsw);

  ActionStructure bad{Side::Left, Bc2, 2, LinMap::identity(Bc2->field, 3)};
  CHECK_THROWS_AS(check_action(bad), Error);

  YDModule M = trivial_yd(Bc2);
  YDModule sideways = M;
  sideways.action.side = Side::Right;
  CHECK_THROWS_AS(check_yd(sideways), Error);

  CHECK_THROWS_AS(yd_tensor(trivial_yd(Bc2), trivial_yd(Bsw)), Error);

  // Entrywise-equal bases built independently are accepted.
  auto Bc2_again = bialgebra_of(make_hopf("c2_q"));
  YDModule T = yd_tensor(trivial_yd(Bc2), adjoint_yd(make_hopf("c2_q")));
  CHECK(T.dim == 2);
  CHECK(check_yd(T).all_passed());
  (void)Bc2_again;
}

TEST_CASE("tensor of Yetter-Drinfeld modules is Yetter-Drinfeld") {
  for (const auto& name : {"sweedler_q", "taft3_gf7"}) {
    CAPTURE(name);
    auto H = make_hopf(name);
    YDModule A = adjoint_yd(H);
    YDModule T = yd_tensor(A, A);
    CHECK(T.dim == A.dim * A.dim);
    CHECK(check_yd(T).all_passed());

    // Tensoring with the one-dimensional trivial module changes nothing.
    YDModule right_unit = yd_tensor(A, trivial_yd(bialgebra_of(H)));
    CHECK(right_unit.action.map == A.action.map);
    CHECK(right_unit.coaction.map == A.coaction.map);
  }
}

TEST_CASE("braiding degenerates to the flip when a factor is trivial") {
  auto H = make_hopf("sweedler_q");
  auto B = bialgebra_of(H);
  YDModule K2 = trivial_yd(B, 2);
  YDModule A = adjoint_yd(H);
  CHECK(yd_braiding(K2, A) == LinMap::flip(B->field, 2, 4));
  CHECK(yd_braiding(A, K2) == LinMap::flip(B->field, 4, 2));
  CHECK(yd_braiding(K2, K2) == LinMap::flip(B->field, 2, 2));
}

TEST_CASE("braiding of the adjoint module is not the flip but braids") {
  for (const auto& name : {"sweedler_q", "taft3_gf7"}) {
    CAPTURE(name);
    auto H = make_hopf(name);
    YDModule A = adjoint_yd(H);
    const uint64_t d = A.dim;
    const FieldSpec F = A.action.map.field();
    LinMap c = yd_braiding(A, A);
    CHECK_FALSE(c == LinMap::flip(F, static_cast<uint32_t>(d), static_cast<uint32_t>(d)));

    auto cp = own(c);
    MapChain L(F, d * d * d), R(F, d * d * d);
    L.then(cp, 1, d).then(cp, d, 1).then(cp, 1, d);
    R.then(cp, d, 1).then(cp, 1, d).then(cp, d, 1);
    CheckResult braid = check_equal(L, R, {});
    CHECK(braid.passed);
    CHECK_FALSE(braid.sampled);
  }
}

TEST_CASE("braiding commutes with the tensor structure maps") {
  // c_{M,M} is an intertwiner M (x) M -> M (x) M for the tensor structure.
  auto H = make_hopf("sweedler_q");
  YDModule A = adjoint_yd(H);
  YDModule T = yd_tensor(A, A);
  CHECK(check_intertwiner(yd_braiding(A, A), T, T).all_passed());
}

TEST_CASE("intertwiner checks separate morphisms from non-morphisms") {
  auto H = make_hopf("sweedler_q");
  auto B = bialgebra_of(H);
  YDModule K = trivial_yd(B);
  YDModule A = adjoint_yd(H);

  CHECK(check_intertwiner(LinMap::identity(B->field, 4), A, A).all_passed());
  CHECK(check_intertwiner(LinMap::zero(B->field, 4, 1), K, A).all_passed());

  // The unit embeds the trivial module into the adjoint one.
  CHECK(check_intertwiner(B->unit, K, A).all_passed());

  // The counit is linear for the adjoint action but not colinear.
  AxiomReport eps = check_intertwiner(B->counit, A, K);
  CHECK(eps.find("linear")->result.passed);
  CHECK_FALSE(eps.find("colinear")->result.passed);
  CHECK(eps.find("colinear")->result.witness.has_value());
}

TEST_CASE("realize defers large domains and stays faithful") {
  auto H = make_hopf("taft3_gf7");
  YDModule A = adjoint_yd(H);
  MapChain c = yd_braiding_chain(A, A);
  LinMap dense = realize(c);
  CHECK_FALSE(dense.is_deferred());

  LinMap lazy = realize(c, 16);
  CHECK(lazy.is_deferred());
  CHECK(lazy.rows() == 81);
  CHECK(lazy.cols() == 81);
  for (uint64_t j : {0ull, 7ull, 80ull}) {
    SparseVec got = lazy.column(j);
    SparseVec want = dense.column(j);
    REQUIRE(got.size() == want.size());
    for (size_t k = 0; k < got.size(); ++k) {
      CHECK(got[k].idx == want[k].idx);
      CHECK(got[k].v == want[k].v);
    }
  }
  CHECK(lazy.get(0, 0) == dense.get(0, 0));

  CHECK_THROWS_AS(compose(lazy, dense), Error);
  CHECK_THROWS_AS(lazy.set(0, 0, Scalar::from_int(lazy.field(), 1)), Error);

  // Checkers accept a deferred map wherever a stored one would do.
  CheckResult same = check_equal(MapChain::of(lazy), MapChain::of(dense), {});
  CHECK(same.passed);
}
