#include <doctest.h>

#include "hsc/bialgebra.hpp"
#include "hsc/error.hpp"
#include "hsc/zoo.hpp"
#include "test_util.hpp"

using namespace hsc;
using hsctest::dense_to_map;

namespace {

Scalar sc(const FieldSpec& F, int64_t v) { return Scalar::from_int(F, v); }

}  // namespace

TEST_CASE("every registry algebra is a Hopf algebra with the stored antipode") {
  for (const auto& name : zoo_names()) {
    CAPTURE(name);
    HopfAlgebra H = zoo(name);
    require_valid_shape(H.b);
    AxiomReport rep = check_hopf(H);
    for (const auto& e : rep.entries) {
      CAPTURE(e.name);
      CHECK(e.result.passed);
    }
    REQUIRE(rep.find("antipode_l") != nullptr);
    REQUIRE(rep.find("antipode_inv_l") != nullptr);
    CHECK(H.antipode_inv.has_value());

    auto solved = compute_antipode(H.b);
    REQUIRE(solved.has_value());
    CHECK(*solved == H.antipode);
  }
}

TEST_CASE("group algebra antipode inverts group elements") {
  HopfAlgebra C2 = zoo("c2_q");
  CHECK(C2.antipode == LinMap::identity(C2.b.field, 2));

  HopfAlgebra C3 = zoo("c3_gf7");
  const FieldSpec F = C3.b.field;
  CHECK(C3.antipode.get(0, 0) == sc(F, 1));
  CHECK(C3.antipode.get(2, 1) == sc(F, 1));  // S(g) = g^2
  CHECK(C3.antipode.get(1, 2) == sc(F, 1));

  HopfAlgebra S3 = zoo("s3_q");
  // Transpositions are involutions; the two 3-cycles swap.
  for (uint32_t i : {0u, 1u, 2u, 5u}) CHECK(S3.antipode.get(i, i) == sc(S3.b.field, 1));
  CHECK(S3.antipode.get(4, 3) == sc(S3.b.field, 1));
  CHECK(S3.antipode.get(3, 4) == sc(S3.b.field, 1));
}

TEST_CASE("symmetric group table composes transpositions correctly") {
  HopfAlgebra S3 = zoo("s3_q");
  const FieldSpec F = S3.b.field;
  const uint32_t n = 6;
  // a*b = ab (index 3), b*a = ba (index 4), a*a = e.
  CHECK(S3.b.mult.get(3, 1 * n + 2) == sc(F, 1));
  CHECK(S3.b.mult.get(4, 2 * n + 1) == sc(F, 1));
  CHECK(S3.b.mult.get(0, 1 * n + 1) == sc(F, 1));
  // ab has order 3: (ab)*(ab) = ba.
  CHECK(S3.b.mult.get(4, 3 * n + 3) == sc(F, 1));
  CHECK(commutativity_flags(S3.b).commutative == false);
  CHECK(commutativity_flags(S3.b).cocommutative == true);
}

TEST_CASE("sweedler antipode acts as expected on the monomial basis") {
  HopfAlgebra H = zoo("sweedler_q");
  const FieldSpec F = H.b.field;
  // Basis order {1, g, x, gx}.
  CHECK(H.b.labels == std::vector<std::string>{"1", "g", "x", "gx"});
  CHECK(H.antipode.get(0, 0) == sc(F, 1));
  CHECK(H.antipode.get(1, 1) == sc(F, 1));
  CHECK(H.antipode.get(3, 2) == sc(F, -1));  // S(x) = -gx
  CHECK(H.antipode.get(2, 3) == sc(F, 1));   // S(gx) = x

  LinMap S2 = compose(H.antipode, H.antipode);
  CHECK(S2 != LinMap::identity(F, 4));
  CHECK(compose(S2, S2) == LinMap::identity(F, 4));

  REQUIRE(H.antipode_inv.has_value());
  CHECK(H.antipode_inv->get(3, 2) == sc(F, 1));  // S^{-1}(x) = gx

  // Delta(gx) = Delta(g)Delta(x) = gx (x) g + 1 (x) gx.
  CHECK(H.b.comult.get(3 * 4 + 1, 3) == sc(F, 1));
  CHECK(H.b.comult.get(0 * 4 + 3, 3) == sc(F, 1));
  CHECK(H.b.mult.get(3, 1 * 4 + 2) == sc(F, 1));   // g*x = gx
  CHECK(H.b.mult.get(3, 2 * 4 + 1) == sc(F, -1));  // x*g = -gx
  auto fl = commutativity_flags(H.b);
  CHECK(fl.commutative == false);
  CHECK(fl.cocommutative == false);
}

TEST_CASE("taft algebra over GF(7) with omega = 2") {
  HopfAlgebra H = zoo("taft3_gf7");
  const FieldSpec F = H.b.field;
  REQUIRE(H.b.dim == 9);
  CHECK(H.b.labels[0] == "1");
  CHECK(H.b.labels[1] == "x");
  CHECK(H.b.labels[4] == "gx");
  CHECK(H.b.labels[8] == "g2x2");
  // x * g = omega * gx: basis index of x is 1, g is 3, gx is 4.
  CHECK(H.b.mult.get(4, 1 * 9 + 3) == sc(F, 2));
  // x * x2 = 0.
  for (uint32_t r = 0; r < 9; ++r) CHECK(H.b.mult.get(r, 1 * 9 + 2).is_zero());
  // Delta(x) = x (x) 1 + g (x) x.
  CHECK(H.b.comult.get(1 * 9 + 0, 1) == sc(F, 1));
  CHECK(H.b.comult.get(3 * 9 + 1, 1) == sc(F, 1));
  // S has order 2n = 6 here, not 2.
  LinMap P = H.antipode;
  uint32_t ord = 1;
  while (P != LinMap::identity(F, 9)) {
    P = compose(H.antipode, P);
    ++ord;
    REQUIRE(ord <= 8);
  }
  CHECK(ord == 6);
}

TEST_CASE("rejects presentations that do not close") {
  // Not associative: 2-element table with t*t = t but identity row broken.
  std::vector<std::vector<uint32_t>> bad = {{0, 1}, {1, 1}};
  CHECK_THROWS_AS(group_algebra(FieldSpec::rationals(), "bad", {"e", "t"}, bad),
                  Error);
  // No identity at index 0.
  std::vector<std::vector<uint32_t>> noid = {{1, 0}, {0, 1}};
  CHECK_THROWS_AS(group_algebra(FieldSpec::rationals(), "noid", {"e", "t"}, noid),
                  Error);
  CHECK_THROWS_AS(sweedler_hopf(FieldSpec::prime(2)), Error);
  // Order of 3 mod 7 is 6, not 3.
  CHECK_THROWS_AS(taft_hopf(3, FieldSpec::prime(7), 3), Error);
  // 4 does not divide 7 - 1.
  CHECK_THROWS_AS(taft_hopf(4, FieldSpec::prime(7), 2), Error);
  CHECK_THROWS_AS(taft_hopf(3, FieldSpec::rationals(), 2), Error);
}

TEST_CASE("bialgebra checks localize a planted associativity defect") {
  HopfAlgebra H = zoo("sweedler_q");
  Bialgebra B = H.b;
  // g*g picks up a spurious x term.
  B.mult.set(2, 1 * 4 + 1, sc(B.field, 1));
  AxiomReport rep = check_bialgebra(B);
  CHECK(!rep.all_passed());
  const AxiomEntry* assoc = rep.find("assoc");
  REQUIRE(assoc != nullptr);
  CHECK(!assoc->result.passed);
  REQUIRE(assoc->result.witness.has_value());
  CHECK(assoc->result.witness->lhs != assoc->result.witness->rhs);
  const AxiomEntry* unit_l = rep.find("unit_l");
  REQUIRE(unit_l != nullptr);
  CHECK(unit_l->result.passed);
}

TEST_CASE("compute_antipode reports absence rather than inventing one") {
  Bialgebra idem = nonhopf_idempotent(FieldSpec::rationals());
  CHECK(check_bialgebra(idem).all_passed());
  CHECK(!compute_antipode(idem).has_value());
  CHECK(!try_hopf(idem).has_value());

  Bialgebra nil = nonhopf_nilpotent(FieldSpec::rationals());
  AxiomReport rep = check_bialgebra(nil);
  const AxiomEntry* em = rep.find("eps_mult");
  REQUIRE(em != nullptr);
  CHECK(!em->result.passed);
  CHECK(!compute_antipode(nil).has_value());
}

TEST_CASE("dual of the order-2 group algebra is the function algebra") {
  HopfAlgebra C2 = zoo("c2_q");
  HopfAlgebra D = dual_hopf(C2);
  const FieldSpec F = D.b.field;
  CHECK(D.b.name == "c2_q.dual");
  CHECK(D.b.labels == std::vector<std::string>{"d_e", "d_g"});
  CHECK(check_hopf(D).all_passed());
  // Pointwise products of indicator functions.
  CHECK(D.b.mult.get(1, 1 * 2 + 1) == sc(F, 1));  // d_g * d_g = d_g
  for (uint32_t r = 0; r < 2; ++r) CHECK(D.b.mult.get(r, 0 * 2 + 1).is_zero());
  // Counit evaluates at the group identity.
  CHECK(D.b.counit.get(0, 0) == sc(F, 1));
  CHECK(D.b.counit.get(0, 1).is_zero());
  // Comultiplication of d_g sums over factorizations of g.
  CHECK(D.b.comult.get(0 * 2 + 1, 1) == sc(F, 1));
  CHECK(D.b.comult.get(1 * 2 + 0, 1) == sc(F, 1));
  CHECK(D.b.comult.get(1 * 2 + 1, 1).is_zero());
}

TEST_CASE("dualizing swaps the commutativity flags") {
  HopfAlgebra S3 = zoo("s3_q");
  HopfAlgebra SD = zoo("s3_dual_q");
  CHECK(SD.b.name == "s3_dual_q");
  auto f = commutativity_flags(S3.b);
  auto fd = commutativity_flags(SD.b);
  CHECK(f.commutative == fd.cocommutative);
  CHECK(f.cocommutative == fd.commutative);
  CHECK(fd.commutative == true);
  CHECK(fd.cocommutative == false);
}

TEST_CASE("double dual returns the original structure maps") {
  for (const auto& name : {"s3_q", "sweedler_q", "taft3_gf7"}) {
    CAPTURE(name);
    HopfAlgebra H = zoo(name);
    HopfAlgebra DD = dual_hopf(dual_hopf(H));
    CHECK(DD.b.mult == H.b.mult);
    CHECK(DD.b.unit == H.b.unit);
    CHECK(DD.b.comult == H.b.comult);
    CHECK(DD.b.counit == H.b.counit);
    CHECK(DD.antipode == H.antipode);
  }
}

TEST_CASE("tensor with the one-dimensional bialgebra changes nothing") {
  Bialgebra U = unit_bialgebra(FieldSpec::rationals());
  CHECK(check_bialgebra(U).all_passed());
  Bialgebra B = zoo("sweedler_q").b;
  for (const Bialgebra& T : {tensor_bialgebra(B, U), tensor_bialgebra(U, B)}) {
    CHECK(T.dim == B.dim);
    CHECK(T.mult == B.mult);
    CHECK(T.unit == B.unit);
    CHECK(T.comult == B.comult);
    CHECK(T.counit == B.counit);
  }
}

TEST_CASE("tensor product of Hopf algebras is Hopf with factorwise antipode") {
  HopfAlgebra A = zoo("c2_q");
  HopfAlgebra S3 = zoo("s3_q");
  HopfAlgebra T = tensor_hopf(A, S3);
  CHECK(T.b.name == "c2_qxs3_q");
  CHECK(T.b.dim == 12);
  CHECK(T.b.labels[1] == "e.a");
  CHECK(T.b.labels[6] == "g.e");
  CHECK(check_hopf(T).all_passed());
  CHECK(T.antipode == kron(A.antipode, S3.antipode));
}

TEST_CASE("tensor square carries its factor and the transposed antipode") {
  auto H = std::make_shared<const HopfAlgebra>(zoo("c2_q"));
  HopfAlgebra env = tensor_square(H);
  CHECK(env.b.name == "c2_q.env");
  CHECK(env.b.dim == 4);
  REQUIRE(env.b.tensor_square != nullptr);
  CHECK(env.b.tensor_square->factor.get() == H.get());
  CHECK(check_hopf(env).all_passed());
  CHECK(env.antipode == kron(H->antipode, transpose_dual(H->antipode)));

  auto SW = std::make_shared<const HopfAlgebra>(zoo("sweedler_q"));
  HopfAlgebra senv = tensor_square(SW);
  CHECK(senv.b.dim == 16);
  CHECK(check_hopf(senv).all_passed());
}

TEST_CASE("commutativity flags across the registry") {
  auto flags = [](const char* n) { return commutativity_flags(zoo(n).b); };
  CHECK(flags("c2_q").commutative);
  CHECK(flags("c2_q").cocommutative);
  CHECK(flags("c3_gf7").commutative);
  CHECK(flags("c3_gf7").cocommutative);
  CHECK(!flags("taft3_gf7").commutative);
  CHECK(!flags("taft3_gf7").cocommutative);
}

TEST_CASE("cyclic group algebra mult agrees with modular addition table") {
  HopfAlgebra C3 = zoo("c3_gf7");
  const FieldSpec F = C3.b.field;
  for (uint32_t i = 0; i < 3; ++i)
    for (uint32_t j = 0; j < 3; ++j)
      for (uint32_t r = 0; r < 3; ++r)
        CHECK(C3.b.mult.get(r, i * 3 + j) ==
              (r == (i + j) % 3 ? sc(F, 1) : Scalar::zero()));
}
