#include <doctest.h>

#include <memory>
#include <string>

#include "hsc/error.hpp"
#include "hsc/hscfmt.hpp"
#include "hsc/lr.hpp"
#include "hsc/zoo.hpp"

using namespace hsc;

namespace {

std::shared_ptr<const HopfAlgebra> make_hopf(const std::string& name) {
  return std::make_shared<const HopfAlgebra>(zoo(name));
}

void check_all(const AxiomReport& rep) {
  for (const auto& e : rep.entries) {
    CAPTURE(rep.subject);
    CAPTURE(e.name);
    CHECK(e.result.passed);
  }
}

template <class Fn>
void expect_error(Fn&& fn, Errc code, const std::string& substr) {
  try {
    fn();
    FAIL_CHECK("expected " << errc_name(code) << " containing '" << substr << "'");
  } catch (const Error& e) {
    const std::string msg = e.what();
    CAPTURE(msg);
    CHECK(errc_name(e.code()) == errc_name(code));
    CHECK(msg.find(substr) != std::string::npos);
  }
}

const char* kMinimal =
    "hsc 1 algebra\n"
    "field Q\n"
    "dim 1\n"
    "MULT\n"
    "0 0 0 1\n"
    "UNIT\n"
    "0 1\n"
    "COMULT\n"
    "0 0 0 1\n"
    "COUNIT\n"
    "0 1\n";

}  // namespace

TEST_CASE("a minimal one-dimensional document parses and checks") {
  HscDocument doc = parse_hsc(kMinimal);
  CHECK(doc.kind == HscKind::Algebra);
  CHECK(doc.dim == 1);
  CHECK(doc.field == FieldSpec::rationals());
  Bialgebra B = doc_to_bialgebra(doc);
  check_all(check_bialgebra(B, {}));
  CHECK(emit_hsc(doc) == kMinimal);
}

TEST_CASE("the cyclic group of order two emits a known file") {
  std::string text = emit_hsc(doc_from_hopf(zoo("c2_q")));
  CHECK(text ==
        "hsc 1 algebra\n"
        "# name: c2_q\n"
        "field Q\n"
        "dim 2\n"
        "labels e g\n"
        "MULT\n"
        "0 0 0 1\n"
        "0 1 1 1\n"
        "1 0 1 1\n"
        "1 1 0 1\n"
        "UNIT\n"
        "0 1\n"
        "COMULT\n"
        "0 0 0 1\n"
        "1 1 1 1\n"
        "COUNIT\n"
        "0 1\n"
        "1 1\n"
        "ANTIPODE\n"
        "0 0 1\n"
        "1 1 1\n");
}

TEST_CASE("an emitted algebra parses back entrywise equal") {
  HopfAlgebra H = zoo("sweedler_q");
  std::string text = emit_hsc(doc_from_hopf(H));
  HscDocument doc = parse_hsc(text);
  CHECK(emit_hsc(doc) == text);
  HopfAlgebra H2 = doc_to_hopf(doc);
  CHECK(H2.b.name == H.b.name);
  CHECK(H2.b.dim == H.b.dim);
  CHECK(H2.b.field == H.b.field);
  CHECK(H2.b.labels == H.b.labels);
  CHECK(H2.b.mult == H.b.mult);
  CHECK(H2.b.unit == H.b.unit);
  CHECK(H2.b.comult == H.b.comult);
  CHECK(H2.b.counit == H.b.counit);
  CHECK(H2.antipode == H.antipode);
  REQUIRE(H2.antipode_inv.has_value());
  CHECK(*H2.antipode_inv == H.antipode_inverse());
}

TEST_CASE("emit then parse is byte-exact across the zoo") {
  for (const auto& name : zoo_names()) {
    CAPTURE(name);
    std::string text = emit_hsc(doc_from_hopf(zoo(name)));
    CHECK(emit_hsc(parse_hsc(text)) == text);
  }
}

TEST_CASE("lr module files round-trip through text") {
  auto H = make_hopf("sweedler_q");
  LRBimodule M = standard_lr(H, "left_adjoint");
  std::string ref = algebra_digest(*H);
  REQUIRE(ref.size() == 16);
  HscDocument doc = doc_from_lr(M, ref, "sweedler_q.left_adjoint");
  std::string text = emit_hsc(doc);
  HscDocument doc2 = parse_hsc(text);
  CHECK(emit_hsc(doc2) == text);
  CHECK(doc2.name == "sweedler_q.left_adjoint");
  CHECK(doc2.algebra_ref == ref);
  LRBimodule M2 = doc_to_lr(doc2, H);
  CHECK(M2.lact.map == M.lact.map);
  CHECK(M2.ract.map == M.ract.map);
  CHECK(M2.lcoact.map == M.lcoact.map);
  CHECK(M2.rcoact.map == M.rcoact.map);
  check_all(check_lr(M2, {}));
}

TEST_CASE("yd module files round-trip through text") {
  auto H = make_hopf("taft3_gf7");
  YDModule M = adjoint_yd(H);
  std::string text = emit_hsc(doc_from_yd(M, algebra_digest(*H)));
  CHECK(emit_hsc(parse_hsc(text)) == text);
  YDModule M2 = doc_to_yd(parse_hsc(text), bialgebra_of(H));
  CHECK(M2.action.map == M.action.map);
  CHECK(M2.coaction.map == M.coaction.map);
  CHECK(M2.action.side == Side::Left);
  check_all(check_yd(M2, {}));
}

TEST_CASE("an explicit ANTIPODE section is taken as given") {
  std::string text = emit_hsc(doc_from_hopf(zoo("c2_q")));
  HopfAlgebra H = doc_to_hopf(parse_hsc(text));
  CHECK(H.antipode == LinMap::identity(FieldSpec::rationals(), 2));
  REQUIRE(H.antipode_inv.has_value());
}

TEST_CASE("a Hopf document without ANTIPODE gets a computed antipode") {
  HscDocument doc = doc_from_bialgebra(zoo("c3_gf7").b);
  HopfAlgebra H = doc_to_hopf(doc);
  CHECK(H.antipode == zoo("c3_gf7").antipode);
}

TEST_CASE("a non-Hopf bialgebra cannot become a Hopf document") {
  HscDocument doc = doc_from_bialgebra(nonhopf_idempotent(FieldSpec::rationals()));
  expect_error([&] { doc_to_hopf(doc); }, Errc::SingularAntipode, "ANTIPODE");
}

TEST_CASE("an out-of-range index names its line") {
  expect_error(
      [] {
        parse_hsc(
            "hsc 1 algebra\n"
            "field Q\n"
            "dim 2\n"
            "MULT\n"
            "0 0 2 1\n");
      },
      Errc::RangeError, "line 5");
}

TEST_CASE("malformed documents fail with precise diagnostics") {
  expect_error([] { parse_hsc(""); }, Errc::ParseError, "line 1");
  expect_error([] { parse_hsc("hsc 2 algebra\n"); }, Errc::ParseError, "version");
  expect_error([] { parse_hsc("hsc 1 slotmachine\n"); }, Errc::ParseError,
               "algebra");
  expect_error([] { parse_hsc("# comment first\nhsc 1 algebra\n"); },
               Errc::ParseError, "line 1");
  expect_error([] { parse_hsc("hsc 1 algebra\nfield Q\n"); }, Errc::ParseError,
               "truncated");
  expect_error([] { parse_hsc("hsc 1 algebra\nfield GF 6\ndim 1\n"); },
               Errc::FieldError, "line 2");
  expect_error([] { parse_hsc("hsc 1 algebra\nfield R\ndim 1\n"); },
               Errc::ParseError, "field");
  expect_error(
      [] {
        parse_hsc("hsc 1 algebra\nfield GF 7\ndim 1\nMULT\n0 0 0 9\n");
      },
      Errc::RangeError, "line 5");
  expect_error(
      [] {
        parse_hsc("hsc 1 algebra\nfield Q\ndim 1\nMULT\n0 0 0 x\n");
      },
      Errc::ParseError, "line 5");
  expect_error(
      [] {
        parse_hsc("hsc 1 algebra\nfield Q\ndim 2\nlabels just_one\n");
      },
      Errc::ParseError, "expected 2 labels");
  expect_error(
      [] { parse_hsc("hsc 1 algebra\nfield Q\ndim 1\n0 0 0 1\n"); },
      Errc::ParseError, "expected a section name");
  expect_error(
      [] {
        parse_hsc("hsc 1 algebra\nfield Q\ndim 1\nMULT\n0 0 1\n");
      },
      Errc::ParseError, "3 indices");
  expect_error(
      [] {
        parse_hsc(
            "hsc 1 algebra\nfield Q\ndim 1\nMULT\n0 0 0 1\n0 0 0 1\n");
      },
      Errc::ParseError, "duplicate entry");
  expect_error(
      [] {
        parse_hsc(std::string(kMinimal) + "MULT\n");
      },
      Errc::ParseError, "duplicate section MULT");
  expect_error(
      [] {
        parse_hsc(std::string(kMinimal) + "LACT\n");
      },
      Errc::ParseError, "COUNIT entries");
  expect_error(
      [] {
        parse_hsc(
            "hsc 1 algebra\nfield Q\ndim 1\nMULT\n0 0 0 1\nUNIT\n0 1\n"
            "COMULT\n0 0 0 1\n");
      },
      Errc::ParseError, "missing section COUNIT");
  expect_error(
      [] {
        parse_hsc(
            "hsc 1 module yd\nfield Q\nalgdim 2\ndim 2\nalgebra x\n"
            "labels a b\nACT\nCOACT\n");
      },
      Errc::ParseError, "labels");
  expect_error(
      [] {
        parse_hsc("hsc 1 module lr\nfield Q\nalgdim 2\ndim 2\nLACT\n");
      },
      Errc::ParseError, "algebra");
}

TEST_CASE("comments, blank lines, and the name header are understood") {
  HscDocument doc = parse_hsc(
      "hsc 1 algebra\n"
      "# name: tiny\n"
      "# double of something, purely informational\n"
      "\n"
      "field Q\n"
      "dim 1\n"
      "\n"
      "MULT\n"
      "0 0 0 1\n"
      "UNIT\n"
      "0 1\n"
      "COMULT\n"
      "0 0 0 1\n"
      "COUNIT\n"
      "0 1\n");
  CHECK(doc.name == "tiny");
  Bialgebra B = doc_to_bialgebra(doc);
  CHECK(B.name == "tiny");
  check_all(check_bialgebra(B, {}));
}

TEST_CASE("explicit zero entries are accepted and dropped by conversion") {
  std::string with_zero =
      "hsc 1 algebra\n"
      "field Q\n"
      "dim 2\n"
      "MULT\n"
      "0 0 0 1\n"
      "0 1 0 0\n"
      "0 1 1 1\n"
      "1 0 1 1\n"
      "1 1 0 1\n"
      "UNIT\n"
      "0 1\n"
      "COMULT\n"
      "0 0 0 1\n"
      "1 1 1 1\n"
      "COUNIT\n"
      "0 1\n"
      "1 1\n";
  Bialgebra B = doc_to_bialgebra(parse_hsc(with_zero));
  Bialgebra C = doc_to_bialgebra(parse_hsc(emit_hsc(doc_from_hopf(zoo("c2_q")))));
  CHECK(B.mult == C.mult);
}

TEST_CASE("module conversion cross-checks the supplied base") {
  auto H = make_hopf("sweedler_q");
  HscDocument doc = doc_from_lr(trivial_lr(H, 2), "deadbeefdeadbeef");
  expect_error([&] { doc_to_lr(doc, make_hopf("taft3_gf7")); }, Errc::FieldError,
               "field");
  expect_error([&] { doc_to_lr(doc, make_hopf("c2_q")); }, Errc::DimMismatch,
               "algdim");
  expect_error([&] { doc_to_bialgebra(doc); }, Errc::ParseError, "not an algebra");
  expect_error([&] { doc_to_yd(doc, bialgebra_of(H)); }, Errc::ParseError,
               "not a yd module");
}

TEST_CASE("digests match the FNV-1a reference values") {
  CHECK(fnv1a64("") == 14695981039346656037ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(digest_hex("a") == "af63dc4c8601ec8c");
  CHECK(digest_hex("") == "cbf29ce484222325");
}
