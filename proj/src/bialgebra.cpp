#include "hsc/bialgebra.hpp"

#include "hsc/error.hpp"

namespace hsc {

const LinMap& HopfAlgebra::antipode_inverse() const {
  if (!antipode_inv)
    fail(Errc::SingularAntipode, b.name + ": antipode inverse unavailable");
  return *antipode_inv;
}

void require_valid_shape(const Bialgebra& B) {
  const uint64_t n = B.dim;
  auto shape = [&](const LinMap& m, uint64_t r, uint64_t c, const char* what) {
    if (m.rows() != r || m.cols() != c)
      fail(Errc::DimMismatch, B.name + ": " + what + " has shape " +
                                  std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                  ", expected " + std::to_string(r) + "x" + std::to_string(c));
    require_same_field(B.field, m.field());
  };
  shape(B.mult, n, n * n, "mult");
  shape(B.unit, n, 1, "unit");
  shape(B.comult, n * n, n, "comult");
  shape(B.counit, 1, n, "counit");
  if (B.labels.size() != B.dim)
    fail(Errc::DimMismatch, B.name + ": " + std::to_string(B.labels.size()) +
                                " labels for dimension " + std::to_string(B.dim));
}

AxiomReport check_bialgebra(const Bialgebra& B, const CheckOptions& opt) {
  require_valid_shape(B);
  const FieldSpec F = B.field;
  const uint64_t n = B.dim;
  auto m = own(B.mult), u = own(B.unit), d = own(B.comult), e = own(B.counit);
  auto fl = own(LinMap::flip(F, B.dim, B.dim));

  AxiomReport rep{"bialgebra(" + B.name + ")", {}};
  auto add = [&](const char* name, const MapChain& L, const MapChain& R) {
    rep.entries.push_back({name, check_equal(L, R, opt)});
  };

  MapChain assocL(F, n * n * n), assocR(F, n * n * n);
  assocL.then(m, 1, n).then(m);
  assocR.then(m, n, 1).then(m);
  add("assoc", assocL, assocR);

  MapChain unitL(F, n), unitR(F, n);
  unitL.then(u, 1, n).then(m);
  unitR.then(u, n, 1).then(m);
  add("unit_l", unitL, MapChain(F, n));
  add("unit_r", unitR, MapChain(F, n));

  MapChain coassocL(F, n), coassocR(F, n);
  coassocL.then(d).then(d, 1, n);
  coassocR.then(d).then(d, n, 1);
  add("coassoc", coassocL, coassocR);

  MapChain counitL(F, n), counitR(F, n);
  counitL.then(d).then(e, 1, n);
  counitR.then(d).then(e, n, 1);
  add("counit_l", counitL, MapChain(F, n));
  add("counit_r", counitR, MapChain(F, n));

  MapChain dmL(F, n * n), dmR(F, n * n);
  dmL.then(m).then(d);
  dmR.then(d, 1, n).then(d, n * n, 1).then(fl, n, n).then(m, 1, n * n).then(m, n, 1);
  add("delta_mult", dmL, dmR);

  MapChain duL(F, 1), duR(F, 1);
  duL.then(u).then(d);
  duR.then(u).then(u, n, 1);
  add("delta_unit", duL, duR);

  MapChain emL(F, n * n), emR(F, n * n);
  emL.then(m).then(e);
  emR.then(e, 1, n).then(e);
  add("eps_mult", emL, emR);

  MapChain euL(F, 1);
  euL.then(u).then(e);
  add("eps_unit", euL, MapChain(F, 1));
  return rep;
}

std::optional<LinMap> compute_antipode(const Bialgebra& B) {
  require_valid_shape(B);
  const FieldSpec F = B.field;
  const uint32_t n = B.dim;
  // Equation per basis element j: sum over Delta(e_j) of m(S(e_a), e_b)
  // equals eps(e_j) * 1. Unknown x[a*n + r] = S_{r,a}, equation rows j*n + i.
  LinMap A(F, n * n, n * n);
  for (uint32_t j = 0; j < n; ++j) {
    for (const auto& t : B.comult.col(j)) {
      uint32_t a = static_cast<uint32_t>(t.row) / n;
      uint32_t bb = static_cast<uint32_t>(t.row) % n;
      for (uint32_t r = 0; r < n; ++r)
        for (const auto& me : B.mult.col(r * n + bb))
          A.add_to(j * n + me.row, a * n + r, s_mul(F, t.v, me.v));
    }
  }
  LinMap rhs(F, n * n, 1);
  for (uint32_t j = 0; j < n; ++j) {
    Scalar ej = B.counit.get(0, j);
    if (ej.is_zero()) continue;
    for (const auto& ue : B.unit.col(0)) rhs.add_to(j * n + ue.row, 0, s_mul(F, ej, ue.v));
  }
  auto X = solve_linear(A, rhs);
  if (!X) return std::nullopt;
  LinMap S(F, n, n);
  for (const auto& x : X->col(0))
    S.set(static_cast<uint32_t>(x.row) % n, static_cast<uint32_t>(x.row) / n, x.v);

  // The solve enforces the left identity; the mirrored one is a theorem for
  // genuine bialgebras but is verified rather than assumed.
  MapChain right(F, n), target(F, n);
  right.then(own(B.comult)).then(own(S), n, 1).then(own(B.mult));
  target.then(own(B.counit)).then(own(B.unit));
  if (!check_equal(right, target, CheckOptions{}).passed) return std::nullopt;
  return S;
}

HopfAlgebra invert_antipode(HopfAlgebra H) {
  auto inv = invert(H.antipode);
  if (!inv) fail(Errc::SingularAntipode, H.b.name + ": antipode is not invertible");
  H.antipode_inv = std::move(*inv);
  return H;
}

std::optional<HopfAlgebra> try_hopf(Bialgebra B) {
  auto S = compute_antipode(B);
  if (!S) return std::nullopt;
  HopfAlgebra H{std::move(B), std::move(*S), std::nullopt};
  if (auto inv = invert(H.antipode)) H.antipode_inv = std::move(*inv);
  return H;
}

AxiomReport check_hopf(const HopfAlgebra& H, const CheckOptions& opt) {
  AxiomReport rep = check_bialgebra(H.b, opt);
  rep.subject = "hopf(" + H.b.name + ")";
  const FieldSpec F = H.b.field;
  const uint64_t n = H.b.dim;
  if (H.antipode.rows() != n || H.antipode.cols() != n)
    fail(Errc::DimMismatch, H.b.name + ": antipode shape");
  auto m = own(H.b.mult), d = own(H.b.comult), s = own(H.antipode);

  MapChain target(F, n);
  target.then(own(H.b.counit)).then(own(H.b.unit));
  MapChain left(F, n), right(F, n);
  left.then(d).then(s, 1, n).then(m);
  right.then(d).then(s, n, 1).then(m);
  rep.entries.push_back({"antipode_l", check_equal(left, target, opt)});
  rep.entries.push_back({"antipode_r", check_equal(right, target, opt)});

  if (H.antipode_inv) {
    auto si = own(*H.antipode_inv);
    MapChain li(F, n), ri(F, n);
    li.then(si).then(s);
    ri.then(s).then(si);
    rep.entries.push_back({"antipode_inv_l", check_equal(li, MapChain(F, n), opt)});
    rep.entries.push_back({"antipode_inv_r", check_equal(ri, MapChain(F, n), opt)});
  }
  return rep;
}

Bialgebra dual_bialgebra(const Bialgebra& B) {
  require_valid_shape(B);
  Bialgebra D;
  D.field = B.field;
  D.dim = B.dim;
  D.name = B.name + ".dual";
  D.labels.reserve(B.dim);
  for (const auto& l : B.labels) D.labels.push_back("d_" + l);
  D.mult = transpose_dual(B.comult);
  D.unit = transpose_dual(B.counit);
  D.comult = transpose_dual(B.mult);
  D.counit = transpose_dual(B.unit);
  return D;
}

HopfAlgebra dual_hopf(const HopfAlgebra& H) {
  HopfAlgebra D{dual_bialgebra(H.b), transpose_dual(H.antipode), std::nullopt};
  if (H.antipode_inv) D.antipode_inv = transpose_dual(*H.antipode_inv);
  return D;
}

Bialgebra tensor_bialgebra(const Bialgebra& A, const Bialgebra& B) {
  require_valid_shape(A);
  require_valid_shape(B);
  require_same_field(A.field, B.field);
  const FieldSpec F = A.field;
  const uint32_t na = A.dim, nb = B.dim;
  Bialgebra T;
  T.field = F;
  T.dim = na * nb;
  T.name = A.name + "x" + B.name;
  T.labels.reserve(T.dim);
  for (const auto& la : A.labels)
    for (const auto& lb : B.labels) T.labels.push_back(la + "." + lb);
  // (a1 b1)(a2 b2) pairs the a's and the b's: permute then multiply
  // componentwise; comultiplication mirrors this.
  LinMap regroup_in = LinMap::tensor_perm(F, {na, nb, na, nb}, {0, 2, 1, 3});
  LinMap regroup_out = LinMap::tensor_perm(F, {na, na, nb, nb}, {0, 2, 1, 3});
  T.mult = compose(kron(A.mult, B.mult), regroup_in);
  T.unit = kron(A.unit, B.unit);
  T.comult = compose(regroup_out, kron(A.comult, B.comult));
  T.counit = kron(A.counit, B.counit);
  return T;
}

HopfAlgebra tensor_hopf(const HopfAlgebra& A, const HopfAlgebra& B) {
  HopfAlgebra T{tensor_bialgebra(A.b, B.b), kron(A.antipode, B.antipode), std::nullopt};
  if (A.antipode_inv && B.antipode_inv)
    T.antipode_inv = kron(*A.antipode_inv, *B.antipode_inv);
  return T;
}

HopfAlgebra tensor_square(std::shared_ptr<const HopfAlgebra> H) {
  HopfAlgebra env = tensor_hopf(*H, dual_hopf(*H));
  env.b.name = H->b.name + ".env";
  env.b.tensor_square = std::make_shared<TensorSquareInfo>(TensorSquareInfo{std::move(H)});
  return env;
}

CommFlags commutativity_flags(const Bialgebra& B) {
  require_valid_shape(B);
  LinMap fl = LinMap::flip(B.field, B.dim, B.dim);
  return CommFlags{compose(B.mult, fl) == B.mult, compose(fl, B.comult) == B.comult};
}

}  // namespace hsc
