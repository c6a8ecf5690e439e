#include "hsc/rep.hpp"

#include "hsc/error.hpp"

namespace hsc {

LinMap realize(const MapChain& c, uint64_t limit) {
  if (c.dom() <= limit) return c.materialize();
  return LinMap::deferred(c.field(), c.cod(), c.dom(),
                          [c](uint64_t j) { return c.apply(basis_vec(j)); });
}

std::shared_ptr<const Bialgebra> bialgebra_of(std::shared_ptr<const HopfAlgebra> H) {
  return std::shared_ptr<const Bialgebra>(H, &H->b);
}

void require_same_base(const std::shared_ptr<const Bialgebra>& a,
                       const std::shared_ptr<const Bialgebra>& b, const char* what) {
  if (!a || !b) fail(Errc::DimMismatch, std::string(what) + ": missing base algebra");
  if (a == b) return;
  if (!(a->field == b->field) || a->dim != b->dim || a->mult != b->mult ||
      a->unit != b->unit || a->comult != b->comult || a->counit != b->counit)
    fail(Errc::DimMismatch, std::string(what) + ": different base algebras");
}

CheckResult merge_results(std::initializer_list<CheckResult> rs) {
  CheckResult out;
  for (const auto& r : rs) {
    out.columns_checked += r.columns_checked;
    out.sampled = out.sampled || r.sampled;
    if (!r.passed && out.passed) {
      out.passed = false;
      out.witness = r.witness;
    }
  }
  return out;
}

namespace {

void require_action_shape(const ActionStructure& a) {
  if (!a.algebra) fail(Errc::DimMismatch, "action: missing algebra");
  const uint64_t n = a.algebra->dim, m = a.dim;
  const uint64_t dom = a.side == Side::Left ? n * m : m * n;
  if (a.map.rows() != m || a.map.cols() != dom)
    fail(Errc::DimMismatch, "action: map is " + a.map.describe() + ", expected " +
                                std::to_string(m) + "x" + std::to_string(dom));
  require_same_field(a.algebra->field, a.map.field());
}

void require_coaction_shape(const CoactionStructure& c) {
  if (!c.algebra) fail(Errc::DimMismatch, "coaction: missing algebra");
  const uint64_t n = c.algebra->dim, m = c.dim;
  const uint64_t cod = c.side == Side::Left ? n * m : m * n;
  if (c.map.rows() != cod || c.map.cols() != m)
    fail(Errc::DimMismatch, "coaction: map is " + c.map.describe() + ", expected " +
                                std::to_string(cod) + "x" + std::to_string(m));
  require_same_field(c.algebra->field, c.map.field());
}

}  // namespace

ChainPair action_assoc_chains(const ActionStructure& a) {
  const Bialgebra& B = *a.algebra;
  const FieldSpec F = B.field;
  const uint64_t n = B.dim, m = a.dim;
  auto act = own(a.map);
  auto mu = own(B.mult);
  if (a.side == Side::Left) {
    MapChain L(F, n * n * m), R(F, n * n * m);
    L.then(mu, 1, m).then(act);
    R.then(act, n, 1).then(act);
    return {std::move(L), std::move(R)};
  }
  MapChain L(F, m * n * n), R(F, m * n * n);
  L.then(mu, m, 1).then(act);
  R.then(act, 1, n).then(act);
  return {std::move(L), std::move(R)};
}

ChainPair action_unit_chains(const ActionStructure& a) {
  const Bialgebra& B = *a.algebra;
  const FieldSpec F = B.field;
  const uint64_t m = a.dim;
  auto act = own(a.map);
  auto eta = own(B.unit);
  MapChain L(F, m), R(F, m);
  if (a.side == Side::Left)
    L.then(eta, 1, m).then(act);
  else
    L.then(eta, m, 1).then(act);
  return {std::move(L), std::move(R)};
}

ChainPair coaction_coassoc_chains(const CoactionStructure& c) {
  const Bialgebra& B = *c.algebra;
  const FieldSpec F = B.field;
  const uint64_t n = B.dim, m = c.dim;
  auto co = own(c.map);
  auto d = own(B.comult);
  MapChain L(F, m), R(F, m);
  if (c.side == Side::Left) {
    L.then(co).then(d, 1, m);
    R.then(co).then(co, n, 1);
  } else {
    L.then(co).then(co, 1, n);
    R.then(co).then(d, m, 1);
  }
  return {std::move(L), std::move(R)};
}

ChainPair coaction_counit_chains(const CoactionStructure& c) {
  const Bialgebra& B = *c.algebra;
  const FieldSpec F = B.field;
  const uint64_t m = c.dim;
  auto co = own(c.map);
  auto eps = own(B.counit);
  MapChain L(F, m), R(F, m);
  if (c.side == Side::Left)
    L.then(co).then(eps, 1, m);
  else
    L.then(co).then(eps, m, 1);
  return {std::move(L), std::move(R)};
}

AxiomReport check_action(const ActionStructure& a, const CheckOptions& opt) {
  require_action_shape(a);
  AxiomReport rep{"action(" + a.algebra->name + ")", {}};
  ChainPair as = action_assoc_chains(a);
  rep.entries.push_back({"assoc_action", check_equal(as.lhs, as.rhs, opt)});
  ChainPair un = action_unit_chains(a);
  rep.entries.push_back({"unit_action", check_equal(un.lhs, un.rhs, opt)});
  return rep;
}

AxiomReport check_coaction(const CoactionStructure& c, const CheckOptions& opt) {
  require_coaction_shape(c);
  AxiomReport rep{"coaction(" + c.algebra->name + ")", {}};
  ChainPair cc = coaction_coassoc_chains(c);
  rep.entries.push_back({"coassoc_coaction", check_equal(cc.lhs, cc.rhs, opt)});
  ChainPair cu = coaction_counit_chains(c);
  rep.entries.push_back({"counit_coaction", check_equal(cu.lhs, cu.rhs, opt)});
  return rep;
}

namespace {

void require_yd_shape(const YDModule& M) {
  if (!M.algebra) fail(Errc::DimMismatch, "yd: missing algebra");
  if (M.action.side != Side::Left || M.coaction.side != Side::Left)
    fail(Errc::DimMismatch, "yd: structures must be left-sided");
  if (M.action.dim != M.dim || M.coaction.dim != M.dim)
    fail(Errc::DimMismatch, "yd: structure dims disagree with module dim");
  require_same_base(M.algebra, M.action.algebra, "yd action");
  require_same_base(M.algebra, M.coaction.algebra, "yd coaction");
  require_action_shape(M.action);
  require_coaction_shape(M.coaction);
}

ChainPair yd_compat_chains(const YDModule& M) {
  const Bialgebra& B = *M.algebra;
  const FieldSpec F = B.field;
  const uint64_t n = B.dim, m = M.dim;
  auto act = own(M.action.map);
  auto co = own(M.coaction.map);
  auto d = own(B.comult);
  auto mu = own(B.mult);
  const uint32_t n32 = static_cast<uint32_t>(n);
  const uint32_t m32 = static_cast<uint32_t>(m);

  MapChain L(F, n * m);
  L.then(d, 1, m);                                                    // b1 b2 m
  L.then(own(LinMap::tensor_perm(F, {n32, n32, m32}, {0, 2, 1})));    // b1 m b2
  L.then(act, 1, n);                                                  // (b1.m) b2
  L.then(co, 1, n);                                                   // x_(-1) x_(0) b2
  L.then(own(LinMap::tensor_perm(F, {n32, m32, n32}, {0, 2, 1})));    // x_(-1) b2 x_(0)
  L.then(mu, 1, m);                                                   // x_(-1)b2 x_(0)

  MapChain R(F, n * m);
  R.then(co, n, 1);                                                       // b m_(-1) m_(0)
  R.then(d, 1, n * m);                                                    // b1 b2 m_(-1) m_(0)
  R.then(own(LinMap::tensor_perm(F, {n32, n32, n32, m32}, {0, 2, 1, 3})));  // b1 m_(-1) b2 m_(0)
  R.then(mu, 1, n * m);                                                   // b1m_(-1) b2 m_(0)
  R.then(act, n, 1);                                                      // b1m_(-1) b2.m_(0)
  return {std::move(L), std::move(R)};
}

}  // namespace

AxiomReport check_yd(const YDModule& M, const CheckOptions& opt) {
  require_yd_shape(M);
  AxiomReport rep{"yd(" + M.algebra->name + ", dim " + std::to_string(M.dim) + ")", {}};
  ChainPair aa = action_assoc_chains(M.action);
  ChainPair au = action_unit_chains(M.action);
  rep.entries.push_back(
      {"module", merge_results({check_equal(aa.lhs, aa.rhs, opt),
                                check_equal(au.lhs, au.rhs, opt)})});
  ChainPair cc = coaction_coassoc_chains(M.coaction);
  ChainPair cu = coaction_counit_chains(M.coaction);
  rep.entries.push_back(
      {"comodule", merge_results({check_equal(cc.lhs, cc.rhs, opt),
                                  check_equal(cu.lhs, cu.rhs, opt)})});
  ChainPair yc = yd_compat_chains(M);
  rep.entries.push_back({"yd_compat", check_equal(yc.lhs, yc.rhs, opt)});
  return rep;
}

YDModule yd_tensor(const YDModule& M, const YDModule& N) {
  require_same_base(M.algebra, N.algebra, "yd_tensor");
  const Bialgebra& B = *M.algebra;
  const FieldSpec F = B.field;
  const uint64_t d = B.dim, m = M.dim, n = N.dim;
  const uint32_t d32 = static_cast<uint32_t>(d);
  const uint32_t m32 = static_cast<uint32_t>(m);
  const uint32_t n32 = static_cast<uint32_t>(n);
  auto actM = own(M.action.map), actN = own(N.action.map);
  auto coM = own(M.coaction.map), coN = own(N.coaction.map);

  MapChain act(F, d * m * n);
  act.then(own(B.comult), 1, m * n);                                     // b1 b2 m n
  act.then(own(LinMap::tensor_perm(F, {d32, d32, m32, n32}, {0, 2, 1, 3})));  // b1 m b2 n
  act.then(actM, 1, d * n);                                              // b1.m b2 n
  act.then(actN, m, 1);                                                  // b1.m b2.n

  MapChain co(F, m * n);
  co.then(coN, m, 1);                                                    // m n_(-1) n_(0)
  co.then(coM, 1, d * n);                                                // m_(-1) m_(0) n_(-1) n_(0)
  co.then(own(LinMap::tensor_perm(F, {d32, m32, d32, n32}, {0, 2, 1, 3})));  // m_(-1) n_(-1) m_(0) n_(0)
  co.then(own(B.mult), 1, m * n);

  YDModule T;
  T.algebra = M.algebra;
  T.dim = m * n;
  T.action = {Side::Left, M.algebra, T.dim, realize(act)};
  T.coaction = {Side::Left, M.algebra, T.dim, realize(co)};
  return T;
}

MapChain yd_braiding_chain(const YDModule& M, const YDModule& N) {
  require_same_base(M.algebra, N.algebra, "yd_braiding");
  const Bialgebra& B = *M.algebra;
  const FieldSpec F = B.field;
  const uint64_t d = B.dim, m = M.dim, n = N.dim;
  MapChain c(F, m * n);
  c.then(own(M.coaction.map), 1, n);  // m_(-1) m_(0) n
  c.then(own(LinMap::tensor_perm(F,
                                 {static_cast<uint32_t>(d), static_cast<uint32_t>(m),
                                  static_cast<uint32_t>(n)},
                                 {0, 2, 1})));  // m_(-1) n m_(0)
  c.then(own(N.action.map), 1, m);              // m_(-1).n m_(0)
  return c;
}

LinMap yd_braiding(const YDModule& M, const YDModule& N) {
  return realize(yd_braiding_chain(M, N));
}

AxiomReport check_intertwiner(const LinMap& f, const YDModule& M, const YDModule& N,
                              const CheckOptions& opt) {
  require_same_base(M.algebra, N.algebra, "check_intertwiner");
  if (f.rows() != N.dim || f.cols() != M.dim)
    fail(Errc::DimMismatch, "check_intertwiner: map shape");
  const Bialgebra& B = *M.algebra;
  const FieldSpec F = B.field;
  const uint64_t d = B.dim;
  auto fp = own(f);
  AxiomReport rep{"intertwiner(" + B.name + ")", {}};

  MapChain linL(F, d * M.dim), linR(F, d * M.dim);
  linL.then(own(M.action.map)).then(fp);
  linR.then(fp, d, 1).then(own(N.action.map));
  rep.entries.push_back({"linear", check_equal(linL, linR, opt)});

  MapChain colL(F, M.dim), colR(F, M.dim);
  colL.then(fp).then(own(N.coaction.map));
  colR.then(own(M.coaction.map)).then(fp, d, 1);
  rep.entries.push_back({"colinear", check_equal(colL, colR, opt)});
  return rep;
}

YDModule trivial_yd(std::shared_ptr<const Bialgebra> B, uint32_t m) {
  LinMap id_m = LinMap::identity(B->field, m);
  YDModule M;
  M.dim = m;
  M.action = {Side::Left, B, m, kron(B->counit, id_m)};
  M.coaction = {Side::Left, B, m, kron(B->unit, id_m)};
  M.algebra = std::move(B);
  return M;
}

YDModule adjoint_yd(std::shared_ptr<const HopfAlgebra> H) {
  const FieldSpec F = H->b.field;
  const uint64_t n = H->b.dim;
  const uint32_t n32 = static_cast<uint32_t>(n);
  MapChain act(F, n * n);
  act.then(own(H->b.comult), 1, n);                                   // h1 h2 m
  act.then(own(LinMap::tensor_perm(F, {n32, n32, n32}, {0, 2, 1})));  // h1 m h2
  act.then(own(H->antipode), n * n, 1);                               // h1 m S(h2)
  act.then(own(H->b.mult), n, 1);                                     // h1 (m S(h2))
  act.then(own(H->b.mult));
  auto B = bialgebra_of(std::move(H));
  YDModule M;
  M.dim = n;
  M.action = {Side::Left, B, n, realize(act)};
  M.coaction = {Side::Left, B, n, B->comult};
  M.algebra = std::move(B);
  return M;
}

}  // namespace hsc
