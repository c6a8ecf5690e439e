#include "hsc/lr.hpp"

#include <string>
#include <vector>

#include "hsc/double.hpp"
#include "hsc/error.hpp"

namespace hsc {

namespace {

LinMap perm(FieldSpec F, std::initializer_list<uint32_t> dims,
            std::initializer_list<size_t> src) {
  return LinMap::tensor_perm(F, std::vector<uint32_t>(dims), std::vector<size_t>(src));
}

// <f, h> on the dual-first pair b^i (x) b_j, a 1 x n*n matrix.
LinMap pairing_map(FieldSpec F, uint32_t n) {
  LinMap p(F, 1, n * n);
  for (uint32_t i = 0; i < n; ++i) p.set(0, i * n + i, Scalar::from_int(F, 1));
  return p;
}

// sum_i b^i (x) b_i as a single column, the inverse pairing.
LinMap copairing_map(FieldSpec F, uint32_t n) {
  LinMap p(F, n * n, 1);
  for (uint32_t i = 0; i < n; ++i) p.set(i * n + i, 0, Scalar::from_int(F, 1));
  return p;
}

// b_j -> b_j (x) eps into H (x) H*.
LinMap counit_right_embed(const Bialgebra& B) {
  const uint32_t n = B.dim;
  LinMap e(B.field, n * n, n);
  for (uint32_t u = 0; u < n; ++u) {
    const auto& c = B.counit.col(u);
    if (c.empty()) continue;
    for (uint32_t j = 0; j < n; ++j) e.set(j * n + u, j, c.front().v);
  }
  return e;
}

// b^i -> 1 (x) b^i into H (x) H*.
LinMap unit_left_embed(const Bialgebra& B) {
  const uint32_t n = B.dim;
  LinMap e(B.field, n * n, n);
  for (const auto& u : B.unit.col(0))
    for (uint32_t i = 0; i < n; ++i) e.set(u.row * n + i, i, u.v);
  return e;
}

void require_lr_shape(const LRBimodule& M) {
  if (!M.hopf) fail(Errc::DimMismatch, "lr: missing Hopf algebra");
  auto base = std::shared_ptr<const Bialgebra>(M.hopf, &M.hopf->b);
  if (M.lact.side != Side::Left || M.lcoact.side != Side::Left ||
      M.ract.side != Side::Right || M.rcoact.side != Side::Right)
    fail(Errc::DimMismatch, "lr: structure sides are mislabeled");
  if (M.lact.dim != M.dim || M.ract.dim != M.dim || M.lcoact.dim != M.dim ||
      M.rcoact.dim != M.dim)
    fail(Errc::DimMismatch, "lr: structure dims disagree with module dim");
  require_same_base(base, M.lact.algebra, "lr lact");
  require_same_base(base, M.ract.algebra, "lr ract");
  require_same_base(base, M.lcoact.algebra, "lr lcoact");
  require_same_base(base, M.rcoact.algebra, "lr rcoact");
  const uint64_t n = M.hopf->b.dim, m = M.dim;
  auto expect = [&](const LinMap& f, uint64_t r, uint64_t c, const char* what) {
    if (f.rows() != r || f.cols() != c)
      fail(Errc::DimMismatch, std::string("lr ") + what + ": map is " + f.describe() +
                                  ", expected " + std::to_string(r) + "x" + std::to_string(c));
  };
  expect(M.lact.map, m, n * m, "lact");
  expect(M.ract.map, m, m * n, "ract");
  expect(M.lcoact.map, n * m, m, "lcoact");
  expect(M.rcoact.map, m * n, m, "rcoact");
}

void require_same_hopf(const LRBimodule& M, const LRBimodule& N, const char* what) {
  auto a = std::shared_ptr<const Bialgebra>(M.hopf, &M.hopf->b);
  auto b = std::shared_ptr<const Bialgebra>(N.hopf, &N.hopf->b);
  require_same_base(a, b, what);
}

LinMap realize_guarded(const MapChain& c, bool inputs_deferred) {
  return realize(c, inputs_deferred ? 0 : kMaterializeLimit);
}

}  // namespace

AxiomReport check_lr(const LRBimodule& M, const CheckOptions& opt) {
  require_lr_shape(M);
  const Bialgebra& B = M.hopf->b;
  const FieldSpec F = B.field;
  const uint64_t n = B.dim, m = M.dim;
  const uint32_t n32 = static_cast<uint32_t>(n), m32 = static_cast<uint32_t>(m);
  auto la = own(M.lact.map), ra = own(M.ract.map);
  auto lc = own(M.lcoact.map), rc = own(M.rcoact.map);
  auto d = own(B.comult), mu = own(B.mult);

  AxiomReport rep{"lr(" + B.name + ", dim " + std::to_string(m) + ")", {}};

  ChainPair laa = action_assoc_chains(M.lact);
  ChainPair lau = action_unit_chains(M.lact);
  rep.entries.push_back({"lmod", merge_results({check_equal(laa.lhs, laa.rhs, opt),
                                                check_equal(lau.lhs, lau.rhs, opt)})});
  ChainPair raa = action_assoc_chains(M.ract);
  ChainPair rau = action_unit_chains(M.ract);
  rep.entries.push_back({"rmod", merge_results({check_equal(raa.lhs, raa.rhs, opt),
                                                check_equal(rau.lhs, rau.rhs, opt)})});

  {
    MapChain L(F, n * m * n), R(F, n * m * n);
    L.then(la, 1, n).then(ra);
    R.then(ra, n, 1).then(la);
    rep.entries.push_back({"bimod", check_equal(L, R, opt)});
  }

  ChainPair lcc = coaction_coassoc_chains(M.lcoact);
  ChainPair lcu = coaction_counit_chains(M.lcoact);
  rep.entries.push_back({"lcomod", merge_results({check_equal(lcc.lhs, lcc.rhs, opt),
                                                  check_equal(lcu.lhs, lcu.rhs, opt)})});
  ChainPair rcc = coaction_coassoc_chains(M.rcoact);
  ChainPair rcu = coaction_counit_chains(M.rcoact);
  rep.entries.push_back({"rcomod", merge_results({check_equal(rcc.lhs, rcc.rhs, opt),
                                                  check_equal(rcu.lhs, rcu.rhs, opt)})});

  {
    MapChain L(F, m), R(F, m);
    L.then(rc).then(lc, 1, n);
    R.then(lc).then(rc, n, 1);
    rep.entries.push_back({"bicomod", check_equal(L, R, opt)});
  }

  {
    MapChain L(F, n * m);
    L.then(d, 1, m);                              // h1 h2 m
    L.then(own(perm(F, {n32, n32, m32}, {0, 2, 1})));
    L.then(la, 1, n);                             // (h1.m) h2
    L.then(lc, 1, n);                             // x_(-1) x_(0) h2
    L.then(own(perm(F, {n32, m32, n32}, {0, 2, 1})));
    L.then(mu, 1, m);                             // x_(-1)h2 x_(0)
    MapChain R(F, n * m);
    R.then(lc, n, 1);                             // h m_(-1) m_(0)
    R.then(d, 1, n * m);                          // h1 h2 m_(-1) m_(0)
    R.then(own(perm(F, {n32, n32, n32, m32}, {0, 2, 1, 3})));
    R.then(mu, 1, n * m);                         // h1 m_(-1) h2 m_(0)
    R.then(la, n, 1);                             // h1m_(-1) h2.m_(0)
    rep.entries.push_back({"yd_ll", check_equal(L, R, opt)});
  }

  {
    MapChain L(F, n * m), R(F, n * m);
    L.then(la).then(rc);
    R.then(rc, n, 1).then(la, 1, n);
    rep.entries.push_back({"long_lr", check_equal(L, R, opt)});
  }

  {
    MapChain L(F, m * n);
    L.then(d, m, 1);                              // m h1 h2
    L.then(own(perm(F, {m32, n32, n32}, {0, 2, 1})));
    L.then(ra, 1, n);                             // (m.h2) h1
    L.then(rc, 1, n);                             // x_<0> x_<1> h1
    L.then(own(perm(F, {m32, n32, n32}, {0, 2, 1})));
    L.then(mu, m, 1);                             // x_<0> h1 x_<1>
    MapChain R(F, m * n);
    R.then(d, m, 1);                              // m h1 h2
    R.then(rc, 1, n * n);                         // m_<0> m_<1> h1 h2
    R.then(own(perm(F, {m32, n32, n32, n32}, {0, 2, 1, 3})));
    R.then(ra, 1, n * n);                         // m_<0>.h1 m_<1> h2
    R.then(mu, m, 1);                             // m_<0>.h1 m_<1>h2
    rep.entries.push_back({"yd_rr", check_equal(L, R, opt)});
  }

  {
    MapChain L(F, m * n), R(F, m * n);
    L.then(ra).then(lc);
    R.then(lc, 1, n).then(ra, n, 1);
    rep.entries.push_back({"long_rl", check_equal(L, R, opt)});
  }

  return rep;
}

LRBimodule lr_tensor(const LRBimodule& M, const LRBimodule& N) {
  require_lr_shape(M);
  require_lr_shape(N);
  require_same_hopf(M, N, "lr_tensor");
  const Bialgebra& B = M.hopf->b;
  const FieldSpec F = B.field;
  const uint64_t n = B.dim, m = M.dim, k = N.dim;
  const uint32_t n32 = static_cast<uint32_t>(n);
  const uint32_t m32 = static_cast<uint32_t>(m), k32 = static_cast<uint32_t>(k);
  auto d = own(B.comult), mu = own(B.mult);

  MapChain la(F, n * m * k);
  la.then(d, 1, m * k);                                     // h1 h2 m n
  la.then(own(perm(F, {n32, n32, m32, k32}, {0, 2, 1, 3})));  // h1 m h2 n
  la.then(own(M.lact.map), 1, n * k);                       // h1.m h2 n
  la.then(own(N.lact.map), m, 1);                           // h1.m h2.n

  MapChain ra(F, m * k * n);
  ra.then(d, m * k, 1);                                     // m n h1 h2
  ra.then(own(perm(F, {m32, k32, n32, n32}, {0, 2, 1, 3})));  // m h1 n h2
  ra.then(own(M.ract.map), 1, k * n);                       // m.h1 n h2
  ra.then(own(N.ract.map), m, 1);                           // m.h1 n.h2

  MapChain lc(F, m * k);
  lc.then(own(N.lcoact.map), m, 1);                         // m n_(-1) n_(0)
  lc.then(own(M.lcoact.map), 1, n * k);                     // m_(-1) m_(0) n_(-1) n_(0)
  lc.then(own(perm(F, {n32, m32, n32, k32}, {0, 2, 1, 3})));  // m_(-1) n_(-1) m_(0) n_(0)
  lc.then(mu, 1, m * k);

  MapChain rc(F, m * k);
  rc.then(own(M.rcoact.map), 1, k);                         // m_<0> m_<1> n
  rc.then(own(N.rcoact.map), m * n, 1);                     // m_<0> m_<1> n_<0> n_<1>
  rc.then(own(perm(F, {m32, n32, k32, n32}, {0, 2, 1, 3})));  // m_<0> n_<0> m_<1> n_<1>
  rc.then(mu, m * k, 1);

  const bool defer_act = M.lact.map.is_deferred() || N.lact.map.is_deferred() ||
                         M.ract.map.is_deferred() || N.ract.map.is_deferred();
  const bool defer_co = M.lcoact.map.is_deferred() || N.lcoact.map.is_deferred() ||
                        M.rcoact.map.is_deferred() || N.rcoact.map.is_deferred();
  auto base = bialgebra_of(M.hopf);
  LRBimodule T;
  T.hopf = M.hopf;
  T.dim = m * k;
  T.lact = {Side::Left, base, T.dim, realize_guarded(la, defer_act)};
  T.ract = {Side::Right, base, T.dim, realize_guarded(ra, defer_act)};
  T.lcoact = {Side::Left, base, T.dim, realize_guarded(lc, defer_co)};
  T.rcoact = {Side::Right, base, T.dim, realize_guarded(rc, defer_co)};
  return T;
}

MapChain lr_braiding_chain(const LRBimodule& M, const LRBimodule& N) {
  require_lr_shape(M);
  require_lr_shape(N);
  require_same_hopf(M, N, "lr_braiding");
  const Bialgebra& B = M.hopf->b;
  const FieldSpec F = B.field;
  const uint64_t n = B.dim, m = M.dim, k = N.dim;
  const uint32_t n32 = static_cast<uint32_t>(n);
  const uint32_t m32 = static_cast<uint32_t>(m), k32 = static_cast<uint32_t>(k);
  MapChain c(F, m * k);
  c.then(own(M.lcoact.map), 1, k);                         // m_(-1) m_(0) n
  c.then(own(N.rcoact.map), n * m, 1);                     // m_(-1) m_(0) n_<0> n_<1>
  c.then(own(perm(F, {n32, m32, k32, n32}, {0, 2, 1, 3})));  // m_(-1) n_<0> m_(0) n_<1>
  c.then(own(N.lact.map), 1, m * n);                       // m_(-1).n_<0> m_(0) n_<1>
  c.then(own(M.ract.map), k, 1);                           // m_(-1).n_<0> m_(0).n_<1>
  return c;
}

LinMap lr_braiding(const LRBimodule& M, const LRBimodule& N) {
  const bool defer = M.lcoact.map.is_deferred() || M.ract.map.is_deferred() ||
                     N.rcoact.map.is_deferred() || N.lact.map.is_deferred();
  return realize_guarded(lr_braiding_chain(M, N), defer);
}

MapChain lr_braiding_inv_chain(const LRBimodule& M, const LRBimodule& N) {
  require_lr_shape(M);
  require_lr_shape(N);
  require_same_hopf(M, N, "lr_braiding_inv");
  const Bialgebra& B = M.hopf->b;
  const FieldSpec F = B.field;
  const uint64_t n = B.dim, m = M.dim, k = N.dim;
  const uint32_t n32 = static_cast<uint32_t>(n);
  const uint32_t m32 = static_cast<uint32_t>(m), k32 = static_cast<uint32_t>(k);
  auto si = own(M.hopf->antipode_inverse());
  MapChain c(F, k * m);
  c.then(own(M.lcoact.map), k, 1);                         // n m_(-1) m_(0)
  c.then(own(N.rcoact.map), 1, n * m);                     // n_<0> n_<1> m_(-1) m_(0)
  c.then(si, k, n * m);                                    // ... S^-1(n_<1>) ...
  c.then(si, k * n, m);                                    // ... S^-1(m_(-1)) ...
  c.then(own(perm(F, {k32, n32, n32, m32}, {3, 1, 2, 0})));  // m_(0) S^-1(n_<1>) S^-1(m_(-1)) n_<0>
  c.then(own(M.ract.map), 1, n * k);                       // m_(0).S^-1(n_<1>) S^-1(m_(-1)) n_<0>
  c.then(own(N.lact.map), m, 1);                           // ... S^-1(m_(-1)).n_<0>
  return c;
}

LinMap lr_braiding_inv(const LRBimodule& M, const LRBimodule& N) {
  const bool defer = M.lcoact.map.is_deferred() || M.ract.map.is_deferred() ||
                     N.rcoact.map.is_deferred() || N.lact.map.is_deferred();
  return realize_guarded(lr_braiding_inv_chain(M, N), defer);
}

AxiomReport check_braiding_inverse(const LRBimodule& M, const LRBimodule& N,
                                   const CheckOptions& opt) {
  const FieldSpec F = M.hopf->b.field;
  const uint64_t m = M.dim, k = N.dim;
  MapChain c = lr_braiding_chain(M, N);
  MapChain ci = lr_braiding_inv_chain(M, N);
  AxiomReport rep{"braiding_inv(" + M.hopf->b.name + ", " + std::to_string(m) + "x" +
                      std::to_string(k) + ")",
                  {}};
  MapChain fwd(F, m * k);
  fwd.then(c).then(ci);
  rep.entries.push_back({"inv_l", check_equal(fwd, MapChain(F, m * k), opt)});
  MapChain bwd(F, k * m);
  bwd.then(ci).then(c);
  rep.entries.push_back({"inv_r", check_equal(bwd, MapChain(F, k * m), opt)});
  return rep;
}

AxiomReport check_braid_relation(const LRBimodule& M, const LRBimodule& N,
                                 const LRBimodule& P, const CheckOptions& opt) {
  const FieldSpec F = M.hopf->b.field;
  const uint64_t m = M.dim, k = N.dim, p = P.dim;
  MapChain cMN = lr_braiding_chain(M, N);
  MapChain cMP = lr_braiding_chain(M, P);
  MapChain cNP = lr_braiding_chain(N, P);
  MapChain L(F, m * k * p);
  L.then_outer(cMN, 1, p).then_outer(cMP, k, 1).then_outer(cNP, 1, m);
  MapChain R(F, m * k * p);
  R.then_outer(cNP, m, 1).then_outer(cMP, 1, k).then_outer(cMN, p, 1);
  AxiomReport rep{"braid(" + M.hopf->b.name + ", " + std::to_string(m) + "x" +
                      std::to_string(k) + "x" + std::to_string(p) + ")",
                  {}};
  rep.entries.push_back({"braid_relation", check_equal(L, R, opt)});
  return rep;
}

AxiomReport check_braiding_natural(const LinMap& f, const LRBimodule& M,
                                   const LRBimodule& Mp, const LRBimodule& N,
                                   const CheckOptions& opt) {
  require_same_hopf(M, Mp, "check_braiding_natural");
  if (f.rows() != Mp.dim || f.cols() != M.dim)
    fail(Errc::DimMismatch, "check_braiding_natural: morphism is " + f.describe() +
                                ", expected " + std::to_string(Mp.dim) + "x" +
                                std::to_string(M.dim));
  const FieldSpec F = M.hopf->b.field;
  const uint64_t m = M.dim, k = N.dim;
  MapChain L(F, m * k);
  L.then(own(f), 1, k).then(lr_braiding_chain(Mp, N));
  MapChain R(F, m * k);
  R.then(lr_braiding_chain(M, N)).then(own(f), k, 1);
  AxiomReport rep{"naturality(" + M.hopf->b.name + ")", {}};
  rep.entries.push_back({"natural", check_equal(L, R, opt)});
  return rep;
}

AxiomReport check_lr_morphism(const LinMap& f, const LRBimodule& M,
                              const LRBimodule& N, const CheckOptions& opt) {
  require_lr_shape(M);
  require_lr_shape(N);
  require_same_hopf(M, N, "check_lr_morphism");
  if (f.rows() != N.dim || f.cols() != M.dim)
    fail(Errc::DimMismatch, "check_lr_morphism: map is " + f.describe() + ", expected " +
                                std::to_string(N.dim) + "x" + std::to_string(M.dim));
  const FieldSpec F = M.hopf->b.field;
  const uint64_t n = M.hopf->b.dim, m = M.dim;
  auto g = own(f);
  AxiomReport rep{"lr_morphism(" + M.hopf->b.name + ", " + std::to_string(m) + " -> " +
                      std::to_string(N.dim) + ")",
                  {}};
  {
    MapChain L(F, n * m), R(F, n * m);
    L.then(own(M.lact.map)).then(g);
    R.then(g, n, 1).then(own(N.lact.map));
    rep.entries.push_back({"left_linear", check_equal(L, R, opt)});
  }
  {
    MapChain L(F, m * n), R(F, m * n);
    L.then(own(M.ract.map)).then(g);
    R.then(g, 1, n).then(own(N.ract.map));
    rep.entries.push_back({"right_linear", check_equal(L, R, opt)});
  }
  {
    MapChain L(F, m), R(F, m);
    L.then(g).then(own(N.lcoact.map));
    R.then(own(M.lcoact.map)).then(g, n, 1);
    rep.entries.push_back({"left_colinear", check_equal(L, R, opt)});
  }
  {
    MapChain L(F, m), R(F, m);
    L.then(g).then(own(N.rcoact.map));
    R.then(own(M.rcoact.map)).then(g, 1, n);
    rep.entries.push_back({"right_colinear", check_equal(L, R, opt)});
  }
  return rep;
}

YDModule functor_F(const LRBimodule& M) {
  require_lr_shape(M);
  const Bialgebra& B = M.hopf->b;
  const FieldSpec F = B.field;
  const uint64_t n = B.dim, m = M.dim;
  const uint32_t n32 = static_cast<uint32_t>(n), m32 = static_cast<uint32_t>(m);
  auto env = std::make_shared<const HopfAlgebra>(tensor_square(M.hopf));
  auto base = bialgebra_of(env);
  auto pair = own(pairing_map(F, n32));
  auto copair = own(copairing_map(F, n32));

  MapChain act(F, n * n * m);
  act.then(own(M.rcoact.map), n * n, 1);                    // h f m_<0> m_<1>
  act.then(own(perm(F, {n32, n32, m32, n32}, {0, 2, 1, 3})));  // h m_<0> f m_<1>
  act.then(pair, n * m, 1);                                 // <f, m_<1>> h m_<0>
  act.then(own(M.lact.map));                                // h.m_<0>

  MapChain co(F, m);
  co.then(own(M.lcoact.map));                               // m_(-1) m_(0)
  co.then(copair, n, m);                                    // m_(-1) h^i h_i m_(0)
  co.then(own(perm(F, {n32, n32, n32, m32}, {0, 1, 3, 2})));  // m_(-1) h^i m_(0) h_i
  co.then(own(M.ract.map), n * n, 1);                       // m_(-1) h^i m_(0).h_i

  const bool defer_a = M.rcoact.map.is_deferred() || M.lact.map.is_deferred();
  const bool defer_c = M.lcoact.map.is_deferred() || M.ract.map.is_deferred();
  YDModule Y;
  Y.algebra = base;
  Y.dim = m;
  Y.action = {Side::Left, base, m, realize_guarded(act, defer_a)};
  Y.coaction = {Side::Left, base, m, realize_guarded(co, defer_c)};
  return Y;
}

LRBimodule functor_G(const YDModule& M) {
  if (!M.algebra) fail(Errc::DimMismatch, "functor_G: missing base algebra");
  auto tag = M.algebra->tensor_square;
  if (!tag || !tag->factor)
    fail(Errc::BaseNotTensorSquare,
         "functor_G: base '" + M.algebra->name + "' was not built by tensor_square");
  auto H = tag->factor;
  const Bialgebra& B = H->b;
  const FieldSpec F = B.field;
  const uint64_t n = B.dim, md = M.dim;
  const uint32_t n32 = static_cast<uint32_t>(n), md32 = static_cast<uint32_t>(md);
  if (M.algebra->dim != n * n)
    fail(Errc::BaseNotTensorSquare, "functor_G: base dim " + std::to_string(M.algebra->dim) +
                                        " does not square the tagged factor dim " +
                                        std::to_string(n));
  auto act = own(M.action.map);
  auto co = own(M.coaction.map);
  auto pair = own(pairing_map(F, n32));
  auto copair = own(copairing_map(F, n32));

  MapChain la(F, n * md);
  la.then(own(counit_right_embed(B)), 1, md);               // (h (x) eps) m
  la.then(act);                                             // (h (x) eps).m

  MapChain ra(F, md * n);
  ra.then(co, 1, n);                                        // x1 x2 m_[0] h
  ra.then(own(B.counit), 1, n * md * n);                    // eps(x1) x2 m_[0] h
  ra.then(own(perm(F, {n32, md32, n32}, {0, 2, 1})));       // x2 h m_[0]
  ra.then(pair, 1, md);                                     // <x2, h> m_[0]

  MapChain lc(F, md);
  lc.then(co);                                              // x1 x2 m_[0]
  lc.then(own(transpose_dual(B.unit)), n, md);              // x1 eps*(x2) m_[0]

  MapChain rc(F, md);
  rc.then(copair, 1, md);                                   // h^i h_i m
  rc.then(own(perm(F, {n32, n32, md32}, {0, 2, 1})));       // h^i m h_i
  rc.then(own(unit_left_embed(B)), 1, md * n);              // (1 (x) h^i) m h_i
  rc.then(act, 1, n);                                       // (1 (x) h^i).m h_i

  const bool defer_act = M.action.map.is_deferred();
  const bool defer_co = M.coaction.map.is_deferred();
  auto base = bialgebra_of(H);
  LRBimodule L;
  L.hopf = H;
  L.dim = md;
  L.lact = {Side::Left, base, md, realize_guarded(la, defer_act)};
  L.ract = {Side::Right, base, md, realize_guarded(ra, defer_co)};
  L.lcoact = {Side::Left, base, md, realize_guarded(lc, defer_co)};
  L.rcoact = {Side::Right, base, md, realize_guarded(rc, defer_act)};
  return L;
}

AxiomReport check_roundtrip(const LRBimodule& M_lr, const YDModule& M_yd,
                            const CheckOptions& opt) {
  AxiomReport rep{"roundtrip(" + M_lr.hopf->b.name + " | " + M_yd.algebra->name + ")", {}};
  LRBimodule back = functor_G(functor_F(M_lr));
  rep.entries.push_back(
      {"GF_id",
       merge_results(
           {check_equal(MapChain::of(back.lact.map), MapChain::of(M_lr.lact.map), opt),
            check_equal(MapChain::of(back.ract.map), MapChain::of(M_lr.ract.map), opt),
            check_equal(MapChain::of(back.lcoact.map), MapChain::of(M_lr.lcoact.map), opt),
            check_equal(MapChain::of(back.rcoact.map), MapChain::of(M_lr.rcoact.map),
                        opt)})});
  YDModule fwd = functor_F(functor_G(M_yd));
  rep.entries.push_back(
      {"FG_id",
       merge_results({check_equal(MapChain::of(fwd.action.map),
                                  MapChain::of(M_yd.action.map), opt),
                      check_equal(MapChain::of(fwd.coaction.map),
                                  MapChain::of(M_yd.coaction.map), opt)})});
  return rep;
}

AxiomReport check_monoidal_F(const LRBimodule& M, const LRBimodule& N,
                             const CheckOptions& opt) {
  YDModule FT = functor_F(lr_tensor(M, N));
  YDModule FF = yd_tensor(functor_F(M), functor_F(N));
  AxiomReport rep{"monoidal_F(" + M.hopf->b.name + ", " + std::to_string(M.dim) + "x" +
                      std::to_string(N.dim) + ")",
                  {}};
  rep.entries.push_back({"action_eq", check_equal(MapChain::of(FT.action.map),
                                                  MapChain::of(FF.action.map), opt)});
  rep.entries.push_back({"coaction_eq", check_equal(MapChain::of(FT.coaction.map),
                                                    MapChain::of(FF.coaction.map), opt)});
  return rep;
}

AxiomReport check_braiding_transport(const LRBimodule& M, const LRBimodule& N,
                                     const CheckOptions& opt) {
  YDModule FM = functor_F(M), FN = functor_F(N);
  AxiomReport rep{"transport(" + M.hopf->b.name + ", " + std::to_string(M.dim) + "x" +
                      std::to_string(N.dim) + ")",
                  {}};
  rep.entries.push_back(
      {"transport",
       check_equal(yd_braiding_chain(FM, FN), lr_braiding_chain(M, N), opt)});
  return rep;
}

bool pseudosym_criterion(const Bialgebra& H) {
  CommFlags flags = commutativity_flags(H);
  return flags.commutative && flags.cocommutative;
}

AxiomReport pseudosym_equation(const LRBimodule& M, const LRBimodule& N,
                               const LRBimodule& P, const CheckOptions& opt) {
  const FieldSpec F = M.hopf->b.field;
  const uint64_t m = M.dim, k = N.dim, p = P.dim;
  MapChain cMN = lr_braiding_chain(M, N);
  MapChain cNP = lr_braiding_chain(N, P);
  MapChain inv = lr_braiding_inv_chain(P, M);
  MapChain L(F, m * k * p);
  L.then_outer(cMN, 1, p).then_outer(inv, k, 1).then_outer(cNP, 1, m);
  MapChain R(F, m * k * p);
  R.then_outer(cNP, m, 1).then_outer(inv, 1, k).then_outer(cMN, p, 1);
  AxiomReport rep{"pseudosym(" + M.hopf->b.name + ", " + std::to_string(m) + "x" +
                      std::to_string(k) + "x" + std::to_string(p) + ")",
                  {}};
  rep.entries.push_back({"modified_braid", check_equal(L, R, opt)});
  return rep;
}

LRBimodule trivial_lr(std::shared_ptr<const HopfAlgebra> H, uint32_t m) {
  if (!H) fail(Errc::DimMismatch, "trivial_lr: missing algebra");
  const Bialgebra& B = H->b;
  const FieldSpec F = B.field;
  LinMap id = LinMap::identity(F, m);
  auto base = bialgebra_of(H);
  LRBimodule M;
  M.hopf = std::move(H);
  M.dim = m;
  M.lact = {Side::Left, base, m, kron(B.counit, id)};
  M.ract = {Side::Right, base, m, kron(id, B.counit)};
  M.lcoact = {Side::Left, base, m, kron(B.unit, id)};
  M.rcoact = {Side::Right, base, m, kron(id, B.unit)};
  return M;
}

LRBimodule standard_lr(std::shared_ptr<const HopfAlgebra> H, std::string_view which) {
  if (!H) fail(Errc::DimMismatch, "standard_lr: missing algebra");
  const Bialgebra& B = H->b;
  const FieldSpec F = B.field;
  const uint32_t n = B.dim;
  if (which == "trivial") return trivial_lr(std::move(H), 1);
  if (which == "left_adjoint") {
    MapChain la(F, uint64_t(n) * n);
    la.then(own(B.comult), 1, n);                      // h1 h2 m
    la.then(own(perm(F, {n, n, n}, {0, 2, 1})));       // h1 m h2
    la.then(own(H->antipode), uint64_t(n) * n, 1);     // h1 m S(h2)
    la.then(own(B.mult), n, 1);                        // h1 mS(h2)
    la.then(own(B.mult));
    LRBimodule M = trivial_lr(H, n);
    M.lact.map = realize(la);
    M.lcoact.map = B.comult;
    return M;
  }
  if (which == "right_adjoint") {
    MapChain ra(F, uint64_t(n) * n);
    ra.then(own(B.comult), n, 1);                      // m h1 h2
    ra.then(own(perm(F, {n, n, n}, {1, 0, 2})));       // h1 m h2
    ra.then(own(H->antipode), 1, uint64_t(n) * n);     // S(h1) m h2
    ra.then(own(B.mult), 1, n);                        // S(h1)m h2
    ra.then(own(B.mult));
    LRBimodule M = trivial_lr(H, n);
    M.ract.map = realize(ra);
    M.rcoact.map = B.comult;
    return M;
  }
  if (which == "from_double_regular") {
    auto env = std::make_shared<const HopfAlgebra>(tensor_square(std::move(H)));
    return functor_G(regular_double_yd(env));
  }
  fail(Errc::Usage, "standard_lr: unknown object '" + std::string(which) + "'");
}

}  // namespace hsc
