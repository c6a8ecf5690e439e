#include "hsc/certify.hpp"

#include <array>
#include <utility>

#include "hsc/error.hpp"
#include "hsc/hscfmt.hpp"

namespace hsc {

namespace {

CheckResult maps_equal(const LinMap& A, const LinMap& B, const CheckOptions& opt) {
  return check_equal(MapChain::of(A), MapChain::of(B), opt);
}

AxiomReport relabel(AxiomReport rep, std::string subject) {
  rep.subject = std::move(subject);
  return rep;
}

const LRBimodule* find_object(const BuiltinFamily& fam, std::string_view name) {
  for (const auto& o : fam.objects)
    if (o.name == name) return &o.object;
  return nullptr;
}

}  // namespace

BuiltinFamily builtin_lr_family(std::shared_ptr<const HopfAlgebra> H,
                                const CheckOptions& opt,
                                bool include_double_regular) {
  BuiltinFamily fam;
  fam.objects.push_back({"trivial", standard_lr(H, "trivial")});
  fam.objects.push_back({"left_adjoint", standard_lr(H, "left_adjoint")});
  fam.objects.push_back({"right_adjoint", standard_lr(H, "right_adjoint")});
  fam.env = std::make_shared<const HopfAlgebra>(tensor_square(H));
  if (include_double_regular) {
    fam.denv = drinfeld_double(fam.env, opt);
    YDModule reg = double_module_to_yd(regular_double_module(*fam.denv));
    fam.objects.push_back({"from_double_regular", functor_G(reg)});
    fam.regular = std::move(reg);
  }
  return fam;
}

PseudosymFinding pseudosym_survey(const std::shared_ptr<const HopfAlgebra>& H,
                                  const BuiltinFamily& fam,
                                  const CertifyOptions& opt) {
  PseudosymFinding out;
  out.criterion = pseudosym_criterion(H->b);

  const LRBimodule* la = find_object(fam, "left_adjoint");
  const LRBimodule* ra = find_object(fam, "right_adjoint");
  const LRBimodule* fdr = find_object(fam, "from_double_regular");
  if (!la || !ra) fail(Errc::Usage, "pseudosym survey needs the adjoint objects");

  std::vector<std::pair<std::string, std::array<const LRBimodule*, 3>>> triples;
  const std::pair<const char*, const LRBimodule*> adj[2] = {{"left_adjoint", la},
                                                            {"right_adjoint", ra}};
  for (const auto& [an, a] : adj)
    for (const auto& [bn, b] : adj)
      for (const auto& [cn, c] : adj)
        triples.push_back({std::string("(") + an + "," + bn + "," + cn + ")",
                           {a, b, c}});
  if (fdr) {
    // Over a commutative algebra both adjoint actions collapse to the
    // counit and every adjoint braiding is the flip, so those triples can
    // never witness a failure. One copy of the regular double object is
    // still not enough: a single genuine action meets only flip crossings
    // and the relation holds trivially. Two copies make the obstruction
    // visible, so the patterns run through every placement of one and two
    // copies plus the all-regular triple.
    const std::pair<const char*, const LRBimodule*> fd = {"from_double_regular",
                                                          fdr};
    const std::pair<const char*, const LRBimodule*> sl = {"left_adjoint", la};
    const std::array<std::array<const std::pair<const char*, const LRBimodule*>*, 3>,
                     7>
        pats = {{{&fd, &sl, &sl},
                 {&sl, &fd, &sl},
                 {&sl, &sl, &fd},
                 {&fd, &fd, &sl},
                 {&fd, &sl, &fd},
                 {&sl, &fd, &fd},
                 {&fd, &fd, &fd}}};
    for (const auto& p : pats)
      triples.push_back({std::string("(") + p[0]->first + "," + p[1]->first + "," +
                             p[2]->first + ")",
                         {p[0]->second, p[1]->second, p[2]->second}});
  }

  for (const auto& [name, t] : triples) {
    uint64_t prod = t[0]->dim * t[1]->dim * t[2]->dim;
    if (prod > opt.triple_dim_cap) continue;
    out.tested.push_back(name);
    AxiomReport rep = pseudosym_equation(*t[0], *t[1], *t[2], opt.sized(prod));
    const CheckResult& r = rep.entries.front().result;
    if (!r.passed && out.counterexample.empty()) {
      out.counterexample = name;
      out.failure = r;
    }
  }
  out.agreement = out.criterion == out.counterexample.empty();
  return out;
}

CheckSummary certify_hopf(std::shared_ptr<const HopfAlgebra> H,
                          const CertifyOptions& opt) {
  const std::string hn = H->b.name.empty() ? "algebra" : H->b.name;
  const uint32_t n = H->b.dim;
  const uint64_t n2 = uint64_t(n) * n;
  const uint64_t n4 = n2 * n2;

  CheckSummary S;
  S.version = std::string(kToolVersion);
  S.seed = opt.check.seed;
  S.samples = opt.check.samples;
  S.inputs = {{hn, algebra_digest(*H)}};

  S.reports.push_back(relabel(check_hopf(*H, opt.sized(n)), "hopf(" + hn + ")"));

  BuiltinFamily fam = builtin_lr_family(
      H, opt.sized(opt.include_double_regular ? n4 : n2),
      opt.include_double_regular);

  struct Obj {
    std::string name;
    const LRBimodule* M;
    YDModule F;
  };
  std::vector<Obj> objs;
  objs.reserve(fam.objects.size());
  for (const auto& o : fam.objects) {
    CheckOptions co = opt.sized(o.object.dim);
    S.reports.push_back(relabel(check_lr(o.object, co), "lr(" + o.name + ")"));
    YDModule FM = functor_F(o.object);
    S.reports.push_back(relabel(check_yd(FM, co), "yd_of(" + o.name + ")"));
    S.reports.push_back(
        relabel(check_roundtrip(o.object, FM, co), "roundtrip(" + o.name + ")"));
    objs.push_back({o.name, &o.object, std::move(FM)});
  }

  for (const auto& a : objs) {
    for (const auto& b : objs) {
      uint64_t prod = a.M->dim * b.M->dim;
      if (prod > opt.pair_dim_cap) continue;
      CheckOptions co = opt.sized(prod);
      std::string pr = "(" + a.name + "," + b.name + ")";
      S.reports.push_back(
          relabel(check_monoidal_F(*a.M, *b.M, co), "monoidal" + pr));
      S.reports.push_back(
          relabel(check_braiding_transport(*a.M, *b.M, co), "transport" + pr));
      S.reports.push_back(
          relabel(check_braiding_inverse(*a.M, *b.M, co), "braiding" + pr));
    }
  }

  for (const auto& a : objs) {
    for (const auto& b : objs) {
      for (const auto& c : objs) {
        uint64_t prod = a.M->dim * b.M->dim * c.M->dim;
        if (prod > opt.triple_dim_cap) continue;
        S.reports.push_back(relabel(
            check_braid_relation(*a.M, *b.M, *c.M, opt.sized(prod)),
            "braid(" + a.name + "," + b.name + "," + c.name + ")"));
      }
    }
  }

  {
    const LRBimodule& triv = *find_object(fam, "trivial");
    const LRBimodule& la = *find_object(fam, "left_adjoint");
    const LRBimodule& ra = *find_object(fam, "right_adjoint");
    CheckOptions co = opt.sized(la.dim * la.dim * ra.dim);
    S.reports.push_back(
        relabel(check_lr_morphism(H->b.unit, triv, la, co), "morphism(unit)"));
    AxiomReport nat;
    nat.subject = "naturality(" + hn + ")";
    LinMap idla = LinMap::identity(H->b.field, static_cast<uint32_t>(la.dim));
    nat.entries.push_back(
        {"identity",
         check_braiding_natural(idla, la, la, ra, co).entries.front().result});
    nat.entries.push_back(
        {"unit_morphism",
         check_braiding_natural(H->b.unit, triv, la, ra, co).entries.front().result});
    S.reports.push_back(std::move(nat));
  }

  {
    CheckOptions co = opt.sized(n2);
    DrinfeldDouble DH = drinfeld_double(H, co);
    S.reports.push_back(relabel(check_double(DH, co), "double(" + hn + ")"));
  }
  if (fam.denv) {
    S.reports.push_back(relabel(check_double(*fam.denv, opt.sized(n4)),
                                "double(" + fam.env->b.name + ")"));
    for (const auto& o : objs) {
      CheckOptions co = opt.sized(n4 * o.F.dim);
      DoubleModule V = yd_to_double_module(*fam.denv, o.F, co);
      S.reports.push_back(relabel(check_double_module(V, co), "dmod(" + o.name + ")"));
      YDModule back = double_module_to_yd(V);
      AxiomReport rt;
      rt.subject = "droundtrip(" + o.name + ")";
      rt.entries.push_back({"action_eq", maps_equal(back.action.map, o.F.action.map, co)});
      rt.entries.push_back(
          {"coaction_eq", maps_equal(back.coaction.map, o.F.coaction.map, co)});
      S.reports.push_back(std::move(rt));
    }
    {
      CheckOptions co = opt.sized(n4 * n4);
      DoubleModule V0 = regular_double_module(*fam.denv);
      DoubleModule V1 = yd_to_double_module(*fam.denv, *fam.regular, co);
      AxiomReport rr;
      rr.subject = "dregular(" + fam.env->b.name + ")";
      rr.entries.push_back(
          {"action_eq", maps_equal(V1.action.map, V0.action.map, co)});
      S.reports.push_back(std::move(rr));
    }
  }

  {
    PseudosymFinding P = pseudosym_survey(H, fam, opt);
    AxiomReport ps;
    ps.subject = "pseudosym(" + hn + ")";
    CheckResult res;
    res.passed = P.agreement;
    if (P.failure) {
      res.sampled = P.failure->sampled;
      if (!P.agreement) res.witness = P.failure->witness;
    }
    std::string entry = P.criterion
                            ? "criterion_true_equation_holds_on_all"
                            : (P.agreement ? "criterion_false_equation_fails_at" +
                                                 P.counterexample
                                           : "criterion_equation_disagreement");
    ps.entries.push_back({std::move(entry), std::move(res)});
    S.reports.push_back(std::move(ps));
  }

  return S;
}

}  // namespace hsc
