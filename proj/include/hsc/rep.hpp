#ifndef HSC_REP_HPP
#define HSC_REP_HPP

#include <memory>

#include "hsc/bialgebra.hpp"
#include "hsc/chain.hpp"
#include "hsc/report.hpp"

namespace hsc {

// Materializes when affordable, otherwise wraps the chain as a deferred map.
LinMap realize(const MapChain& c, uint64_t limit = kMaterializeLimit);

enum class Side { Left, Right };

// An algebra acting on an m-dimensional space. Left maps are n*m -> m
// realizing h (x) v -> h.v; right maps are m*n -> m realizing v (x) h -> v.h.
struct ActionStructure {
  Side side = Side::Left;
  std::shared_ptr<const Bialgebra> algebra;
  uint64_t dim = 0;
  LinMap map;
};

// A coalgebra coacting on an m-dimensional space. Left maps are m -> n*m
// (v -> v_(-1) (x) v_(0)); right maps are m -> m*n (v -> v_<0> (x) v_<1>).
struct CoactionStructure {
  Side side = Side::Left;
  std::shared_ptr<const Bialgebra> algebra;
  uint64_t dim = 0;
  LinMap map;
};

// Left module plus left comodule over one bialgebra, intended to satisfy the
// Yetter-Drinfeld compatibility (checked by check_yd, never assumed).
struct YDModule {
  std::shared_ptr<const Bialgebra> algebra;
  uint64_t dim = 0;
  ActionStructure action;      // Side::Left
  CoactionStructure coaction;  // Side::Left
};

// Views the bialgebra inside a shared Hopf algebra without copying it.
std::shared_ptr<const Bialgebra> bialgebra_of(std::shared_ptr<const HopfAlgebra> H);

// {assoc_action, unit_action} (mirrored laws for Side::Right).
AxiomReport check_action(const ActionStructure& a, const CheckOptions& opt = {});

// {coassoc_coaction, counit_coaction} (mirrored for Side::Right).
AxiomReport check_coaction(const CoactionStructure& c, const CheckOptions& opt = {});

// {module, comodule, yd_compat}; yd_compat compares the two n*m -> n*m maps
//   (b1.m)_(-1) b2 (x) (b1.m)_(0)  =  b1 m_(-1) (x) b2.m_(0).
AxiomReport check_yd(const YDModule& M, const CheckOptions& opt = {});

// Diagonal action b.(m (x) n) = b1.m (x) b2.n and codiagonal coaction
// m_(-1) n_(-1) (x) m_(0) (x) n_(0).
YDModule yd_tensor(const YDModule& M, const YDModule& N);

// c(m (x) n) = m_(-1).n (x) m_(0), as a map M (x) N -> N (x) M.
LinMap yd_braiding(const YDModule& M, const YDModule& N);
MapChain yd_braiding_chain(const YDModule& M, const YDModule& N);

// {linear, colinear} for f: M -> N over the same algebra.
AxiomReport check_intertwiner(const LinMap& f, const YDModule& M, const YDModule& N,
                              const CheckOptions& opt = {});

// Action by the counit and coaction by the unit on an m-dimensional space.
YDModule trivial_yd(std::shared_ptr<const Bialgebra> B, uint32_t m = 1);

// Adjoint action h.m = h1 m S(h2) with the regular coaction; the canonical
// YD module of a Hopf algebra on itself.
YDModule adjoint_yd(std::shared_ptr<const HopfAlgebra> H);

// Internal building blocks shared with the bimodule layer: each law as a
// pair of chains ready for check_equal.
struct ChainPair {
  MapChain lhs, rhs;
};
ChainPair action_assoc_chains(const ActionStructure& a);
ChainPair action_unit_chains(const ActionStructure& a);
ChainPair coaction_coassoc_chains(const CoactionStructure& c);
ChainPair coaction_counit_chains(const CoactionStructure& c);

// Merges per-law results into one entry (first failure wins, counts add).
CheckResult merge_results(std::initializer_list<CheckResult> rs);

// Throws unless both structures live over entrywise-equal bialgebras.
void require_same_base(const std::shared_ptr<const Bialgebra>& a,
                       const std::shared_ptr<const Bialgebra>& b, const char* what);

}  // namespace hsc

#endif
