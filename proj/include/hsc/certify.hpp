#ifndef HSC_CERTIFY_HPP
#define HSC_CERTIFY_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hsc/double.hpp"
#include "hsc/lr.hpp"
#include "hsc/report.hpp"

namespace hsc {

inline constexpr std::string_view kToolVersion = "0.1.0";

// One built-in bimodule with its registry name.
struct NamedLR {
  std::string name;
  LRBimodule object;
};

// The standard object family over one Hopf algebra, together with the
// machinery behind its largest member: the tensor-square base, its Drinfeld
// double, and the double's regular representation read back as a
// Yetter-Drinfeld module. Building these once and sharing them matters; the
// regular object over a dimension-n algebra lives in dimension n^4.
struct BuiltinFamily {
  std::shared_ptr<const HopfAlgebra> env;  // H (x) H*
  std::optional<DrinfeldDouble> denv;      // D(H (x) H*)
  std::optional<YDModule> regular;         // its regular module, as YD
  std::vector<NamedLR> objects;  // trivial, left_adjoint, right_adjoint,
                                 // from_double_regular (when included)
};

BuiltinFamily builtin_lr_family(std::shared_ptr<const HopfAlgebra> H,
                                const CheckOptions& opt,
                                bool include_double_regular = true);

struct CertifyOptions {
  CheckOptions check;

  // Pairwise and triple suites skip combinations whose flattened dimension
  // product exceeds these; everything below runs (exhaustively when the
  // domain fits full_limit, by seeded sampling otherwise).
  uint64_t pair_dim_cap = uint64_t(1) << 16;
  uint64_t triple_dim_cap = uint64_t(1) << 24;

  // Objects larger than big_dim get their sampled checks thinned to keep
  // the suite interactive; exact full scans are unaffected.
  uint64_t big_dim = 512;
  uint32_t big_samples = 256;
  uint64_t big_full_limit = 4096;

  bool include_double_regular = true;

  CheckOptions sized(uint64_t dim) const {
    CheckOptions o = check;
    if (dim > big_dim) {
      o.samples = big_samples;
      o.full_limit = big_full_limit;
    }
    return o;
  }
};

// The pseudosymmetry cross-validation: the commutativity criterion on one
// side, the modified braid relation evaluated on a fixed family of test
// triples on the other. agreement means a true criterion saw every triple
// pass and a false criterion saw at least one fail; counterexample names
// the first failing triple.
struct PseudosymFinding {
  bool criterion = false;
  bool agreement = false;
  std::string counterexample;            // "(a,b,c)" or empty
  std::optional<CheckResult> failure;    // result of the first failing triple
  std::vector<std::string> tested;       // triple names, in evaluation order
};

PseudosymFinding pseudosym_survey(const std::shared_ptr<const HopfAlgebra>& H,
                                  const BuiltinFamily& family,
                                  const CertifyOptions& opt);

// The full identification suite for one Hopf algebra: Hopf laws, the axiom
// checks and functor images of every built-in object, both round trips,
// monoidality and braiding transport on object pairs, braiding inverses,
// braid relations on capped triples, naturality, the Drinfeld double of the
// tensor square with the module identification, and the pseudosymmetry
// survey. overall() is the conjunction of every line.
CheckSummary certify_hopf(std::shared_ptr<const HopfAlgebra> H,
                          const CertifyOptions& opt = {});

}  // namespace hsc

#endif
