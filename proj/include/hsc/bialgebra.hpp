#ifndef HSC_BIALGEBRA_HPP
#define HSC_BIALGEBRA_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hsc/linmap.hpp"
#include "hsc/report.hpp"

namespace hsc {

struct HopfAlgebra;

// Provenance tag: this algebra was built as H (x) H^op-dual by
// tensor_square(H). The LR-side functor that needs to split the base into
// its two factors requires the tag; structural detection is deliberately
// not attempted.
struct TensorSquareInfo {
  std::shared_ptr<const HopfAlgebra> factor;
};

// A finite-dimensional bialgebra over FieldSpec, given entirely by structure
// constants. The canonical dual basis is implicit: coordinate functionals in
// the stored basis, so dual structures are literal matrix transposes.
struct Bialgebra {
  FieldSpec field;
  uint32_t dim = 0;
  std::string name;
  std::vector<std::string> labels;
  LinMap mult;    // n*n -> n
  LinMap unit;    // 1 -> n
  LinMap comult;  // n -> n*n
  LinMap counit;  // n -> 1
  std::shared_ptr<const TensorSquareInfo> tensor_square;
};

struct HopfAlgebra {
  Bialgebra b;
  LinMap antipode;                   // n -> n
  std::optional<LinMap> antipode_inv;

  const LinMap& antipode_inverse() const;  // throws SingularAntipode if absent
};

// Throws DimMismatch unless all four structure maps have the right shapes
// over one field and the labels match the dimension.
void require_valid_shape(const Bialgebra& B);

// The ten bialgebra identities: {assoc, unit_l, unit_r, coassoc, counit_l,
// counit_r, delta_mult, delta_unit, eps_mult, eps_unit}.
AxiomReport check_bialgebra(const Bialgebra& B, const CheckOptions& opt = {});

// Solves mult o (S (x) id) o comult = unit o counit for S as a linear system
// in the n^2 entries, then verifies the mirrored identity; nullopt when the
// system is unsolvable or the mirror check fails (B is not Hopf).
std::optional<LinMap> compute_antipode(const Bialgebra& B);

// Exact inverse of the antipode; throws SingularAntipode when singular.
HopfAlgebra invert_antipode(HopfAlgebra H);

// compute_antipode + invert_antipode packaged; nullopt when not Hopf.
std::optional<HopfAlgebra> try_hopf(Bialgebra B);

// check_bialgebra entries plus {antipode_l, antipode_r} and, when the
// inverse is stored, {antipode_inv_l, antipode_inv_r}.
AxiomReport check_hopf(const HopfAlgebra& H, const CheckOptions& opt = {});

// The dual bialgebra on the canonical dual basis: mult and comult swap
// under transpose, unit and counit likewise. Labels gain a "d_" prefix.
Bialgebra dual_bialgebra(const Bialgebra& B);
HopfAlgebra dual_hopf(const HopfAlgebra& H);

// Componentwise tensor product with the middle flip in mult and comult;
// basis e_i (x) e_j at index i*dim2 + j.
Bialgebra tensor_bialgebra(const Bialgebra& A, const Bialgebra& B);
HopfAlgebra tensor_hopf(const HopfAlgebra& A, const HopfAlgebra& B);

// H (x) H* with the provenance tag set; the argument is shared so the tag
// can refer back to it.
HopfAlgebra tensor_square(std::shared_ptr<const HopfAlgebra> H);

struct CommFlags {
  bool commutative;
  bool cocommutative;
};
CommFlags commutativity_flags(const Bialgebra& B);

}  // namespace hsc

#endif
