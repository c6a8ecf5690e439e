#ifndef HSC_CHAIN_HPP
#define HSC_CHAIN_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hsc/linmap.hpp"

namespace hsc {

std::shared_ptr<const LinMap> own(LinMap&& m);
std::shared_ptr<const LinMap> own(const LinMap& m);

// Composite of sandwiched maps id_dl (x) f (x) id_dr, applied stage by
// stage to sparse vectors. Domains are virtual: a chain over a 6561^2-
// dimensional space costs nothing until a column is requested, so identity
// checks on huge tensor powers stay affordable (and samplable).
class MapChain {
 public:
  struct Layer {
    uint64_t dl, dr;
    std::shared_ptr<const LinMap> map;
  };

  MapChain(FieldSpec F, uint64_t dom) : field_(F), dom_(dom), cod_(dom) {}
  static MapChain of(std::shared_ptr<const LinMap> m);
  static MapChain of(const LinMap& m) { return of(own(m)); }

  const FieldSpec& field() const { return field_; }
  uint64_t dom() const { return dom_; }
  uint64_t cod() const { return cod_; }
  const std::vector<Layer>& layers() const { return layers_; }

  // Appends id_dl (x) m (x) id_dr as the next stage (applied after the
  // stages already present). dl * m.cols * dr must match the codomain.
  MapChain& then(std::shared_ptr<const LinMap> m, uint64_t dl = 1, uint64_t dr = 1);
  MapChain& then(const LinMap& m, uint64_t dl = 1, uint64_t dr = 1) {
    return then(own(m), dl, dr);
  }
  // Appends every stage of c.
  MapChain& then(const MapChain& c);
  // Appends c lifted to id_dl (x) c (x) id_dr.
  MapChain& then_outer(const MapChain& c, uint64_t dl, uint64_t dr);

  SparseVec apply(SparseVec v) const;
  SparseVec column(uint64_t j) const { return apply(basis_vec(j)); }
  LinMap materialize() const;

 private:
  FieldSpec field_;
  uint64_t dom_, cod_;
  std::vector<Layer> layers_;
};

// A (x) B as a chain: applies A on the left block, then B on the right.
MapChain tensor_chain(const MapChain& A, const MapChain& B);

struct CheckOptions {
  uint64_t seed = 0x68736331;  // default base seed; CLI --seed overrides
  uint32_t samples = 1024;     // columns drawn when sampling
  uint64_t full_limit = 65536; // largest domain still scanned exhaustively
};

struct Witness {
  uint64_t row = 0, col = 0;
  std::string lhs, rhs;
};

struct CheckResult {
  bool passed = true;
  bool sampled = false;
  uint64_t columns_checked = 0;
  std::optional<Witness> witness;
};

// Entrywise equality of two composites with the same shape. Domains at most
// full_limit are scanned column by column and a failure is reported at the
// row-major-least coordinate; larger domains are probed on columns drawn
// from a seeded generator, and a failure reports the first bad draw.
CheckResult check_equal(const MapChain& L, const MapChain& R, const CheckOptions& opt);

}  // namespace hsc

#endif
