#ifndef HSC_HSCFMT_HPP
#define HSC_HSCFMT_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hsc/bialgebra.hpp"
#include "hsc/lr.hpp"
#include "hsc/rep.hpp"

namespace hsc {

// The HSC text format. Line-oriented, bit-exact, diffable:
//
//   hsc 1 algebra               (or: hsc 1 module lr | hsc 1 module yd)
//   # name: sweedler_q          (optional; other # lines are free comments)
//   field Q                     (or: field GF <p>)
//   dim 4                       (modules declare algdim, dim, algebra <ref>)
//   labels 1 g x gx             (optional; exactly dim whitespace-free names)
//   MULT
//   0 0 0 1
//   ...
//
// Sections hold one entry per line: the section's indices followed by a
// scalar in canonical text form ("n", "n/d", or a GF(p) residue). Omitted
// entries are zero. Index semantics, with e_* the algebra basis and m_* the
// module basis:
//
//   MULT    i j k v   e_i e_j         has coefficient v on e_k
//   UNIT    k v       1               has coefficient v on e_k
//   COMULT  i j k v   comult(e_i)     has coefficient v on e_j (x) e_k
//   COUNIT  i v       counit(e_i) = v
//   ANTIPODE i j v    S(e_i)          has coefficient v on e_j
//   LACT    i j k v   e_i . m_j       has coefficient v on m_k
//   RACT    i j k v   m_i . e_j       has coefficient v on m_k
//   LCOACT  i j k v   lcoact(m_i)     has coefficient v on e_j (x) m_k
//   RCOACT  i j k v   rcoact(m_i)     has coefficient v on m_j (x) e_k
//   ACT, COACT        as LACT, LCOACT (yd modules)
//
// ANTIPODE is optional; every other section for the document's kind must be
// present (possibly empty). Algebra documents carry MULT..ANTIPODE, lr
// modules LACT..RCOACT, yd modules ACT and COACT. A module's `algebra` line
// names its base algebra: either a file path or the 16-hex-digit digest of
// the base's canonical emission.

enum class HscKind { Algebra, ModuleLR, ModuleYD };

// One section line: up to three zero-based indices and a scalar. Unused
// trailing index slots stay zero (UNIT and COUNIT use i only, ANTIPODE i, j).
struct HscEntry {
  uint32_t i = 0;
  uint32_t j = 0;
  uint32_t k = 0;
  Scalar v;
};

struct HscSection {
  std::string name;
  std::vector<HscEntry> entries;
};

// A parsed (or to-be-emitted) document. Parsing validates structure only:
// the format, section names for the kind, entry arity, index ranges, and
// duplicate entries. Whether the data satisfies any algebraic law is the
// business of the check_* functions.
struct HscDocument {
  HscKind kind = HscKind::Algebra;
  FieldSpec field;
  std::string name;         // from the "# name:" header comment; may be empty
  uint32_t algdim = 0;      // modules only: base algebra dimension
  uint32_t dim = 0;
  std::string algebra_ref;  // modules only: path or digest of the base
  std::vector<std::string> labels;
  std::vector<HscSection> sections;
};

// Throws ParseError / RangeError / FieldError with a "line N:" prefix.
HscDocument parse_hsc(std::string_view text);

// Canonical emission: fixed header order, sections in declaration order,
// entries sorted by index. emit_hsc(parse_hsc(t)) == t whenever t itself is
// canonical, and parse_hsc(emit_hsc(d)) reproduces d's content exactly.
std::string emit_hsc(const HscDocument& doc);

// Structural validation of an in-memory document (same rules as parse_hsc
// minus line numbers). Called by the converters below.
void validate_document(const HscDocument& doc);

// FNV-1a over the given bytes, and its 16-digit lowercase hex form.
uint64_t fnv1a64(std::string_view bytes);
std::string digest_hex(std::string_view bytes);

// Digest of the algebra's canonical emission; what module documents carry
// in `algebra` when they reference a base by digest rather than by path.
std::string algebra_digest(const HopfAlgebra& H);

HscDocument doc_from_bialgebra(const Bialgebra& B);
HscDocument doc_from_hopf(const HopfAlgebra& H);
HscDocument doc_from_lr(const LRBimodule& M, std::string algebra_ref,
                        std::string name = {});
HscDocument doc_from_yd(const YDModule& M, std::string algebra_ref,
                        std::string name = {});

// Documents without a labels line get synthesized labels e0, e1, ...
Bialgebra doc_to_bialgebra(const HscDocument& doc);

// Uses the ANTIPODE section when present (inverting it if possible);
// otherwise computes the antipode, failing with SingularAntipode when the
// underlying bialgebra is not Hopf.
HopfAlgebra doc_to_hopf(const HscDocument& doc);

// The base algebra is supplied by the caller; its field and dimension must
// match the document's declarations. The `algebra` reference is not
// resolved here (the command layer decides how to interpret paths/digests).
LRBimodule doc_to_lr(const HscDocument& doc, std::shared_ptr<const HopfAlgebra> H);
YDModule doc_to_yd(const HscDocument& doc, std::shared_ptr<const Bialgebra> B);

}  // namespace hsc

#endif
