#ifndef HSC_SCALAR_HPP
#define HSC_SCALAR_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "hsc/field.hpp"

namespace hscimpl {
struct BigRat;  // wraps an mpq; kept out of the public header
}

namespace hsc {

// Exact field element.
//
// Rationals: canonical num/den with den > 0 and gcd(num, den) = 1. Values
// that fit in a signed 64-bit pair live inline; anything larger is promoted
// to an arbitrary-precision rational behind a shared pointer. The inline
// fast path is what keeps large structure-constant computations affordable;
// promotion preserves exactness for arbitrary inputs.
//
// GF(p): the residue in [0, p) is stored in num_ with den_ = 1. The modulus
// is not stored per scalar; all arithmetic goes through the free functions
// below, which take the FieldSpec.
class Scalar {
 public:
  Scalar() : num_(0), den_(1) {}

  static Scalar from_int(const FieldSpec& F, int64_t v);
  // Rational n/d (canonicalized); FieldSpec must be rationals.
  static Scalar from_fraction(const FieldSpec& F, int64_t n, int64_t d);
  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(1, 1); }

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Accessors used by tests and serialization; valid only while the value
  // fits inline (never engaged for GF scalars, which always fit).
  bool fits_small() const { return !big_; }
  int64_t small_num() const { return num_; }
  int64_t small_den() const { return den_; }

 private:
  Scalar(int64_t n, int64_t d) : num_(n), den_(d) {}

  int64_t num_;
  int64_t den_;
  std::shared_ptr<const hscimpl::BigRat> big_;

  friend Scalar s_add(const FieldSpec&, const Scalar&, const Scalar&);
  friend Scalar s_sub(const FieldSpec&, const Scalar&, const Scalar&);
  friend Scalar s_mul(const FieldSpec&, const Scalar&, const Scalar&);
  friend Scalar s_div(const FieldSpec&, const Scalar&, const Scalar&);
  friend Scalar s_neg(const FieldSpec&, const Scalar&);
  friend Scalar s_inv(const FieldSpec&, const Scalar&);
  friend std::string s_str(const FieldSpec&, const Scalar&);
  friend Scalar s_parse(const FieldSpec&, std::string_view);
  friend struct ScalarDetail;
};

Scalar s_add(const FieldSpec& F, const Scalar& a, const Scalar& b);
Scalar s_sub(const FieldSpec& F, const Scalar& a, const Scalar& b);
Scalar s_mul(const FieldSpec& F, const Scalar& a, const Scalar& b);
Scalar s_div(const FieldSpec& F, const Scalar& a, const Scalar& b);
Scalar s_neg(const FieldSpec& F, const Scalar& a);
Scalar s_inv(const FieldSpec& F, const Scalar& a);

// Canonical text form: rationals as "n" or "n/d" (d > 1), GF(p) residues as
// plain decimal in [0, p).
std::string s_str(const FieldSpec& F, const Scalar& a);

// Parses the canonical forms. Rationals additionally accept non-reduced
// "n/d" with d > 0 and canonicalize. GF(p) requires a residue in [0, p).
Scalar s_parse(const FieldSpec& F, std::string_view text);

// Modular inverse in [0, p) via the extended Euclidean algorithm.
uint64_t mod_inverse(uint64_t a, uint64_t p);

}  // namespace hsc

#endif
