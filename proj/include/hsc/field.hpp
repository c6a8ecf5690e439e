#ifndef HSC_FIELD_HPP
#define HSC_FIELD_HPP

#include <cstdint>
#include <string>

namespace hsc {

enum class FieldKind : uint8_t { Rationals, PrimeField };

// Ground field of a computation: the rationals or GF(p) for prime p.
// Every scalar container (LinMap, Bialgebra, modules) carries one FieldSpec;
// mixing fields is an error, never a silent coercion.
struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  uint64_t characteristic = 0;  // 0 for the rationals, p for GF(p)

  static FieldSpec rationals() { return FieldSpec{FieldKind::Rationals, 0}; }
  static FieldSpec prime(uint64_t p);  // validates primality

  bool operator==(const FieldSpec&) const = default;

  std::string str() const;  // "Q" or "GF(p)"
};

bool is_prime_u64(uint64_t n);

// Throws FieldError when a and b differ.
void require_same_field(const FieldSpec& a, const FieldSpec& b);

}  // namespace hsc

#endif
