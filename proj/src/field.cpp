#include "hsc/field.hpp"

#include "hsc/error.hpp"

namespace hsc {

std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::ParseError: return "PARSE_ERROR";
    case Errc::RangeError: return "RANGE_ERROR";
    case Errc::FieldError: return "FIELD_ERROR";
    case Errc::DimMismatch: return "DIM_MISMATCH";
    case Errc::SingularAntipode: return "SINGULAR_ANTIPODE";
    case Errc::BaseNotTensorSquare: return "BASE_NOT_TENSOR_SQUARE";
    case Errc::ConventionMismatch: return "CONVENTION_MISMATCH";
    case Errc::Usage: return "USAGE";
  }
  return "ERROR";
}

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

// Deterministic Miller-Rabin; this base set decides primality for all n < 2^64.
bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                     23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                     23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(uint64_t p) {
  if (p >= (1ull << 62))
    fail(Errc::FieldError, "characteristic too large: " + std::to_string(p));
  if (!is_prime_u64(p))
    fail(Errc::FieldError, "characteristic is not prime: " + std::to_string(p));
  return FieldSpec{FieldKind::PrimeField, p};
}

std::string FieldSpec::str() const {
  if (kind == FieldKind::Rationals) return "Q";
  return "GF(" + std::to_string(characteristic) + ")";
}

void require_same_field(const FieldSpec& a, const FieldSpec& b) {
  if (!(a == b))
    fail(Errc::FieldError, "field mismatch: " + a.str() + " vs " + b.str());
}

}  // namespace hsc
