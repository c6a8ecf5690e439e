#include "hsc/scalar.hpp"

#include <gmpxx.h>

#include <charconv>
#include <limits>
#include <numeric>

#include "hsc/error.hpp"

namespace hscimpl {
struct BigRat {
  mpq_class q;
};
}  // namespace hscimpl

namespace hsc {

using hscimpl::BigRat;
using i128 = __int128;
using u128 = unsigned __int128;

struct ScalarDetail {
  static Scalar make_small(int64_t n, int64_t d) { return Scalar(n, d); }

  static Scalar make_big(mpq_class q) {
    // Invariant: big storage is engaged only when the canonical value does
    // not fit in an int64 pair, so inline comparisons stay cheap.
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p())
      return Scalar(q.get_num().get_si(), q.get_den().get_si());
    Scalar s(0, 0);
    s.big_ = std::make_shared<const BigRat>(BigRat{std::move(q)});
    return s;
  }

  static mpq_class to_mpq(const Scalar& a) {
    if (a.big_) return a.big_->q;
    mpq_class q(static_cast<long>(a.num_), static_cast<long>(a.den_));
    // num/den are already coprime with positive den; no canonicalize needed,
    // but mpq_class(long, long) does not canonicalize on its own either.
    return q;
  }

  static const std::shared_ptr<const BigRat>& big(const Scalar& a) {
    return a.big_;
  }
};

namespace {

u128 abs128(i128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

u128 gcd128(u128 a, u128 b) {
  while (b) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits_i64(i128 v) {
  return v >= std::numeric_limits<int64_t>::min() &&
         v <= std::numeric_limits<int64_t>::max();
}

mpz_class mpz_from_i128(i128 v) {
  bool neg = v < 0;
  u128 u = abs128(v);
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class lo(static_cast<unsigned long>(u & 0xffffffffffffffffull));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

// Reduces n/d (d > 0 expected nonzero) and returns the canonical scalar,
// promoting when the reduced pair does not fit.
Scalar reduce128(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Scalar::zero();
  u128 g = gcd128(abs128(n), u128(d));
  i128 rn = n / i128(g);
  i128 rd = d / i128(g);
  if (fits_i64(rn) && fits_i64(rd))
    return ScalarDetail::make_small(int64_t(rn), int64_t(rd));
  mpz_class zn = mpz_from_i128(rn), zd = mpz_from_i128(rd);
  mpq_class q;
  mpq_set_num(q.get_mpq_t(), zn.get_mpz_t());
  mpq_set_den(q.get_mpq_t(), zd.get_mpz_t());
  return ScalarDetail::make_big(std::move(q));
}

Scalar from_mpq(mpq_class q) {
  mpq_canonicalize(q.get_mpq_t());
  return ScalarDetail::make_big(std::move(q));
}

uint64_t gf_normalize(int64_t v, uint64_t p) {
  int64_t r = v % int64_t(p);
  if (r < 0) r += int64_t(p);
  return uint64_t(r);
}

uint64_t gf_of(const Scalar& a) { return uint64_t(a.small_num()); }

}  // namespace

uint64_t mod_inverse(uint64_t a, uint64_t p) {
  if (a == 0) fail(Errc::FieldError, "division by zero in GF(p)");
  // Extended Euclid on (a, p); p prime so the gcd is 1.
  int64_t t = 0, new_t = 1;
  int64_t r = int64_t(p), new_r = int64_t(a % p);
  while (new_r != 0) {
    int64_t q = r / new_r;
    int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) fail(Errc::FieldError, "residue not invertible");
  if (t < 0) t += int64_t(p);
  return uint64_t(t);
}

Scalar Scalar::from_int(const FieldSpec& F, int64_t v) {
  if (F.kind == FieldKind::PrimeField)
    return ScalarDetail::make_small(int64_t(gf_normalize(v, F.characteristic)), 1);
  return ScalarDetail::make_small(v, 1);
}

Scalar Scalar::from_fraction(const FieldSpec& F, int64_t n, int64_t d) {
  if (F.kind != FieldKind::Rationals)
    fail(Errc::FieldError, "fractions require the rational field");
  if (d == 0) fail(Errc::FieldError, "zero denominator");
  return reduce128(i128(n), i128(d));
}

bool Scalar::operator==(const Scalar& o) const {
  if (big_ || o.big_) {
    if (!big_ || !o.big_) return false;  // canonical: big iff out of range
    return mpq_cmp(big_->q.get_mpq_t(), o.big_->q.get_mpq_t()) == 0;
  }
  return num_ == o.num_ && den_ == o.den_;
}

Scalar s_add(const FieldSpec& F, const Scalar& a, const Scalar& b) {
  if (F.kind == FieldKind::PrimeField) {
    uint64_t p = F.characteristic;
    uint64_t s = gf_of(a) + gf_of(b);
    if (s >= p) s -= p;
    return ScalarDetail::make_small(int64_t(s), 1);
  }
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    i128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
    i128 d = i128(a.den_) * b.den_;
    return reduce128(n, d);
  }
  return from_mpq(ScalarDetail::to_mpq(a) + ScalarDetail::to_mpq(b));
}

Scalar s_sub(const FieldSpec& F, const Scalar& a, const Scalar& b) {
  return s_add(F, a, s_neg(F, b));
}

Scalar s_neg(const FieldSpec& F, const Scalar& a) {
  if (F.kind == FieldKind::PrimeField) {
    uint64_t v = gf_of(a);
    return ScalarDetail::make_small(
        int64_t(v == 0 ? 0 : F.characteristic - v), 1);
  }
  if (!a.big_) {
    if (a.num_ == std::numeric_limits<int64_t>::min())
      return reduce128(-i128(a.num_), i128(a.den_));
    return ScalarDetail::make_small(-a.num_, a.den_);
  }
  return from_mpq(-ScalarDetail::to_mpq(a));
}

Scalar s_mul(const FieldSpec& F, const Scalar& a, const Scalar& b) {
  if (F.kind == FieldKind::PrimeField) {
    uint64_t p = F.characteristic;
    uint64_t r = uint64_t(u128(gf_of(a)) * gf_of(b) % p);
    return ScalarDetail::make_small(int64_t(r), 1);
  }
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Scalar::zero();
    i128 n = i128(a.num_) * b.num_;
    i128 d = i128(a.den_) * b.den_;
    return reduce128(n, d);
  }
  return from_mpq(ScalarDetail::to_mpq(a) * ScalarDetail::to_mpq(b));
}

Scalar s_inv(const FieldSpec& F, const Scalar& a) {
  if (a.is_zero()) fail(Errc::FieldError, "division by zero");
  if (F.kind == FieldKind::PrimeField)
    return ScalarDetail::make_small(
        int64_t(mod_inverse(gf_of(a), F.characteristic)), 1);
  if (!a.big_) {
    int64_t n = a.num_, d = a.den_;
    if (n < 0) return reduce128(-i128(d), -i128(n));
    return ScalarDetail::make_small(d, n);
  }
  return from_mpq(1 / ScalarDetail::to_mpq(a));
}

Scalar s_div(const FieldSpec& F, const Scalar& a, const Scalar& b) {
  return s_mul(F, a, s_inv(F, b));
}

std::string s_str(const FieldSpec& F, const Scalar& a) {
  if (F.kind == FieldKind::PrimeField) return std::to_string(gf_of(a));
  if (!ScalarDetail::big(a)) {
    std::string s = std::to_string(a.small_num());
    if (a.small_den() != 1) s += "/" + std::to_string(a.small_den());
    return s;
  }
  return ScalarDetail::to_mpq(a).get_str();
}

Scalar s_parse(const FieldSpec& F, std::string_view text) {
  if (text.empty()) fail(Errc::ParseError, "empty scalar");
  if (F.kind == FieldKind::PrimeField) {
    uint64_t v = 0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || p != text.data() + text.size())
      fail(Errc::ParseError, "bad GF residue '" + std::string(text) + "'");
    if (v >= F.characteristic)
      fail(Errc::RangeError, "residue " + std::to_string(v) +
                                 " outside [0, " +
                                 std::to_string(F.characteristic) + ")");
    return ScalarDetail::make_small(int64_t(v), 1);
  }

  size_t slash = text.find('/');
  std::string_view ns = text.substr(0, slash);
  std::string_view ds =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (ns.empty() || ds.empty())
    fail(Errc::ParseError, "bad rational '" + std::string(text) + "'");

  auto digits_ok = [](std::string_view s, bool sign) {
    size_t i = (sign && s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (!digits_ok(ns, true) || !digits_ok(ds, false))
    fail(Errc::ParseError, "bad rational '" + std::string(text) + "'");

  int64_t n = 0, d = 1;
  auto [np, nec] = std::from_chars(ns.data(), ns.data() + ns.size(), n);
  bool n_small = nec == std::errc() && np == ns.data() + ns.size();
  auto [dp, dec] = std::from_chars(ds.data(), ds.data() + ds.size(), d);
  bool d_small = dec == std::errc() && dp == ds.data() + ds.size();
  if (n_small && d_small) {
    if (d == 0) fail(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
    return reduce128(i128(n), i128(d));
  }
  // Out-of-range literals go through arbitrary precision.
  try {
    mpq_class q(std::string(ns) + "/" + std::string(ds));
    if (q.get_den() == 0)
      fail(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
    mpq_canonicalize(q.get_mpq_t());
    return ScalarDetail::make_big(std::move(q));
  } catch (const std::invalid_argument&) {
    fail(Errc::ParseError, "bad rational '" + std::string(text) + "'");
  }
}

}  // namespace hsc
