#include "hsc/zoo.hpp"

#include <array>
#include <functional>

#include "hsc/error.hpp"

namespace hsc {

namespace {

Scalar s_pow(const FieldSpec& F, const Scalar& s, uint32_t k) {
  Scalar r = Scalar::one();
  for (uint32_t t = 0; t < k; ++t) r = s_mul(F, r, s);
  return r;
}

void validate_group_table(const std::string& name,
                          const std::vector<std::vector<uint32_t>>& t) {
  const size_t n = t.size();
  if (n == 0) fail(Errc::RangeError, name + ": empty multiplication table");
  for (const auto& row : t) {
    if (row.size() != n) fail(Errc::RangeError, name + ": ragged multiplication table");
    for (uint32_t v : row)
      if (v >= n) fail(Errc::RangeError, name + ": table entry out of range");
  }
  for (size_t j = 0; j < n; ++j)
    if (t[0][j] != j || t[j][0] != j)
      fail(Errc::RangeError, name + ": index 0 is not an identity element");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        if (t[t[i][j]][k] != t[i][t[j][k]])
          fail(Errc::RangeError, name + ": table is not associative");
  for (size_t i = 0; i < n; ++i) {
    bool has_inverse = false;
    for (size_t j = 0; j < n && !has_inverse; ++j)
      has_inverse = t[i][j] == 0 && t[j][i] == 0;
    if (!has_inverse) fail(Errc::RangeError, name + ": element without inverse");
  }
}

// Multiplication map of H (x) H as a plain algebra (pair the factors,
// multiply componentwise). Used to compute comultiplications of the g,x
// presentations by multiplying out Delta(g)^i Delta(x)^j.
LinMap square_alg_mult(const FieldSpec& F, const LinMap& mult, uint32_t n) {
  LinMap regroup = LinMap::tensor_perm(F, {n, n, n, n}, {0, 2, 1, 3});
  return compose(kron(mult, mult), regroup);
}

SparseVec sparse_outer(const FieldSpec& F, const SparseVec& u, const SparseVec& w,
                       uint64_t wdim) {
  SparseVec r;
  r.reserve(u.size() * w.size());
  for (const auto& a : u)
    for (const auto& b : w) r.push_back(VEntry{a.idx * wdim + b.idx, s_mul(F, a.v, b.v)});
  return fold_sparse(F, std::move(r));
}

// Shared core of the {g, x | g^n = 1, x^n = 0, xg = omega gx} family; the
// basis layout differs between presentations, so the flat index of g^a x^b
// is a parameter.
HopfAlgebra gx_hopf(const FieldSpec& F, uint32_t n, const Scalar& omega,
                    const std::string& name, std::vector<std::string> labels,
                    const std::function<uint32_t(uint32_t, uint32_t)>& idx) {
  const uint32_t N = n * n;
  Bialgebra B;
  B.field = F;
  B.dim = N;
  B.name = name;
  B.labels = std::move(labels);
  B.mult = LinMap(F, N, uint32_t(N) * N);
  for (uint32_t a1 = 0; a1 < n; ++a1)
    for (uint32_t j1 = 0; j1 < n; ++j1)
      for (uint32_t a2 = 0; a2 < n; ++a2)
        for (uint32_t j2 = 0; j2 < n; ++j2) {
          if (j1 + j2 >= n) continue;
          Scalar c = s_pow(F, omega, (j1 * a2) % n);
          B.mult.set(idx((a1 + a2) % n, j1 + j2), idx(a1, j1) * N + idx(a2, j2), c);
        }
  B.unit = LinMap(F, N, 1);
  B.unit.set(idx(0, 0), 0, Scalar::one());
  B.counit = LinMap(F, 1, N);
  for (uint32_t a = 0; a < n; ++a) B.counit.set(0, idx(a, 0), Scalar::one());

  B.comult = LinMap(F, uint32_t(N) * N, N);
  LinMap sq = square_alg_mult(F, B.mult, N);
  SparseVec dg = {VEntry{uint64_t(idx(1, 0)) * N + idx(1, 0), Scalar::one()}};
  SparseVec dx = {VEntry{uint64_t(idx(0, 1)) * N + idx(0, 0), Scalar::one()},
                  VEntry{uint64_t(idx(1, 0)) * N + idx(0, 1), Scalar::one()}};
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t j = 0; j < n; ++j) {
      SparseVec v = {VEntry{uint64_t(idx(0, 0)) * N + idx(0, 0), Scalar::one()}};
      for (uint32_t t = 0; t < a; ++t) v = sq.apply(sparse_outer(F, v, dg, N * N));
      for (uint32_t t = 0; t < j; ++t) v = sq.apply(sparse_outer(F, v, dx, N * N));
      B.comult.set_col(idx(a, j), std::move(v));
    }

  auto H = try_hopf(std::move(B));
  if (!H) fail(Errc::FieldError, name + ": presentation does not yield an antipode");
  if (!H->antipode_inv) fail(Errc::SingularAntipode, name + ": antipode not invertible");
  return std::move(*H);
}

}  // namespace

HopfAlgebra group_algebra(const FieldSpec& F, const std::string& name,
                          const std::vector<std::string>& labels,
                          const std::vector<std::vector<uint32_t>>& table) {
  validate_group_table(name, table);
  const uint32_t n = static_cast<uint32_t>(table.size());
  if (labels.size() != n) fail(Errc::RangeError, name + ": label count");
  Bialgebra B;
  B.field = F;
  B.dim = n;
  B.name = name;
  B.labels = labels;
  B.mult = LinMap(F, n, n * n);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j) B.mult.set(table[i][j], i * n + j, Scalar::one());
  B.unit = LinMap(F, n, 1);
  B.unit.set(0, 0, Scalar::one());
  B.comult = LinMap(F, n * n, n);
  for (uint32_t i = 0; i < n; ++i) B.comult.set(i * n + i, i, Scalar::one());
  B.counit = LinMap(F, 1, n);
  for (uint32_t i = 0; i < n; ++i) B.counit.set(0, i, Scalar::one());
  LinMap S(F, n, n);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j)
      if (table[i][j] == 0) S.set(j, i, Scalar::one());
  HopfAlgebra H{std::move(B), std::move(S), std::nullopt};
  return invert_antipode(std::move(H));
}

HopfAlgebra cyclic_group_algebra(const FieldSpec& F, const std::string& name, uint32_t n) {
  if (n == 0) fail(Errc::RangeError, name + ": order must be positive");
  std::vector<std::vector<uint32_t>> table(n, std::vector<uint32_t>(n));
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (uint32_t i = 0; i < n; ++i)
    labels.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g" + std::to_string(i)));
  return group_algebra(F, name, labels, table);
}

HopfAlgebra symmetric3_algebra(const FieldSpec& F, const std::string& name) {
  using Perm = std::array<uint32_t, 3>;
  auto mul = [](const Perm& f, const Perm& g) {
    return Perm{f[g[0]], f[g[1]], f[g[2]]};
  };
  const Perm e{0, 1, 2}, a{1, 0, 2}, b{0, 2, 1};
  const std::vector<Perm> elems = {e, a, b, mul(a, b), mul(b, a), mul(a, mul(b, a))};
  const std::vector<std::string> labels = {"e", "a", "b", "ab", "ba", "aba"};
  auto find = [&](const Perm& p) -> uint32_t {
    for (uint32_t i = 0; i < elems.size(); ++i)
      if (elems[i] == p) return i;
    fail(Errc::RangeError, "permutation closure error");
  };
  std::vector<std::vector<uint32_t>> table(6, std::vector<uint32_t>(6));
  for (uint32_t i = 0; i < 6; ++i)
    for (uint32_t j = 0; j < 6; ++j) table[i][j] = find(mul(elems[i], elems[j]));
  return group_algebra(F, name, labels, table);
}

HopfAlgebra sweedler_hopf(const FieldSpec& F) {
  if (F.kind == FieldKind::PrimeField && F.characteristic == 2)
    fail(Errc::FieldError, "sweedler: characteristic 2 collapses the sign");
  return gx_hopf(F, 2, Scalar::from_int(F, -1), "sweedler_q", {"1", "g", "x", "gx"},
                 [](uint32_t a, uint32_t b) { return a + 2 * b; });
}

HopfAlgebra taft_hopf(uint32_t n, const FieldSpec& F, int64_t omega) {
  if (n < 2) fail(Errc::RangeError, "taft: order must be at least 2");
  if (F.kind != FieldKind::PrimeField)
    fail(Errc::FieldError, "taft: realized over prime fields only");
  if ((F.characteristic - 1) % n != 0)
    fail(Errc::FieldError, "taft: need n dividing p-1 for a primitive root");
  Scalar w = Scalar::from_int(F, omega);
  if (w.is_zero()) fail(Errc::FieldError, "taft: omega must be nonzero");
  for (uint32_t k = 1; k < n; ++k)
    if (s_pow(F, w, k).is_one())
      fail(Errc::FieldError, "taft: omega is not a primitive root of order " +
                                 std::to_string(n));
  if (!s_pow(F, w, n).is_one())
    fail(Errc::FieldError, "taft: omega^n != 1");
  std::vector<std::string> labels;
  labels.reserve(uint64_t(n) * n);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j) {
      std::string l = i == 0 ? "" : (i == 1 ? "g" : "g" + std::to_string(i));
      if (j == 1)
        l += "x";
      else if (j > 1)
        l += "x" + std::to_string(j);
      labels.push_back(l.empty() ? "1" : l);
    }
  std::string name = "taft" + std::to_string(n);
  return gx_hopf(F, n, w, name, std::move(labels),
                 [n](uint32_t a, uint32_t b) { return a * n + b; });
}

Bialgebra unit_bialgebra(const FieldSpec& F) {
  Bialgebra B;
  B.field = F;
  B.dim = 1;
  B.name = "unit";
  B.labels = {"1"};
  B.mult = LinMap::identity(F, 1);
  B.unit = LinMap::identity(F, 1);
  B.comult = LinMap::identity(F, 1);
  B.counit = LinMap::identity(F, 1);
  return B;
}

namespace {

Bialgebra two_dim_grouplike(const FieldSpec& F, const std::string& name, bool t_squared_t) {
  Bialgebra B;
  B.field = F;
  B.dim = 2;
  B.name = name;
  B.labels = {"1", "t"};
  B.mult = LinMap(F, 2, 4);
  B.mult.set(0, 0, Scalar::one());
  B.mult.set(1, 1, Scalar::one());
  B.mult.set(1, 2, Scalar::one());
  if (t_squared_t) B.mult.set(1, 3, Scalar::one());
  B.unit = LinMap(F, 2, 1);
  B.unit.set(0, 0, Scalar::one());
  B.comult = LinMap(F, 4, 2);
  B.comult.set(0, 0, Scalar::one());
  B.comult.set(3, 1, Scalar::one());
  B.counit = LinMap(F, 1, 2);
  B.counit.set(0, 0, Scalar::one());
  B.counit.set(0, 1, Scalar::one());
  return B;
}

}  // namespace

Bialgebra nonhopf_idempotent(const FieldSpec& F) {
  return two_dim_grouplike(F, "bimonoid2", true);
}

Bialgebra nonhopf_nilpotent(const FieldSpec& F) {
  return two_dim_grouplike(F, "nilpotent2", false);
}

std::vector<std::string> zoo_names() {
  return {"c2_q", "c3_gf7", "s3_q", "s3_dual_q", "sweedler_q", "taft3_gf7"};
}

HopfAlgebra zoo(const std::string& name) {
  if (name == "c2_q") return cyclic_group_algebra(FieldSpec::rationals(), "c2_q", 2);
  if (name == "c3_gf7") return cyclic_group_algebra(FieldSpec::prime(7), "c3_gf7", 3);
  if (name == "s3_q") return symmetric3_algebra(FieldSpec::rationals(), "s3_q");
  if (name == "s3_dual_q") {
    HopfAlgebra D = dual_hopf(symmetric3_algebra(FieldSpec::rationals(), "s3_q"));
    D.b.name = "s3_dual_q";
    return D;
  }
  if (name == "sweedler_q") return sweedler_hopf(FieldSpec::rationals());
  if (name == "taft3_gf7") {
    HopfAlgebra T = taft_hopf(3, FieldSpec::prime(7), 2);
    T.b.name = "taft3_gf7";
    return T;
  }
  fail(Errc::RangeError, "unknown algebra '" + name + "'");
}

}  // namespace hsc
