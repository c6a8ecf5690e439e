#include "hsc/linmap.hpp"

#include <algorithm>

#include "hsc/error.hpp"

namespace hsc {

namespace {

uint32_t checked_dim_product(uint64_t a, uint64_t b, const char* what) {
  uint64_t p = a * b;
  if (a != 0 && (p / a != b || p > UINT32_MAX))
    fail(Errc::DimMismatch, std::string(what) + ": dimension product too large to materialize");
  return static_cast<uint32_t>(p);
}

}  // namespace

LinMap::LinMap() : rows_(0), cols_(0), cols_data_(std::make_shared<std::vector<Col>>()) {}

LinMap::LinMap(FieldSpec F, uint32_t rows, uint32_t cols)
    : field_(F), rows_(rows), cols_(cols),
      cols_data_(std::make_shared<std::vector<Col>>(cols)) {}

void LinMap::detach() {
  if (cols_data_.use_count() > 1)
    cols_data_ = std::make_shared<std::vector<Col>>(*cols_data_);
}

LinMap LinMap::identity(FieldSpec F, uint32_t n) {
  LinMap m(F, n, n);
  Scalar one = Scalar::one();
  for (uint32_t j = 0; j < n; ++j) (*m.cols_data_)[j] = {Entry{j, one}};
  return m;
}

LinMap LinMap::zero(FieldSpec F, uint32_t rows, uint32_t cols) {
  return LinMap(F, rows, cols);
}

LinMap LinMap::flip(FieldSpec F, uint64_t a, uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) fail(Errc::RangeError, "flip: domain overflows");
  const uint64_t total = a * b;
  if (total <= kMaterializeLimit)
    return tensor_perm(F, {static_cast<uint32_t>(a), static_cast<uint32_t>(b)}, {1, 0});
  return deferred(F, total, total, [a, b](uint64_t j) {
    uint64_t i1 = j / b, i2 = j % b;
    return SparseVec{{i2 * a + i1, Scalar::one()}};
  });
}

namespace {

uint64_t perm_image(const std::vector<uint32_t>& dims, const std::vector<size_t>& out_src,
                    uint64_t j) {
  size_t k = dims.size();
  std::vector<uint32_t> digits(k);
  uint64_t rem = j;
  for (size_t t = k; t-- > 0;) {
    digits[t] = static_cast<uint32_t>(rem % dims[t]);
    rem /= dims[t];
  }
  uint64_t r = 0;
  for (size_t t = 0; t < k; ++t) r = r * dims[out_src[t]] + digits[out_src[t]];
  return r;
}

}  // namespace

LinMap LinMap::tensor_perm(FieldSpec F, const std::vector<uint32_t>& dims,
                           const std::vector<size_t>& out_src) {
  size_t k = dims.size();
  if (out_src.size() != k) fail(Errc::DimMismatch, "tensor_perm: factor count mismatch");
  std::vector<bool> seen(k, false);
  uint64_t total = 1;
  for (size_t t = 0; t < k; ++t) {
    if (out_src[t] >= k || seen[out_src[t]])
      fail(Errc::DimMismatch, "tensor_perm: out_src is not a permutation");
    seen[out_src[t]] = true;
    if (dims[t] != 0 && total > UINT64_MAX / dims[t])
      fail(Errc::RangeError, "tensor_perm: domain overflows");
    total *= dims[t];
  }
  if (total > kMaterializeLimit)
    return deferred(F, total, total, [dims, out_src](uint64_t j) {
      return SparseVec{{perm_image(dims, out_src, j), Scalar::one()}};
    });
  LinMap m(F, static_cast<uint32_t>(total), static_cast<uint32_t>(total));
  Scalar one = Scalar::one();
  for (uint32_t j = 0; j < total; ++j)
    (*m.cols_data_)[j] = {Entry{static_cast<uint32_t>(perm_image(dims, out_src, j)), one}};
  return m;
}

LinMap LinMap::deferred(FieldSpec F, uint64_t rows, uint64_t cols, Generator gen) {
  if (!gen) fail(Errc::RangeError, "LinMap::deferred: null generator");
  LinMap m;
  m.field_ = F;
  m.rows_ = rows;
  m.cols_ = cols;
  m.gen_ = std::make_shared<const Generator>(std::move(gen));
  return m;
}

void LinMap::require_stored(const char* op) const {
  if (gen_)
    fail(Errc::DimMismatch,
         std::string("LinMap::") + op + ": deferred map has no stored columns");
}

const LinMap::Col& LinMap::col(uint32_t j) const {
  require_stored("col");
  return (*cols_data_)[j];
}

SparseVec LinMap::column(uint64_t j) const {
  if (j >= cols_) fail(Errc::RangeError, "LinMap::column: index out of range");
  if (gen_) return (*gen_)(j);
  SparseVec v;
  const Col& c = (*cols_data_)[static_cast<uint32_t>(j)];
  v.reserve(c.size());
  for (const auto& e : c) v.push_back(VEntry{e.row, e.v});
  return v;
}

size_t LinMap::nnz() const {
  require_stored("nnz");
  size_t n = 0;
  for (const auto& c : *cols_data_) n += c.size();
  return n;
}

Scalar LinMap::get(uint64_t r, uint64_t c) const {
  if (r >= rows_ || c >= cols_) fail(Errc::RangeError, "LinMap::get: index out of range");
  if (gen_) {
    SparseVec v = (*gen_)(c);
    for (const auto& e : v)
      if (e.idx == r) return e.v;
    return Scalar::zero();
  }
  const Col& col = (*cols_data_)[static_cast<uint32_t>(c)];
  uint32_t r32 = static_cast<uint32_t>(r);
  auto it = std::lower_bound(col.begin(), col.end(), r32,
                             [](const Entry& e, uint32_t row) { return e.row < row; });
  if (it != col.end() && it->row == r32) return it->v;
  return Scalar::zero();
}

void LinMap::set(uint32_t r, uint32_t c, Scalar v) {
  require_stored("set");
  detach();
  if (r >= rows_ || c >= cols_) fail(Errc::RangeError, "LinMap::set: index out of range");
  Col& col = (*cols_data_)[c];
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const Entry& e, uint32_t row) { return e.row < row; });
  if (it != col.end() && it->row == r) {
    if (v.is_zero())
      col.erase(it);
    else
      it->v = std::move(v);
  } else if (!v.is_zero()) {
    col.insert(it, Entry{r, std::move(v)});
  }
}

void LinMap::add_to(uint32_t r, uint32_t c, const Scalar& v) {
  require_stored("add_to");
  if (v.is_zero()) return;
  detach();
  if (r >= rows_ || c >= cols_) fail(Errc::RangeError, "LinMap::add_to: index out of range");
  Col& col = (*cols_data_)[c];
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const Entry& e, uint32_t row) { return e.row < row; });
  if (it != col.end() && it->row == r) {
    Scalar s = s_add(field_, it->v, v);
    if (s.is_zero())
      col.erase(it);
    else
      it->v = std::move(s);
  } else {
    col.insert(it, Entry{r, v});
  }
}

void LinMap::set_col(uint32_t j, SparseVec&& unfolded) {
  require_stored("set_col");
  detach();
  if (j >= cols_) fail(Errc::RangeError, "LinMap::set_col: column out of range");
  SparseVec folded = fold_sparse(field_, std::move(unfolded));
  Col col;
  col.reserve(folded.size());
  for (auto& e : folded) {
    if (e.idx >= rows_) fail(Errc::RangeError, "LinMap::set_col: row out of range");
    col.push_back(Entry{static_cast<uint32_t>(e.idx), std::move(e.v)});
  }
  (*cols_data_)[j] = std::move(col);
}

bool LinMap::operator==(const LinMap& o) const {
  require_stored("operator==");
  o.require_stored("operator==");
  if (!(field_ == o.field_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (uint32_t j = 0; j < cols_; ++j) {
    const Col &a = (*cols_data_)[j], &b = (*o.cols_data_)[j];
    if (a.size() != b.size()) return false;
    for (size_t t = 0; t < a.size(); ++t)
      if (a[t].row != b[t].row || !(a[t].v == b[t].v)) return false;
  }
  return true;
}

std::string LinMap::describe() const {
  std::string s = std::to_string(rows_) + "x" + std::to_string(cols_) + " over " + field_.str();
  if (gen_) return s + ", deferred";
  return s + ", nnz=" + std::to_string(nnz());
}

LinMap compose(const LinMap& f, const LinMap& g) {
  require_same_field(f.field(), g.field());
  if (f.cols() != g.rows()) fail(Errc::DimMismatch, "compose: inner dimensions disagree");
  LinMap out(f.field(), f.rows(), g.cols());
  for (uint32_t j = 0; j < g.cols(); ++j) {
    SparseVec acc;
    for (const auto& e : g.col(j)) axpy(acc, e.v, f.col(e.row), f.field());
    out.set_col(j, std::move(acc));
  }
  return out;
}

LinMap kron(const LinMap& f, const LinMap& g) {
  require_same_field(f.field(), g.field());
  uint32_t rows = checked_dim_product(f.rows(), g.rows(), "kron");
  uint32_t cols = checked_dim_product(f.cols(), g.cols(), "kron");
  LinMap out(f.field(), rows, cols);
  for (uint32_t jf = 0; jf < f.cols(); ++jf) {
    const auto& cf = f.col(jf);
    if (cf.empty()) continue;
    for (uint32_t jg = 0; jg < g.cols(); ++jg) {
      const auto& cg = g.col(jg);
      if (cg.empty()) continue;
      SparseVec acc;
      acc.reserve(cf.size() * cg.size());
      for (const auto& ef : cf)
        for (const auto& eg : cg)
          acc.push_back(VEntry{static_cast<uint64_t>(ef.row) * g.rows() + eg.row,
                               s_mul(f.field(), ef.v, eg.v)});
      out.set_col(static_cast<uint32_t>(jf) * g.cols() + jg, std::move(acc));
    }
  }
  return out;
}

LinMap transpose_dual(const LinMap& f) {
  LinMap out(f.field(), f.cols(), f.rows());
  std::vector<SparseVec> rows_acc(f.rows());
  for (uint32_t j = 0; j < f.cols(); ++j)
    for (const auto& e : f.col(j)) rows_acc[e.row].push_back(VEntry{j, e.v});
  for (uint32_t r = 0; r < f.rows(); ++r) out.set_col(r, std::move(rows_acc[r]));
  return out;
}

std::optional<LinMap> solve_linear(const LinMap& A, const LinMap& B) {
  require_same_field(A.field(), B.field());
  if (A.rows() != B.rows()) fail(Errc::DimMismatch, "solve_linear: row counts disagree");
  const FieldSpec F = A.field();
  const uint32_t r = A.rows(), c = A.cols(), k = B.cols();
  const uint32_t w = c + k;
  std::vector<std::vector<Scalar>> W(r, std::vector<Scalar>(w, Scalar::zero()));
  for (uint32_t j = 0; j < c; ++j)
    for (const auto& e : A.col(j)) W[e.row][j] = e.v;
  for (uint32_t j = 0; j < k; ++j)
    for (const auto& e : B.col(j)) W[e.row][c + j] = e.v;

  std::vector<uint32_t> pivot_col;
  uint32_t rank = 0;
  for (uint32_t j = 0; j < c && rank < r; ++j) {
    uint32_t p = rank;
    while (p < r && W[p][j].is_zero()) ++p;
    if (p == r) continue;
    std::swap(W[rank], W[p]);
    Scalar inv = s_inv(F, W[rank][j]);
    for (uint32_t t = j; t < w; ++t)
      if (!W[rank][t].is_zero()) W[rank][t] = s_mul(F, W[rank][t], inv);
    for (uint32_t i = 0; i < r; ++i) {
      if (i == rank || W[i][j].is_zero()) continue;
      Scalar m = W[i][j];
      for (uint32_t t = j; t < w; ++t)
        if (!W[rank][t].is_zero()) W[i][t] = s_sub(F, W[i][t], s_mul(F, m, W[rank][t]));
    }
    pivot_col.push_back(j);
    ++rank;
  }
  for (uint32_t i = rank; i < r; ++i)
    for (uint32_t t = c; t < w; ++t)
      if (!W[i][t].is_zero()) return std::nullopt;

  LinMap X(F, c, k);
  for (uint32_t t = 0; t < rank; ++t)
    for (uint32_t j = 0; j < k; ++j)
      if (!W[t][c + j].is_zero()) X.set(pivot_col[t], j, W[t][c + j]);
  return X;
}

std::optional<LinMap> invert(const LinMap& A) {
  if (A.rows() != A.cols()) return std::nullopt;
  auto X = solve_linear(A, LinMap::identity(A.field(), A.rows()));
  if (!X) return std::nullopt;
  // A X = I on a square A also forces X A = I, but verify rather than rely
  // on rank bookkeeping.
  if (compose(*X, A) != LinMap::identity(A.field(), A.rows())) return std::nullopt;
  return X;
}

SparseVec fold_sparse(const FieldSpec& F, SparseVec&& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const VEntry& a, const VEntry& b) { return a.idx < b.idx; });
  SparseVec out;
  out.reserve(terms.size());
  size_t i = 0;
  while (i < terms.size()) {
    uint64_t idx = terms[i].idx;
    Scalar s = std::move(terms[i].v);
    ++i;
    while (i < terms.size() && terms[i].idx == idx) {
      s = s_add(F, s, terms[i].v);
      ++i;
    }
    if (!s.is_zero()) out.push_back(VEntry{idx, std::move(s)});
  }
  return out;
}

void axpy(SparseVec& acc, const Scalar& c, const LinMap::Col& col, const FieldSpec& F) {
  if (c.is_zero()) return;
  for (const auto& e : col) acc.push_back(VEntry{e.row, s_mul(F, c, e.v)});
}

SparseVec LinMap::apply(const SparseVec& v) const {
  SparseVec acc;
  for (const auto& e : v) {
    if (e.idx >= cols_) fail(Errc::RangeError, "apply: index exceeds domain");
    if (gen_) {
      SparseVec c = (*gen_)(e.idx);
      for (auto& ce : c) acc.push_back(VEntry{ce.idx, s_mul(field_, e.v, ce.v)});
    } else {
      axpy(acc, e.v, (*cols_data_)[static_cast<uint32_t>(e.idx)], field_);
    }
  }
  return fold_sparse(field_, std::move(acc));
}

SparseVec apply_sandwich(const LinMap& f, uint64_t dl, uint64_t dr, const SparseVec& v) {
  if (dl == 1 && dr == 1) return f.apply(v);
  const uint64_t in_block = f.cols() * dr;
  const uint64_t out_block = f.rows() * dr;
  SparseVec acc;
  for (const auto& e : v) {
    uint64_t left = e.idx / in_block;
    uint64_t rem = e.idx % in_block;
    uint64_t mid = rem / dr;
    uint64_t right = rem % dr;
    if (left >= dl) fail(Errc::RangeError, "apply_sandwich: index exceeds domain");
    uint64_t base = left * out_block + right;
    if (f.is_deferred()) {
      SparseVec c = f.column(mid);
      for (auto& fe : c)
        acc.push_back(VEntry{base + fe.idx * dr, s_mul(f.field(), e.v, fe.v)});
    } else {
      for (const auto& fe : f.col(static_cast<uint32_t>(mid)))
        acc.push_back(VEntry{base + static_cast<uint64_t>(fe.row) * dr,
                             s_mul(f.field(), e.v, fe.v)});
    }
  }
  return fold_sparse(f.field(), std::move(acc));
}

std::optional<EntryDiff> first_difference(const LinMap& f, const LinMap& g) {
  require_same_field(f.field(), g.field());
  if (f.rows() != g.rows() || f.cols() != g.cols())
    fail(Errc::DimMismatch, "first_difference: shapes disagree");
  std::optional<EntryDiff> best;
  for (uint32_t j = 0; j < f.cols(); ++j) {
    SparseVec a, b;
    for (const auto& e : f.col(j)) a.push_back(VEntry{e.row, e.v});
    for (const auto& e : g.col(j)) b.push_back(VEntry{e.row, e.v});
    auto d = column_difference(f.field(), j, a, b);
    if (d && (!best || d->row < best->row || (d->row == best->row && d->col < best->col)))
      best = d;
  }
  return best;
}

std::optional<EntryDiff> column_difference(const FieldSpec& F, uint64_t col,
                                           const SparseVec& lhs, const SparseVec& rhs) {
  size_t i = 0, j = 0;
  while (i < lhs.size() || j < rhs.size()) {
    if (j == rhs.size() || (i < lhs.size() && lhs[i].idx < rhs[j].idx)) {
      return EntryDiff{lhs[i].idx, col, lhs[i].v, Scalar::zero()};
    } else if (i == lhs.size() || rhs[j].idx < lhs[i].idx) {
      return EntryDiff{rhs[j].idx, col, Scalar::zero(), rhs[j].v};
    } else {
      if (!(lhs[i].v == rhs[j].v)) return EntryDiff{lhs[i].idx, col, lhs[i].v, rhs[j].v};
      ++i;
      ++j;
    }
  }
  return std::nullopt;
}

SparseVec basis_vec(uint64_t idx) { return {VEntry{idx, Scalar::one()}}; }

}  // namespace hsc
