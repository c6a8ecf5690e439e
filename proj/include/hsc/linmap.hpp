#ifndef HSC_LINMAP_HPP
#define HSC_LINMAP_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hsc/scalar.hpp"

namespace hsc {

// Sparse vector used when evaluating composites column by column. Indices are
// 64-bit because virtual tensor domains (never materialized) can exceed 2^32.
struct VEntry {
  uint64_t idx;
  Scalar v;
};
using SparseVec = std::vector<VEntry>;  // sorted by idx, no explicit zeros

// Construction helpers store their output when the domain has at most this
// many columns and produce deferred maps otherwise; checkers accept both.
// Matches CheckOptions::full_limit so anything scanned exhaustively is also
// cheap to store.
inline constexpr uint64_t kMaterializeLimit = 65536;

// Exact linear map between based vector spaces, stored column-major and
// sparse. Semantics are dense: every absent entry is zero, equality is
// entrywise, and no operation depends on the storage layout. Columns hold
// the images of domain basis vectors: col(j)[r] is the coefficient of e_r
// in f(e_j).
//
// A map may instead be deferred: columns are produced on demand by a
// generator and never stored. Deferred maps support get/apply/column (the
// evaluation surface the checkers run on); structural operations that walk
// or mutate stored columns reject them. Deferred domains are allowed to
// exceed 2^32, so the column index is 64-bit throughout the evaluation API.
//
// Tensor factors are flattened with the leftmost factor most significant:
// e_{i1} (x) e_{i2} (x) ... maps to index ((i1*n2)+i2)*n3+... (zero-based).
class LinMap {
 public:
  struct Entry {
    uint32_t row;
    Scalar v;
  };
  using Col = std::vector<Entry>;  // sorted by row, no explicit zeros
  // Must return a folded, idx-sorted vector of the column's entries.
  using Generator = std::function<SparseVec(uint64_t)>;

  LinMap();
  LinMap(FieldSpec F, uint32_t rows, uint32_t cols);

  static LinMap identity(FieldSpec F, uint32_t n);
  static LinMap zero(FieldSpec F, uint32_t rows, uint32_t cols);
  // The swap e_i (x) e_j -> e_j (x) e_i as a map a*b -> b*a. Deferred when
  // a*b exceeds kMaterializeLimit.
  static LinMap flip(FieldSpec F, uint64_t a, uint64_t b);
  // Permutation of tensor factors: output slot t is fed from input factor
  // out_src[t]; dims are the input factor dimensions. Deferred when the
  // domain exceeds kMaterializeLimit.
  static LinMap tensor_perm(FieldSpec F, const std::vector<uint32_t>& dims,
                            const std::vector<size_t>& out_src);
  // Column-generator-backed map; nothing is stored.
  static LinMap deferred(FieldSpec F, uint64_t rows, uint64_t cols, Generator gen);

  const FieldSpec& field() const { return field_; }
  uint64_t rows() const { return rows_; }
  uint64_t cols() const { return cols_; }
  bool is_deferred() const { return gen_ != nullptr; }
  // Stored-column access for structural algorithms; deferred maps reject.
  const Col& col(uint32_t j) const;
  // Evaluation access working on both representations.
  SparseVec column(uint64_t j) const;
  size_t nnz() const;

  Scalar get(uint64_t r, uint64_t c) const;
  SparseVec apply(const SparseVec& v) const;
  // Builder access; set replaces, add accumulates. Zero results are dropped.
  void set(uint32_t r, uint32_t c, Scalar v);
  void add_to(uint32_t r, uint32_t c, const Scalar& v);
  // Installs a whole column from an accumulation buffer (sorts and folds).
  void set_col(uint32_t j, SparseVec&& unfolded);

  bool operator==(const LinMap& o) const;
  bool operator!=(const LinMap& o) const { return !(*this == o); }

  std::string describe() const;  // "rows x cols over F, nnz=k"

 private:
  void require_stored(const char* op) const;
  void detach();  // copy-on-write: clone storage before mutating shared state

  FieldSpec field_;
  uint64_t rows_, cols_;
  std::shared_ptr<std::vector<Col>> cols_data_;
  std::shared_ptr<const Generator> gen_;
};

// f after g: compose(f, g) applies g first. Requires f.cols == g.rows.
LinMap compose(const LinMap& f, const LinMap& g);

// Kronecker product on the flattening above: (f (x) g)(e_i (x) e_j) =
// f(e_i) (x) g(e_j).
LinMap kron(const LinMap& f, const LinMap& g);

// The dual map under the canonical dual bases (the matrix transpose; the
// flattening convention makes this literal).
LinMap transpose_dual(const LinMap& f);

// Exact solution X of A X = B with free variables set to zero, or nullopt
// when the system is inconsistent.
std::optional<LinMap> solve_linear(const LinMap& A, const LinMap& B);

// Two-sided inverse, or nullopt when the map is not invertible (including
// any non-square map).
std::optional<LinMap> invert(const LinMap& A);

// Sorts by index and folds duplicates, dropping zeros.
SparseVec fold_sparse(const FieldSpec& F, SparseVec&& terms);

// Appends c * col to acc (unfolded); acc must be folded afterwards.
void axpy(SparseVec& acc, const Scalar& c, const LinMap::Col& col,
          const FieldSpec& F);

// Applies id_dl (x) f (x) id_dr to a sparse vector over the flattened domain
// dl * f.cols * dr without materializing the sandwich.
SparseVec apply_sandwich(const LinMap& f, uint64_t dl, uint64_t dr,
                         const SparseVec& v);

struct EntryDiff {
  uint64_t row, col;
  Scalar lhs, rhs;
};

// First differing coordinate in row-major scan order (min by (row, col)),
// or nullopt when the maps are equal. Dimensions must agree.
std::optional<EntryDiff> first_difference(const LinMap& f, const LinMap& g);

// Same comparison for two already-computed columns of virtual maps.
std::optional<EntryDiff> column_difference(const FieldSpec& F, uint64_t col,
                                           const SparseVec& lhs,
                                           const SparseVec& rhs);

SparseVec basis_vec(uint64_t idx);

}  // namespace hsc

#endif
