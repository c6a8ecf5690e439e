#include "hsc/chain.hpp"

#include <random>

#include "hsc/error.hpp"

namespace hsc {

std::shared_ptr<const LinMap> own(LinMap&& m) {
  return std::make_shared<const LinMap>(std::move(m));
}

std::shared_ptr<const LinMap> own(const LinMap& m) {
  return std::make_shared<const LinMap>(m);
}

MapChain MapChain::of(std::shared_ptr<const LinMap> m) {
  MapChain c(m->field(), m->cols());
  c.then(std::move(m));
  return c;
}

MapChain& MapChain::then(std::shared_ptr<const LinMap> m, uint64_t dl, uint64_t dr) {
  require_same_field(field_, m->field());
  if (dl * m->cols() * dr != cod_)
    fail(Errc::DimMismatch, "MapChain::then: stage domain " + std::to_string(dl) + "*" +
                                std::to_string(m->cols()) + "*" + std::to_string(dr) +
                                " != " + std::to_string(cod_));
  cod_ = dl * m->rows() * dr;
  layers_.push_back(Layer{dl, dr, std::move(m)});
  return *this;
}

MapChain& MapChain::then(const MapChain& c) {
  for (const auto& l : c.layers_) then(l.map, l.dl, l.dr);
  return *this;
}

MapChain& MapChain::then_outer(const MapChain& c, uint64_t dl, uint64_t dr) {
  for (const auto& l : c.layers_) then(l.map, dl * l.dl, l.dr * dr);
  return *this;
}

SparseVec MapChain::apply(SparseVec v) const {
  for (const auto& l : layers_) v = apply_sandwich(*l.map, l.dl, l.dr, v);
  return v;
}

LinMap MapChain::materialize() const {
  if (dom_ > UINT32_MAX || cod_ > UINT32_MAX)
    fail(Errc::DimMismatch, "MapChain::materialize: dimensions too large");
  LinMap out(field_, static_cast<uint32_t>(cod_), static_cast<uint32_t>(dom_));
  for (uint64_t j = 0; j < dom_; ++j) out.set_col(static_cast<uint32_t>(j), column(j));
  return out;
}

MapChain tensor_chain(const MapChain& A, const MapChain& B) {
  require_same_field(A.field(), B.field());
  MapChain c(A.field(), A.dom() * B.dom());
  c.then_outer(A, 1, B.dom());
  c.then_outer(B, A.cod(), 1);
  return c;
}

CheckResult check_equal(const MapChain& L, const MapChain& R, const CheckOptions& opt) {
  require_same_field(L.field(), R.field());
  if (L.dom() != R.dom() || L.cod() != R.cod())
    fail(Errc::DimMismatch, "check_equal: composite shapes disagree (" +
                                std::to_string(L.cod()) + "x" + std::to_string(L.dom()) +
                                " vs " + std::to_string(R.cod()) + "x" +
                                std::to_string(R.dom()) + ")");
  CheckResult res;
  const FieldSpec& F = L.field();
  auto probe = [&](uint64_t j) -> std::optional<EntryDiff> {
    ++res.columns_checked;
    return column_difference(F, j, L.column(j), R.column(j));
  };
  auto to_witness = [&](const EntryDiff& d) {
    return Witness{d.row, d.col, s_str(F, d.lhs), s_str(F, d.rhs)};
  };

  if (L.dom() <= opt.full_limit) {
    std::optional<EntryDiff> best;
    for (uint64_t j = 0; j < L.dom(); ++j) {
      auto d = probe(j);
      if (d && (!best || d->row < best->row || (d->row == best->row && d->col < best->col)))
        best = d;
    }
    if (best) {
      res.passed = false;
      res.witness = to_witness(*best);
    }
    return res;
  }

  res.sampled = true;
  std::mt19937_64 rng(opt.seed);
  for (uint32_t t = 0; t < opt.samples; ++t) {
    uint64_t j = rng() % L.dom();
    auto d = probe(j);
    if (d) {
      res.passed = false;
      res.witness = to_witness(*d);
      return res;
    }
  }
  return res;
}

}  // namespace hsc
