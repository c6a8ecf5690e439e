#include "hsc/hscfmt.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <set>
#include <sstream>

#include "hsc/error.hpp"

namespace hsc {

namespace {

struct SectionSpec {
  const char* name;
  int arity;       // index count per entry line
  bool required;
  // Bound for each index slot: 'a' = algebra dimension, 'm' = module
  // dimension. Algebra documents use 'a' throughout.
  std::array<char, 3> bound;
};

const std::vector<SectionSpec>& sections_for(HscKind kind) {
  static const std::vector<SectionSpec> algebra = {
      {"MULT", 3, true, {'a', 'a', 'a'}},   {"UNIT", 1, true, {'a', 0, 0}},
      {"COMULT", 3, true, {'a', 'a', 'a'}}, {"COUNIT", 1, true, {'a', 0, 0}},
      {"ANTIPODE", 2, false, {'a', 'a', 0}},
  };
  static const std::vector<SectionSpec> lr = {
      {"LACT", 3, true, {'a', 'm', 'm'}},
      {"RACT", 3, true, {'m', 'a', 'm'}},
      {"LCOACT", 3, true, {'m', 'a', 'm'}},
      {"RCOACT", 3, true, {'m', 'm', 'a'}},
  };
  static const std::vector<SectionSpec> yd = {
      {"ACT", 3, true, {'a', 'm', 'm'}},
      {"COACT", 3, true, {'m', 'a', 'm'}},
  };
  switch (kind) {
    case HscKind::Algebra: return algebra;
    case HscKind::ModuleLR: return lr;
    case HscKind::ModuleYD: return yd;
  }
  fail(Errc::ParseError, "unknown document kind");
}

const SectionSpec* find_spec(HscKind kind, std::string_view name) {
  for (const auto& s : sections_for(kind))
    if (name == s.name) return &s;
  return nullptr;
}

uint32_t bound_of(const HscDocument& doc, char which) {
  return which == 'm' ? doc.dim
                      : (doc.kind == HscKind::Algebra ? doc.dim : doc.algdim);
}

std::string_view strip_errc_prefix(std::string_view msg) {
  for (Errc c : {Errc::ParseError, Errc::RangeError, Errc::FieldError}) {
    std::string p = std::string(errc_name(c)) + ": ";
    if (msg.starts_with(p)) return msg.substr(p.size());
  }
  return msg;
}

[[noreturn]] void fail_line(size_t line, Errc code, const std::string& msg) {
  fail(code, "line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

uint64_t parse_u64(std::string_view tok, size_t line, const char* what) {
  uint64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    fail_line(line, Errc::ParseError,
              std::string("expected ") + what + ", got '" + std::string(tok) + "'");
  return v;
}

uint32_t parse_dim(std::string_view tok, size_t line, const char* what) {
  uint64_t v = parse_u64(tok, line, what);
  if (v == 0 || v > 65535)
    fail_line(line, Errc::RangeError,
              std::string(what) + " must be in [1, 65535], got " + std::string(tok));
  return static_cast<uint32_t>(v);
}

Scalar parse_scalar(const FieldSpec& F, std::string_view tok, size_t line) {
  try {
    return s_parse(F, tok);
  } catch (const Error& e) {
    fail_line(line, e.code(), std::string(strip_errc_prefix(e.what())));
  }
}

// Entries compare by index triple; emission and duplicate detection both
// sort on this.
std::array<uint32_t, 3> key(const HscEntry& e) { return {e.i, e.j, e.k}; }

void emit_section(std::ostringstream& os, const FieldSpec& F,
                  const SectionSpec& spec, const HscSection& sec) {
  os << spec.name << "\n";
  std::vector<HscEntry> sorted = sec.entries;
  std::sort(sorted.begin(), sorted.end(),
            [](const HscEntry& a, const HscEntry& b) { return key(a) < key(b); });
  for (const auto& e : sorted) {
    os << e.i;
    if (spec.arity >= 2) os << " " << e.j;
    if (spec.arity >= 3) os << " " << e.k;
    os << " " << s_str(F, e.v) << "\n";
  }
}

// Shared shape vocabulary for the converters below.
struct MapShape {
  uint32_t rows;
  uint32_t cols;
};

// Decodes a section into a LinMap given how each index maps to (row, col).
// decode returns {row, col} for one entry.
template <class Decode>
LinMap section_to_map(const HscDocument& doc, std::string_view name,
                      MapShape shape, Decode decode) {
  LinMap out(doc.field, shape.rows, shape.cols);
  for (const auto& sec : doc.sections) {
    if (sec.name != name) continue;
    for (const auto& e : sec.entries) {
      auto [r, c] = decode(e);
      out.set(r, c, e.v);
    }
  }
  return out;
}

// Encodes a stored LinMap as a section, one entry per nonzero coefficient.
// encode returns the index triple for (row, col).
template <class Encode>
HscSection map_to_section(const LinMap& m, std::string name, Encode encode) {
  HscSection sec{std::move(name), {}};
  for (uint64_t c = 0; c < m.cols(); ++c) {
    for (const auto& e : m.col(static_cast<uint32_t>(c))) {
      auto [i, j, k] = encode(e.row, static_cast<uint32_t>(c));
      sec.entries.push_back({i, j, k, e.v});
    }
  }
  return sec;
}

const HscSection* find_section(const HscDocument& doc, std::string_view name) {
  for (const auto& s : doc.sections)
    if (s.name == name) return &s;
  return nullptr;
}

void require_kind(const HscDocument& doc, HscKind kind, const char* what) {
  if (doc.kind != kind)
    fail(Errc::ParseError, std::string("document is not ") + what);
}

}  // namespace

HscDocument parse_hsc(std::string_view text) {
  HscDocument doc;
  enum class St { Header, Field, AlgDim, Dim, AlgebraRef, Body };
  St st = St::Header;
  HscSection* cur = nullptr;
  const SectionSpec* cur_spec = nullptr;
  std::set<std::array<uint32_t, 3>> seen;
  bool labels_seen = false;

  size_t line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos
                                                 ? text.size() - pos
                                                 : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (line.ends_with('\r')) line.remove_suffix(1);
    if (nl == std::string_view::npos && line.empty()) break;

    if (line.starts_with('#')) {
      if (st == St::Header)
        fail_line(line_no, Errc::ParseError, "expected 'hsc 1 ...' header on line 1");
      std::string_view rest = line.substr(1);
      if (rest.starts_with(" name: ")) doc.name = std::string(rest.substr(7));
      continue;
    }
    auto toks = split_ws(line);
    if (toks.empty()) {
      if (st == St::Header)
        fail_line(line_no, Errc::ParseError, "expected 'hsc 1 ...' header on line 1");
      continue;
    }

    switch (st) {
      case St::Header: {
        if (toks[0] != "hsc")
          fail_line(line_no, Errc::ParseError, "expected 'hsc 1 ...' header on line 1");
        if (toks.size() < 3 || toks[1] != "1")
          fail_line(line_no, Errc::ParseError, "unsupported format version");
        if (toks[2] == "algebra") {
          if (toks.size() != 3)
            fail_line(line_no, Errc::ParseError, "trailing tokens after 'algebra'");
          doc.kind = HscKind::Algebra;
        } else if (toks[2] == "module") {
          if (toks.size() != 4 || (toks[3] != "lr" && toks[3] != "yd"))
            fail_line(line_no, Errc::ParseError, "module kind must be 'lr' or 'yd'");
          doc.kind = toks[3] == "lr" ? HscKind::ModuleLR : HscKind::ModuleYD;
        } else {
          fail_line(line_no, Errc::ParseError,
                    "document kind must be 'algebra' or 'module'");
        }
        st = St::Field;
        break;
      }
      case St::Field: {
        if (toks[0] != "field")
          fail_line(line_no, Errc::ParseError, "expected 'field Q' or 'field GF <p>'");
        if (toks.size() == 2 && toks[1] == "Q") {
          doc.field = FieldSpec::rationals();
        } else if (toks.size() == 3 && toks[1] == "GF") {
          uint64_t p = parse_u64(toks[2], line_no, "a prime characteristic");
          try {
            doc.field = FieldSpec::prime(p);
          } catch (const Error& e) {
            fail_line(line_no, e.code(), std::string(strip_errc_prefix(e.what())));
          }
        } else {
          fail_line(line_no, Errc::ParseError, "expected 'field Q' or 'field GF <p>'");
        }
        st = doc.kind == HscKind::Algebra ? St::Dim : St::AlgDim;
        break;
      }
      case St::AlgDim: {
        if (toks[0] != "algdim" || toks.size() != 2)
          fail_line(line_no, Errc::ParseError, "expected 'algdim <n>'");
        doc.algdim = parse_dim(toks[1], line_no, "algdim");
        st = St::Dim;
        break;
      }
      case St::Dim: {
        if (toks[0] != "dim" || toks.size() != 2)
          fail_line(line_no, Errc::ParseError, "expected 'dim <n>'");
        doc.dim = parse_dim(toks[1], line_no, "dim");
        st = doc.kind == HscKind::Algebra ? St::Body : St::AlgebraRef;
        break;
      }
      case St::AlgebraRef: {
        if (toks[0] != "algebra" || toks.size() != 2)
          fail_line(line_no, Errc::ParseError, "expected 'algebra <path-or-digest>'");
        doc.algebra_ref = std::string(toks[1]);
        st = St::Body;
        break;
      }
      case St::Body: {
        if (toks[0] == "labels") {
          if (doc.kind != HscKind::Algebra)
            fail_line(line_no, Errc::ParseError,
                      "module documents do not carry labels");
          if (cur != nullptr || labels_seen)
            fail_line(line_no, Errc::ParseError, "misplaced labels line");
          if (toks.size() != size_t(doc.dim) + 1)
            fail_line(line_no, Errc::ParseError,
                      "expected " + std::to_string(doc.dim) + " labels, got " +
                          std::to_string(toks.size() - 1));
          for (size_t t = 1; t < toks.size(); ++t)
            doc.labels.emplace_back(toks[t]);
          labels_seen = true;
          break;
        }
        if (const SectionSpec* spec = find_spec(doc.kind, toks[0])) {
          if (toks.size() != 1)
            fail_line(line_no, Errc::ParseError, "trailing tokens after section name");
          if (find_section(doc, spec->name))
            fail_line(line_no, Errc::ParseError,
                      std::string("duplicate section ") + spec->name);
          doc.sections.push_back({spec->name, {}});
          cur = &doc.sections.back();
          cur_spec = spec;
          seen.clear();
          break;
        }
        if (cur == nullptr)
          fail_line(line_no, Errc::ParseError,
                    "expected a section name, got '" + std::string(toks[0]) + "'");
        if (toks.size() != size_t(cur_spec->arity) + 1)
          fail_line(line_no, Errc::ParseError,
                    std::string(cur_spec->name) + " entries take " +
                        std::to_string(cur_spec->arity) + " indices and a scalar");
        HscEntry e;
        uint32_t* slots[3] = {&e.i, &e.j, &e.k};
        for (int t = 0; t < cur_spec->arity; ++t) {
          uint64_t v = parse_u64(toks[size_t(t)], line_no, "an index");
          uint32_t bound = bound_of(doc, cur_spec->bound[size_t(t)]);
          if (v >= bound)
            fail_line(line_no, Errc::RangeError,
                      "index " + std::to_string(v) + " out of range [0, " +
                          std::to_string(bound) + ")");
          *slots[t] = static_cast<uint32_t>(v);
        }
        e.v = parse_scalar(doc.field, toks.back(), line_no);
        if (!seen.insert(key(e)).second)
          fail_line(line_no, Errc::ParseError, "duplicate entry");
        cur->entries.push_back(std::move(e));
        break;
      }
    }
  }

  if (st == St::Header)
    fail_line(1, Errc::ParseError, "expected 'hsc 1 ...' header on line 1");
  if (st != St::Body) fail(Errc::ParseError, "truncated document");
  for (const auto& spec : sections_for(doc.kind))
    if (spec.required && !find_section(doc, spec.name))
      fail(Errc::ParseError, std::string("missing section ") + spec.name);
  validate_document(doc);
  return doc;
}

void validate_document(const HscDocument& doc) {
  if (doc.dim == 0) fail(Errc::RangeError, "dim must be positive");
  if (doc.kind != HscKind::Algebra) {
    if (doc.algdim == 0) fail(Errc::RangeError, "algdim must be positive");
    if (doc.algebra_ref.empty())
      fail(Errc::ParseError, "module documents must reference their algebra");
    if (!doc.labels.empty())
      fail(Errc::ParseError, "module documents do not carry labels");
  }
  if (!doc.labels.empty() && doc.labels.size() != doc.dim)
    fail(Errc::ParseError, "label count does not match dim");
  for (const auto& l : doc.labels)
    if (l.empty() || l.find_first_of(" \t\r\n#") != std::string::npos)
      fail(Errc::ParseError, "label '" + l + "' is not a single clean token");

  for (const auto& spec : sections_for(doc.kind))
    if (spec.required && !find_section(doc, spec.name))
      fail(Errc::ParseError, std::string("missing section ") + spec.name);
  std::set<std::string_view> names;
  for (const auto& sec : doc.sections) {
    const SectionSpec* spec = find_spec(doc.kind, sec.name);
    if (!spec)
      fail(Errc::ParseError, "section " + sec.name + " not valid for this kind");
    if (!names.insert(sec.name).second)
      fail(Errc::ParseError, "duplicate section " + sec.name);
    std::set<std::array<uint32_t, 3>> seen;
    for (const auto& e : sec.entries) {
      const uint32_t idx[3] = {e.i, e.j, e.k};
      for (int t = 0; t < spec->arity; ++t)
        if (idx[t] >= bound_of(doc, spec->bound[size_t(t)]))
          fail(Errc::RangeError, "entry index out of range in " + sec.name);
      for (int t = spec->arity; t < 3; ++t)
        if (idx[t] != 0)
          fail(Errc::ParseError, "unused index slot must be zero in " + sec.name);
      if (!seen.insert(key(e)).second)
        fail(Errc::ParseError, "duplicate entry in " + sec.name);
    }
  }
}

std::string emit_hsc(const HscDocument& doc) {
  validate_document(doc);
  std::ostringstream os;
  os << "hsc 1 "
     << (doc.kind == HscKind::Algebra
             ? "algebra"
             : (doc.kind == HscKind::ModuleLR ? "module lr" : "module yd"))
     << "\n";
  if (!doc.name.empty()) os << "# name: " << doc.name << "\n";
  if (doc.field.kind == FieldKind::Rationals)
    os << "field Q\n";
  else
    os << "field GF " << doc.field.characteristic << "\n";
  if (doc.kind != HscKind::Algebra) os << "algdim " << doc.algdim << "\n";
  os << "dim " << doc.dim << "\n";
  if (doc.kind != HscKind::Algebra) os << "algebra " << doc.algebra_ref << "\n";
  if (!doc.labels.empty()) {
    os << "labels";
    for (const auto& l : doc.labels) os << " " << l;
    os << "\n";
  }
  for (const auto& spec : sections_for(doc.kind))
    if (const HscSection* sec = find_section(doc, spec.name))
      emit_section(os, doc.field, spec, *sec);
  return os.str();
}

uint64_t fnv1a64(std::string_view bytes) {
  uint64_t h = 14695981039346656037ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string digest_hex(std::string_view bytes) {
  static const char* hex = "0123456789abcdef";
  uint64_t h = fnv1a64(bytes);
  std::string out(16, '0');
  for (int t = 15; t >= 0; --t) {
    out[size_t(t)] = hex[h & 0xF];
    h >>= 4;
  }
  return out;
}

std::string algebra_digest(const HopfAlgebra& H) {
  return digest_hex(emit_hsc(doc_from_hopf(H)));
}

HscDocument doc_from_bialgebra(const Bialgebra& B) {
  require_valid_shape(B);
  const uint32_t n = B.dim;
  HscDocument doc;
  doc.kind = HscKind::Algebra;
  doc.field = B.field;
  doc.name = B.name;
  doc.dim = n;
  doc.labels = B.labels;
  doc.sections.push_back(map_to_section(B.mult, "MULT", [n](uint32_t r, uint32_t c) {
    return std::array<uint32_t, 3>{c / n, c % n, r};
  }));
  doc.sections.push_back(map_to_section(B.unit, "UNIT", [](uint32_t r, uint32_t) {
    return std::array<uint32_t, 3>{r, 0, 0};
  }));
  doc.sections.push_back(map_to_section(B.comult, "COMULT", [n](uint32_t r, uint32_t c) {
    return std::array<uint32_t, 3>{c, r / n, r % n};
  }));
  doc.sections.push_back(map_to_section(B.counit, "COUNIT", [](uint32_t, uint32_t c) {
    return std::array<uint32_t, 3>{c, 0, 0};
  }));
  return doc;
}

HscDocument doc_from_hopf(const HopfAlgebra& H) {
  HscDocument doc = doc_from_bialgebra(H.b);
  doc.sections.push_back(map_to_section(H.antipode, "ANTIPODE",
                                        [](uint32_t r, uint32_t c) {
                                          return std::array<uint32_t, 3>{c, r, 0};
                                        }));
  return doc;
}

HscDocument doc_from_lr(const LRBimodule& M, std::string algebra_ref,
                        std::string name) {
  const uint32_t n = M.hopf->b.dim;
  const uint32_t m = static_cast<uint32_t>(M.dim);
  HscDocument doc;
  doc.kind = HscKind::ModuleLR;
  doc.field = M.hopf->b.field;
  doc.name = std::move(name);
  doc.algdim = n;
  doc.dim = m;
  doc.algebra_ref = std::move(algebra_ref);
  doc.sections.push_back(map_to_section(M.lact.map, "LACT", [m](uint32_t r, uint32_t c) {
    return std::array<uint32_t, 3>{c / m, c % m, r};
  }));
  doc.sections.push_back(map_to_section(M.ract.map, "RACT", [n](uint32_t r, uint32_t c) {
    return std::array<uint32_t, 3>{c / n, c % n, r};
  }));
  doc.sections.push_back(
      map_to_section(M.lcoact.map, "LCOACT", [m](uint32_t r, uint32_t c) {
        return std::array<uint32_t, 3>{c, r / m, r % m};
      }));
  doc.sections.push_back(
      map_to_section(M.rcoact.map, "RCOACT", [n](uint32_t r, uint32_t c) {
        return std::array<uint32_t, 3>{c, r / n, r % n};
      }));
  validate_document(doc);
  return doc;
}

HscDocument doc_from_yd(const YDModule& M, std::string algebra_ref,
                        std::string name) {
  const uint32_t m = static_cast<uint32_t>(M.dim);
  HscDocument doc;
  doc.kind = HscKind::ModuleYD;
  doc.field = M.algebra->field;
  doc.name = std::move(name);
  doc.algdim = M.algebra->dim;
  doc.dim = m;
  doc.algebra_ref = std::move(algebra_ref);
  doc.sections.push_back(
      map_to_section(M.action.map, "ACT", [m](uint32_t r, uint32_t c) {
        return std::array<uint32_t, 3>{c / m, c % m, r};
      }));
  doc.sections.push_back(
      map_to_section(M.coaction.map, "COACT", [m](uint32_t r, uint32_t c) {
        return std::array<uint32_t, 3>{c, r / m, r % m};
      }));
  validate_document(doc);
  return doc;
}

Bialgebra doc_to_bialgebra(const HscDocument& doc) {
  require_kind(doc, HscKind::Algebra, "an algebra");
  validate_document(doc);
  const uint32_t n = doc.dim;
  Bialgebra B;
  B.field = doc.field;
  B.dim = n;
  B.name = doc.name;
  B.labels = doc.labels;
  if (B.labels.empty()) {
    B.labels.reserve(n);
    for (uint32_t t = 0; t < n; ++t) B.labels.push_back("e" + std::to_string(t));
  }
  B.mult = section_to_map(doc, "MULT", {n, n * n}, [n](const HscEntry& e) {
    return std::pair<uint32_t, uint32_t>{e.k, e.i * n + e.j};
  });
  B.unit = section_to_map(doc, "UNIT", {n, 1}, [](const HscEntry& e) {
    return std::pair<uint32_t, uint32_t>{e.i, 0};
  });
  B.comult = section_to_map(doc, "COMULT", {n * n, n}, [n](const HscEntry& e) {
    return std::pair<uint32_t, uint32_t>{e.j * n + e.k, e.i};
  });
  B.counit = section_to_map(doc, "COUNIT", {1, n}, [](const HscEntry& e) {
    return std::pair<uint32_t, uint32_t>{0, e.i};
  });
  return B;
}

HopfAlgebra doc_to_hopf(const HscDocument& doc) {
  Bialgebra B = doc_to_bialgebra(doc);
  if (find_section(doc, "ANTIPODE") != nullptr) {
    const uint32_t n = doc.dim;
    LinMap S = section_to_map(doc, "ANTIPODE", {n, n}, [](const HscEntry& e) {
      return std::pair<uint32_t, uint32_t>{e.j, e.i};
    });
    HopfAlgebra H{std::move(B), std::move(S), std::nullopt};
    H.antipode_inv = invert(H.antipode);
    return H;
  }
  std::optional<HopfAlgebra> H = try_hopf(std::move(B));
  if (!H)
    fail(Errc::SingularAntipode,
         "document has no ANTIPODE section and none is computable");
  return *std::move(H);
}

LRBimodule doc_to_lr(const HscDocument& doc, std::shared_ptr<const HopfAlgebra> H) {
  require_kind(doc, HscKind::ModuleLR, "an lr module");
  validate_document(doc);
  if (!H) fail(Errc::Usage, "doc_to_lr requires a base algebra");
  if (doc.field != H->b.field)
    fail(Errc::FieldError, "module field " + doc.field.str() +
                               " does not match base field " + H->b.field.str());
  if (doc.algdim != H->b.dim)
    fail(Errc::DimMismatch, "module algdim " + std::to_string(doc.algdim) +
                                " does not match base dim " +
                                std::to_string(H->b.dim));
  const uint32_t n = doc.algdim;
  const uint32_t m = doc.dim;
  auto base = bialgebra_of(H);
  LRBimodule M;
  M.hopf = std::move(H);
  M.dim = m;
  M.lact = {Side::Left, base, m,
            section_to_map(doc, "LACT", {m, n * m}, [m](const HscEntry& e) {
              return std::pair<uint32_t, uint32_t>{e.k, e.i * m + e.j};
            })};
  M.ract = {Side::Right, base, m,
            section_to_map(doc, "RACT", {m, m * n}, [n](const HscEntry& e) {
              return std::pair<uint32_t, uint32_t>{e.k, e.i * n + e.j};
            })};
  M.lcoact = {Side::Left, base, m,
              section_to_map(doc, "LCOACT", {n * m, m}, [m](const HscEntry& e) {
                return std::pair<uint32_t, uint32_t>{e.j * m + e.k, e.i};
              })};
  M.rcoact = {Side::Right, base, m,
              section_to_map(doc, "RCOACT", {m * n, m}, [n](const HscEntry& e) {
                return std::pair<uint32_t, uint32_t>{e.j * n + e.k, e.i};
              })};
  return M;
}

YDModule doc_to_yd(const HscDocument& doc, std::shared_ptr<const Bialgebra> B) {
  require_kind(doc, HscKind::ModuleYD, "a yd module");
  validate_document(doc);
  if (!B) fail(Errc::Usage, "doc_to_yd requires a base algebra");
  if (doc.field != B->field)
    fail(Errc::FieldError, "module field " + doc.field.str() +
                               " does not match base field " + B->field.str());
  if (doc.algdim != B->dim)
    fail(Errc::DimMismatch, "module algdim " + std::to_string(doc.algdim) +
                                " does not match base dim " +
                                std::to_string(B->dim));
  const uint32_t n = doc.algdim;
  const uint32_t m = doc.dim;
  YDModule M;
  M.algebra = B;
  M.dim = m;
  M.action = {Side::Left, B, m,
              section_to_map(doc, "ACT", {m, n * m}, [m](const HscEntry& e) {
                return std::pair<uint32_t, uint32_t>{e.k, e.i * m + e.j};
              })};
  M.coaction = {Side::Left, B, m,
                section_to_map(doc, "COACT", {n * m, m}, [m](const HscEntry& e) {
                  return std::pair<uint32_t, uint32_t>{e.j * m + e.k, e.i};
                })};
  return M;
}

}  // namespace hsc
