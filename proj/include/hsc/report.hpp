#ifndef HSC_REPORT_HPP
#define HSC_REPORT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hsc/chain.hpp"

namespace hsc {

// One named identity, checked to a verdict.
struct AxiomEntry {
  std::string name;
  CheckResult result;
};

// The result of checking a family of identities on one subject.
struct AxiomReport {
  std::string subject;
  std::vector<AxiomEntry> entries;

  bool all_passed() const {
    for (const auto& e : entries)
      if (!e.result.passed) return false;
    return true;
  }
  const AxiomEntry* find(std::string_view name) const {
    for (const auto& e : entries)
      if (e.name == name) return &e;
    return nullptr;
  }
};

// Renders "-" for a pass, or "(row,col) lhs=A rhs=B" for a failure.
std::string witness_str(const CheckResult& r);

// Stable line-oriented summary: header comments, one line per entry in the
// form suite<TAB>axiom<TAB>PASS|FAIL<TAB>witness, then an overall line.
struct CheckSummary {
  std::string version;
  std::vector<std::pair<std::string, std::string>> inputs;  // (name, digest)
  uint64_t seed = 0;
  uint32_t samples = 0;
  std::vector<AxiomReport> reports;

  bool overall() const {
    for (const auto& r : reports)
      if (!r.all_passed()) return false;
    return true;
  }
  std::string render() const;
};

}  // namespace hsc

#endif
