#include "hsc/report.hpp"

#include <sstream>

namespace hsc {

std::string witness_str(const CheckResult& r) {
  if (r.passed) return "-";
  if (!r.witness) return "?";
  std::ostringstream os;
  os << "(" << r.witness->row << "," << r.witness->col << ") lhs=" << r.witness->lhs
     << " rhs=" << r.witness->rhs;
  if (r.sampled) os << " [sampled]";
  return os.str();
}

std::string CheckSummary::render() const {
  std::ostringstream os;
  os << "# hsc-summary 1\n";
  os << "# version " << version << "\n";
  for (const auto& [name, digest] : inputs) os << "# input " << name << " " << digest << "\n";
  os << "# seed " << seed << " samples " << samples << "\n";
  for (const auto& rep : reports)
    for (const auto& e : rep.entries)
      os << rep.subject << "\t" << e.name << "\t" << (e.result.passed ? "PASS" : "FAIL")
         << "\t" << witness_str(e.result) << "\n";
  os << "# overall " << (overall() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace hsc
