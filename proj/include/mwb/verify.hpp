#ifndef MWB_VERIFY_HPP
#define MWB_VERIFY_HPP

#include <string>
#include <vector>

#include "mwb/eval.hpp"

namespace mwb {

// One named cross-check suite pitting definable sets against independently
// computed expectations. max = 0 selects the suite's reference size, the one
// the acceptance run uses.
struct SuiteResult {
  std::string name;
  Report report;
  std::vector<std::string> notes;

  bool clean() const { return report.clean(); }
  std::string str() const;
};

std::vector<std::string> suite_names();

// Throws Error for unknown suite names.
SuiteResult run_suite(std::string const& name, size_t max = 0);

}  // namespace mwb

#endif
