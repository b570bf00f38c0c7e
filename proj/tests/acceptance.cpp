// Acceptance run: each line is one criterion, PASS or FAIL, with wall time.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <sstream>
#include <string>
#include <vector>

#include "mwb/verify.hpp"

using namespace mwb;

namespace {

struct Criterion {
  std::string label;
  std::vector<std::string> suites;
  double limit_s = 0;  // 0 = no wall-clock requirement
};

void print_indented(std::string const& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) std::printf("    %s\n", line.c_str());
}

}  // namespace

int main() {
  std::vector<Criterion> plan = {
      {"mult-gadget", {"mult"}, 120.0},
      {"transfer-pairs", {"trans"}, 120.0},
      {"tuple-machinery", {"tuple"}, 0},
      {"ladder-and-iso", {"b-pairs", "iso"}, 0},
      {"translation-corpus", {"corpus"}, 0},
      {"coding-roundtrips", {"coding"}, 0},
      {"membership", {"membership"}, 0},
      {"kernels", {"kernel"}, 0},
      {"hierarchy", {"prenex"}, 0},
      {"orbit", {"orbit"}, 0},
  };

  int failures = 0;
  for (auto const& c : plan) {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (auto const& s : c.suites) {
      try {
        SuiteResult r = run_suite(s);
        if (!r.clean()) {
          ok = false;
          detail += r.str();
        }
      } catch (std::exception const& e) {
        ok = false;
        detail += s + ": " + e.what() + "\n";
      }
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    if (c.limit_s > 0 && secs >= c.limit_s) {
      ok = false;
      detail += "wall clock " + std::to_string(secs) + "s over the limit\n";
    }
    std::printf("%s %s (%.1fs)\n", ok ? "PASS" : "FAIL", c.label.c_str(),
                secs);
    std::fflush(stdout);
    if (!ok) {
      ++failures;
      print_indented(detail);
    }
  }
  return failures == 0 ? 0 : 1;
}
