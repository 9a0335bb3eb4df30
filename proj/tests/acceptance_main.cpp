// Acceptance harness: runs every verification suite at its pinned bound and
// prints one pass/fail line per criterion. Exits nonzero on any failure.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "operm/checks.hpp"

namespace {

struct Criterion {
  const char* label;
  const char* suite;
};

const Criterion kCriteria[] = {
    {"criterion-1 worked-examples", "worked-examples"},
    {"criterion-2 operad-m", "operad-m"},
    {"criterion-3 connection", "connection"},
    {"criterion-4 axioms", "axioms"},
    {"criterion-5 coradical", "coradical"},
    {"criterion-6 quotients", "quotients"},
    {"criterion-7 hopf-kernel", "hopf-kernel"},
    {"criterion-8 dynkin", "dynkin"},
    {"criterion-9 fibers", "fibers"},
};

}  // namespace

int main() {
  int failed = 0;
  for (const auto& c : kCriteria) {
    try {
      operm::SuiteResult r = operm::run_suite(c.suite);
      if (r.passed) {
        std::printf("PASS %s (%lld checks)\n", c.label, r.instances);
      } else {
        ++failed;
        std::printf("FAIL %s (%lld checks, %zu failures)\n", c.label, r.instances,
                    r.failures.size());
        for (const auto& f : r.failures) std::printf("     %s\n", f.c_str());
      }
    } catch (const std::exception& e) {
      ++failed;
      std::printf("FAIL %s (exception: %s)\n", c.label, e.what());
    }
    std::fflush(stdout);
  }
  if (failed) {
    std::printf("%d of %zu criteria failed\n", failed,
                sizeof(kCriteria) / sizeof(kCriteria[0]));
    return 1;
  }
  std::printf("all %zu criteria passed\n", sizeof(kCriteria) / sizeof(kCriteria[0]));
  return 0;
}
