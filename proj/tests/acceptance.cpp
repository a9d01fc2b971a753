// One line per acceptance criterion; exit status is the number of failures.
#include "rmc/suites.hpp"

#include <cstdio>

int main() {
  const char* criteria[] = {"star-identity", "factorization", "regular-factorization", "right-ideal",
                            "balanced-inverse", "inversion",  "witness-family",        "suffix-tracer",
                            "s-growth",         "n-sequence", "budget",                "fpref"};
  int failures = 0;
  int i = 0;
  for (const char* name : criteria) {
    ++i;
    rmc::SuiteOptions opts;
    opts.parallel = 4;
    rmc::SuiteResult r = rmc::run_suite(name, opts);
    if (!r.pass)
      for (const auto& l : r.lines) std::printf("    %s\n", l.c_str());
    std::printf("criterion %2d %-22s %s (%.2f s)\n", i, name, r.pass ? "PASS" : "FAIL", r.seconds);
    failures += r.pass ? 0 : 1;
  }
  return failures;
}
