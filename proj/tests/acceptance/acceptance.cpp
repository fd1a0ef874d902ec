// Runs the nine verification criteria at their pinned defaults and prints
// one line per criterion.  Exit code is the number of failures, so the
// harness fails iff any criterion fails.

#include <cstdio>

#include "sweep.hpp"

int main() {
  hivemv::SweepOptions opts;
  auto results = hivemv::run_acceptance(opts);
  int failures = 0;
  for (const auto& r : results) {
    std::printf("%-4s criterion %d: %s [%s]\n", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.details.c_str());
    if (!r.pass) ++failures;
  }
  return failures;
}
