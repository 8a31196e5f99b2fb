// One line per acceptance criterion. Exit status is nonzero if any criterion
// fails; skipped criteria (data-gated) do not fail the run.
//
// Criterion 7 is a --long item in the CLI but finishes in well under a
// second, so it always runs here. The slow rows of criterion 5 (m=15,16) run
// only with --long.

#include <cstdio>
#include <cstring>

#include "covlab/verification.hpp"

using namespace covlab;

int main(int argc, char** argv) {
  VerifyOptions options;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--long") == 0) options.long_mode = true;
    if (std::strcmp(argv[i], "--biplanes") == 0 && i + 1 < argc) options.biplane_dir = argv[++i];
  }
  int failed = 0;
  for (int id = 1; id <= kCriterionCount; ++id) {
    VerifyOptions run = options;
    if (id == 7) run.long_mode = true;
    const CriterionResult r = run_criterion(id, run);
    std::printf("criterion %2d %-4s %7.1fs  %s: %s\n", r.id, to_string(r.outcome).c_str(), r.seconds, r.title.c_str(),
                r.detail.c_str());
    std::fflush(stdout);
    if (r.outcome == Outcome::Fail) ++failed;
  }
  std::printf("%d of %d criteria failed\n", failed, kCriterionCount);
  return failed == 0 ? 0 : 1;
}
