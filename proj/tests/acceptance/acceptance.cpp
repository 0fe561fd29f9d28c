// One line per acceptance criterion; nonzero exit if any fails.
#include <cstdio>

#include "qsep/cli.hpp"

int main() {
  const qsep::cli::RunOptions opts{42, 1};
  const auto criteria = qsep::cli::acceptance_criteria();
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto r = criteria[i](opts);
    if (!r.passed) ++failures;
    std::printf("%s  %s (%.2fs)%s%s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                r.detail.empty() ? "" : "  ", r.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
