// Acceptance suite: one exact check per criterion, one line per criterion.
// Exit status is the number of failed criteria.

#include <cstdio>

#include "gasket/verify.hpp"

int main() {
  int failed = 0;
  for (const auto& r : gasket::run_acceptance()) {
    std::puts(gasket::criterion_line(r).c_str());
    if (!r.pass) ++failed;
  }
  if (failed > 0)
    std::printf("%d criterion(s) failed — see the lines above for the exact "
                "computed-vs-stated values\n",
                failed);
  return failed;
}
