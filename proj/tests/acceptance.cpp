// End-to-end acceptance run: one line per verified claim, nonzero exit on
// any failure.
#include <cstdio>
#include <vector>

#include "densityforge/verify.hpp"

int main() {
  const df::Envelope env;
  const std::vector<df::CheckResult> results = df::verify_suite("all", env);
  bool all_pass = true;
  int i = 0;
  for (const auto& res : results) {
    ++i;
    std::printf("criterion %2d [%s] %s\n", i, res.pass ? "PASS" : "FAIL",
                res.name.c_str());
    if (!res.pass) std::printf("    %s\n", res.detail.c_str());
    all_pass = all_pass && res.pass;
  }
  return all_pass ? 0 : 1;
}
