// Runs every acceptance criterion and prints one PASS/FAIL line each.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "itergroup/verify.hpp"

int main(int argc, char** argv) {
  itergroup::VerifyOptions opts;
  if (argc > 1) opts.seed = std::strtoull(argv[1], nullptr, 10);
  for (int i = 2; i < argc; ++i) opts.only.push_back(std::atoi(argv[i]));
  int failed = 0;
  itergroup::run_acceptance(opts, [&](const itergroup::CriterionResult& r) {
    std::printf("%s\n", itergroup::format_result(r).c_str());
    std::fflush(stdout);
    failed += r.passed ? 0 : 1;
  });
  std::printf("%d/%d criteria passed (seed %llu)\n", itergroup::kCriterionCount - failed,
              itergroup::kCriterionCount, static_cast<unsigned long long>(opts.seed));
  return failed == 0 ? 0 : 1;
}
