// Runs the acceptance battery and prints one PASS/FAIL line per criterion.
// Exit status is nonzero when any criterion fails.

#include <cstdlib>
#include <iostream>

#include "hcolor/verify.hpp"

int main(int argc, char** argv) {
  hcolor::VerifyOptions options;
  if (const char* env = std::getenv("HCOLOR_SEED")) options.seed = std::stoull(env);
  for (int i = 1; i < argc; ++i) options.only.emplace_back(argv[i]);
  const auto results = hcolor::run_verification(options);
  std::cout << hcolor::format_report(results);
  return hcolor::all_passed(results) ? 0 : 1;
}
