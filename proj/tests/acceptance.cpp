// Acceptance suite: runs every verification check and prints one pass/fail
// line per check. Exits nonzero if anything fails.

#include <cstring>
#include <iostream>

#include "binform/verify.hpp"

int main(int argc, char** argv) {
  int jobs = 1;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--jobs") == 0 && i + 1 < argc)
      jobs = std::atoi(argv[++i]);
  }
  std::vector<binform::CheckRecord> records;
  try {
    records = binform::run_checks({}, jobs);
  } catch (const std::exception& e) {
    std::cerr << "acceptance suite aborted: " << e.what() << "\n";
    return 2;
  }
  std::cout << binform::format_table(records);
  for (const auto& r : records)
    if (r.status != "pass") return 1;
  return 0;
}
