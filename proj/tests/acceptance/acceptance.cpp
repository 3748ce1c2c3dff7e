#include <cstdlib>
#include <iostream>
#include <string>

#include "jordan/suite/acceptance.hpp"

// Runs every acceptance criterion, or only the ids given on the command
// line, and prints one PASS/FAIL line per criterion.
int main(int argc, char** argv) {
  bool all_pass = true;
  for (const auto& c : jordan::acceptance_criteria()) {
    if (argc > 1) {
      bool wanted = false;
      for (int i = 1; i < argc; ++i) wanted = wanted || std::atoi(argv[i]) == c.id;
      if (!wanted) continue;
    }
    auto res = jordan::run_criterion(c);
    std::cout << res.summary() << std::endl;
    all_pass = all_pass && res.pass();
  }
  return all_pass ? 0 : 1;
}
