// Runs the acceptance criteria; one PASS/FAIL line per criterion.

#include <iostream>
#include <string>
#include <vector>

#include "csplab/repro.hpp"

int main(int argc, char** argv) {
  csplab::ReproOptions options;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--sabotage-twist") {
      options.sabotage_twist = true;
    } else if (arg == "--parallel") {
      options.parallel = true;
    } else if (arg == "--list") {
      for (const auto& c : csplab::acceptance_criteria()) std::cout << c.id << " " << c.key << "\n";
      return 0;
    } else if (arg.rfind("--", 0) == 0) {
      std::cerr << "usage: acceptance [--sabotage-twist] [--parallel] [--list] [criterion...]\n";
      return 2;
    } else {
      options.only.push_back(arg);
    }
  }
  try {
    bool all = true;
    for (const auto& r : csplab::run_acceptance(options)) {
      std::cout << csplab::format_result(r);
      all = all && r.pass;
    }
    return all ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "acceptance: " << e.what() << "\n";
    return 2;
  }
}
