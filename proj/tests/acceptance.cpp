// Acceptance criteria 1-10; one line per criterion, nonzero exit on failure.
#include <iostream>

#include "ehftw/suite.hpp"

int main() {
  ehftw::SuiteConfig cfg;
  auto report = ehftw::run_suite(cfg, [](const ehftw::CriterionResult& r) {
    std::cout << ehftw::summary_line(r) << std::endl;
    for (std::size_t i = 1; i < r.failures.size(); ++i) std::cout << "    " << r.failures[i] << '\n';
  });
  std::cout << (report.passed() ? "acceptance: all criteria passed" : "acceptance: FAILED") << std::endl;
  return report.passed() ? 0 : 1;
}
