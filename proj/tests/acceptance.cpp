#include <iostream>

#include "spechthom/verify.hpp"

int main() {
  const auto report = spechthom::run_paper_suite({});
  spechthom::print_report(report, std::cout);
  return report.all_pass() ? 0 : 1;
}
