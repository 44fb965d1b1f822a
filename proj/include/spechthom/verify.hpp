#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace spechthom {

struct SuiteItem {
  std::string name;
  std::string instance;
  std::string expected;
  std::string computed;
  bool pass = false;
  double elapsed_ms = 0.0;
};

struct SuiteReport {
  std::vector<SuiteItem> items;
  bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return !items.empty();
  }
};

struct SuiteOptions {
  std::uint64_t seed = 42;
  int max_n = 0;   // 0 = per-suite default
  int threads = 0; // 0 = hardware concurrency
};

// The full battery of paper checks: examples, identities, equivariance,
// rank and basis statements. One item per criterion.
SuiteReport run_paper_suite(const SuiteOptions& opts = {});

// Module-level randomized and exhaustive invariants.
SuiteReport run_properties_suite(const SuiteOptions& opts = {});

void print_report(const SuiteReport& report, std::ostream& os);
// Stable output: timings are omitted so reruns with the same seed and flags
// are byte-identical.
nlohmann::ordered_json report_json(const SuiteReport& report);

} // namespace spechthom
