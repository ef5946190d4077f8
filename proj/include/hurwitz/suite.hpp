#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/moduli.hpp"

namespace hurwitz {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteConfig {
  GroupPtr group;
  std::size_t genus = 0;
  std::size_t n = 1;
  std::optional<BranchingType> type_filter;
  std::uint64_t seed = 1;
  std::uint64_t work_cap = kDefaultWorkCap;
  unsigned threads = 1;
  std::size_t random_families = 100;
};

// Runs every invariant suite that applies to (G, g, n). Braid suites are
// skipped for genus > 0.
std::vector<SuiteResult> run_invariant_suites(const SuiteConfig& config);

// Validation, fine roundtrip and unpointed classification for one family.
std::vector<SuiteResult> run_family_suites(const PointedFamily& F, const EnumerationOptions& options);

}  // namespace hurwitz
