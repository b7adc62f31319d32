#pragma once

// Randomized self-check suites behind the `verify` CLI verb.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "freecoset/rep_engine.hpp"

namespace freecoset {

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
};

// suite: words | automorphisms | cosets | representation | all.
// Throws DomainError for an unknown suite name.
SuiteReport run_suite(std::string_view suite, std::uint64_t seed, const EngineOptions& opts = {});

}  // namespace freecoset
