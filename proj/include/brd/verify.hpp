#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "brd/algebra.hpp"

namespace brd {

// Classical (undecorated) composition oracle: stack c1 over c2, trace the
// strands, count closed loops.  Kept free of any engine code on purpose.
std::pair<std::int64_t, Connector> typeA_oracle_product(const Connector& c1,
                                                        const Connector& c2);

struct SuiteFailure {
  std::int64_t case_id = 0;
  std::string replay;  // CLI command line reproducing the case
  std::string expected;
  std::string actual;
};

struct SuiteReport {
  std::string suite;
  int n = 0;
  std::uint64_t seed = 0;
  std::int64_t cases = 0;
  std::vector<SuiteFailure> failures;
  double wall_seconds = 0;  // informational; not part of the dumped text
};

inline constexpr std::uint64_t kDefaultSeed = 12345;

// The twelve conformance suites, in canonical order.
const std::vector<std::string>& suite_names();

// budget <= 0 selects the defaults (sampled suites draw 10^4 cases; small
// case sets run exhaustively).  Fixed-case suites never truncate: a positive
// budget below their case count is reported as BudgetExceeded.
SuiteReport run_suite(const std::string& name, int n, std::int64_t budget = 0,
                      std::uint64_t seed = kDefaultSeed, int jobs = 1);

// "OK <suite> n=<n> cases=<k>" when clean, otherwise a FAIL header plus a
// "<suite> <n> <case-id> FAIL" block per failure with replay/expected/actual.
std::string dump_failures(const SuiteReport& report);

}  // namespace brd
