#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "endosign/cli/json_io.hpp"

namespace endosign::cli {

/// Hard caps on verify bounds.
constexpr std::size_t kMaxRankCap = 3;
constexpr unsigned kMaxOrderCap = 6;
constexpr long kMaxPrimeCap = 101;

struct VerifyOptions {
  std::size_t max_rank = 3;
  unsigned max_order = 6;
  std::vector<long> primes = {3, 5, 7, 11, 13};
  std::uint64_t seed = 1;
  /// Random unimodular conjugates per randomized suite.
  std::size_t samples = 200;
  /// Worker threads; 0 means hardware concurrency.
  unsigned threads = 0;
};

const std::vector<std::string>& suite_names();

/// Throws InputError when a bound exceeds its cap or a prime is invalid.
void validate_options(const VerifyOptions& options);

/// An immutable unit of work; `key` decides the report order.
struct Case {
  std::string key;
  std::function<Check()> run;
};

/// Runs every case on a worker pool and returns results sorted by key.
/// Exceptions inside a case become failing checks.
std::vector<Check> run_cases(const std::vector<Case>& cases, unsigned threads);

/// Builds the cases of one suite ("all" expands to every suite).
std::vector<Case> suite_cases(const std::string& suite, const VerifyOptions& options);

/// Validates options, runs the suite and returns a finalized report.
Report verify(const std::string& suite, const VerifyOptions& options);

/// Root data used by the exhaustive suites, filtered by rank.
std::vector<std::string> verification_systems(std::size_t max_rank);

}  // namespace endosign::cli
