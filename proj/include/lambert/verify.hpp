#pragma once

#include <chrono>
#include <string>
#include <utility>
#include <vector>

namespace lambert::verify {

struct CheckResult {
  std::string id;
  std::string range;
  bool pass = true;
  std::string counterexample;  // empty when the check passes
};

struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<CheckResult> checks;
  std::chrono::milliseconds elapsed{0};

  bool all_pass() const;
};

struct Bounds {
  int max_n = 60;              // inverse-matrix sweeps
  int max_m = 60;              // correction / recurrence sweeps
  int series_order = 200;      // product and partition-table integrity
  int factorization_order = 40;  // base factorization identities
  int generalized_order = 30;    // shifted and (m,k) identities
};

Bounds quick_bounds();

const std::vector<std::string>& suite_names();  // without "all"
bool is_suite(const std::string& id);

// Worker count: LAMBERT_THREADS when set, hardware concurrency otherwise.
unsigned worker_count_from_env();

// Runs one suite (or "all") with results in definition order regardless of
// scheduling. Check bodies are pure; each failure carries its first
// counterexample.
RunReport run_suite(const std::string& suite_id, const Bounds& bounds,
                    unsigned workers);

}  // namespace lambert::verify
