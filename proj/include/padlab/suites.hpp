#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "padlab/report.hpp"

namespace padlab {

/// Resolved parameters a suite runs with.
struct SuiteConfig {
  long p = 3;
  long n = 1;
  std::string a = "3";
  int precision = 40;
  int samples = 200;
  int iters = 50;
  std::uint64_t seed = 42;
  std::vector<long> field;  // extension modulus, constant term first
};

/// Caller-supplied overrides; unset fields fall back to the suite defaults.
struct SuiteOverrides {
  std::optional<long> p;
  std::optional<long> n;
  std::optional<std::string> a;
  std::optional<int> precision;
  std::optional<int> samples;
  std::optional<int> iters;
  std::optional<std::uint64_t> seed;
  std::optional<std::vector<long>> field;
};

struct SuiteInfo {
  std::string id;
  std::string description;
  SuiteConfig defaults;
  std::function<VerificationReport(const SuiteConfig&)> run;
};

/// Data-driven registry: adding a suite here is the only change needed for a
/// new check id to become available to `verify` and `report-all`.
const std::vector<SuiteInfo>& suite_registry();
const SuiteInfo* find_suite(const std::string& id);

SuiteConfig resolve_config(const SuiteInfo& info, const SuiteOverrides& over);

/// Run a suite, filling check_id/params; measures wall time into timing_ms
/// only when `collect_timing` is set (reports stay byte-deterministic
/// otherwise). NotRepresentableError becomes a not-representable verdict.
VerificationReport run_suite(const SuiteInfo& info, const SuiteOverrides& over,
                             bool collect_timing = false);

}  // namespace padlab
