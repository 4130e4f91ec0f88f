#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace apnkit::cli {

struct Check {
  int criterion = 0;
  std::string tag;
  std::string instance;
  std::string expected;
  std::string measured;
  bool pass = false;
};

struct SuiteOptions {
  unsigned n_max = 8;        // upper n for exhaustive sweeps
  unsigned samples = 100;    // random tables per n
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

struct Criterion {
  int id;
  std::string_view title;
  std::vector<Check> (*run)(const SuiteOptions&);
};

enum class Suite { kExamples, kPower, kF0a, kIdentities, kAll };

std::optional<Suite> suite_from_string(std::string_view s);
std::span<const Criterion> criteria();
std::vector<int> suite_criteria(Suite s);
std::vector<Check> run_criterion(int id, const SuiteOptions& opts);
std::vector<Check> run_suite(Suite s, const SuiteOptions& opts);

}  // namespace apnkit::cli
