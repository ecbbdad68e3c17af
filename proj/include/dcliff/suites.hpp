#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcliff/clifford.hpp"

namespace dcliff {

// Parameters outside a suite's supported range.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SuiteParams {
  // Unset fields take per-suite defaults; several suites sweep lists of m or k.
  std::optional<int> m;
  std::optional<int> k;
  std::optional<int> max_degree;
  std::string mode = "exhaustive";  // or "sample"
  std::size_t sample_size = 64;
  std::uint64_t seed = 0;
  std::optional<IdempotentSpec> spec;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;  // empty on pass
};

struct SuiteReport {
  std::string suite;
  SuiteParams params;
  std::vector<CheckResult> checks;  // sorted by name
  std::vector<std::string> notes;

  std::size_t pass_count() const;
  std::size_t fail_count() const;
  bool passed() const { return fail_count() == 0; }

  // {"suite", "params", "checks", "summary", "notes"} with a fixed key order.
  std::string to_json(int indent = 2) const;
  std::string to_text() const;
};

// SplitMix64 stream; the sampling rule depends only on this sequence.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

// `count` distinct indices of [0, population) from a partial Fisher-Yates
// shuffle driven by SplitMix64(seed), returned in increasing order. Everything
// is returned when count >= population.
std::vector<std::size_t> sample_indices(std::size_t population, std::size_t count, std::uint64_t seed);

// Kernel dimensions of D and D^2 on the degree-k Clifford-valued polynomials.
std::size_t dirac_kernel_dim(int m, int k);
std::size_t laplace_kernel_dim(int m, int k);

// Suites in the order `all` runs them.
const std::vector<std::string>& suite_names();

// Runs one suite, or every suite for "all" (check names prefixed "suite: ").
// Throws UsageError for unknown names or unsupported parameters.
SuiteReport run_suite(const std::string& name, const SuiteParams& params);

}  // namespace dcliff
