#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wittkit/ring.hpp"

namespace wittkit {

enum class Execution { Serial, Parallel };

struct SuiteOptions {
  RingSpec ring;
  std::size_t precision = 8;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  Execution execution = Execution::Parallel;
};

struct PropertyResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// First failing case (lowest trial index), inputs in the CLI grammars.
  std::optional<std::string> counterexample;
};

struct SuiteReport {
  std::string suite;
  SuiteOptions options;
  std::vector<PropertyResult> properties;
  /// Suites of `all` that do not apply to the ring, with the reason.
  std::vector<std::pair<std::string, std::string>> skipped;
  double seconds = 0;

  bool ok() const;
};

/// witt-axioms, frobenius-verschiebung, ..., all.
const std::vector<std::string>& suite_names();

/// Throws Error when the suite is unknown or does not apply to the ring.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options);

}  // namespace wittkit
