#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace interlace {

/// Knobs for the cross-method identity suite.
struct VerifyOptions {
  /// Caps every graph/digraph size bound used by the checks. Without it the
  /// suite runs at full size (exhaustive up to 6 vertices, n = 20 timing run).
  std::optional<std::size_t> max_n;
  std::uint64_t seed = 1;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  std::string summary;
  bool passed = false;
  std::string detail;  // instance counts, or the first counterexample
  double seconds = 0.0;
};

struct Criterion {
  int id;
  std::string name;
  std::string summary;
  std::function<CriterionResult(const VerifyOptions&)> run;
};

/// The ten identity checks in a fixed order.
const std::vector<Criterion>& criteria();

/// Runs every criterion; on_result (if given) sees each result as it completes.
std::vector<CriterionResult> run_verification(
    const VerifyOptions& options, const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS  1 name  (detail)", with "  [1.23s]" appended when with_timing.
std::string format_result_line(const CriterionResult& r, bool with_timing = false);

}  // namespace interlace
