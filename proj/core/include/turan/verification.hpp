#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace turan {

/// One named check of the reproduction battery. expected_source records
/// where the expected value comes from: "literature" (a published closed
/// form or theorem), "definition" (immediate from definitions), or
/// "computed" (an independent brute-force computation in this code base).
struct CheckResult {
  int criterion = 0;  // battery section the check belongs to
  std::string name;
  std::string inputs;
  std::string expected;
  std::string expected_source;
  std::string observed;
  std::string verdict;  // pass | fail | indeterminate
  double seconds = 0.0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  /// fail if any check failed, else indeterminate if any check was, else
  /// pass.
  std::string overall() const;

  std::string to_json() const;
  std::string to_text() const;
};

struct VerifyOptions {
  int threads = 1;
  std::uint64_t freeness_budget = 100'000'000;  // per member
  /// Streams one line per finished check when set.
  std::ostream* progress = nullptr;
};

/// Runs the complete self-contained verification battery: oracle against
/// closed form, family equivalences, construction certification, and
/// infrastructure invariants. Deterministic for any thread count.
VerificationReport run_verification_battery(const VerifyOptions& options = {});

}  // namespace turan
