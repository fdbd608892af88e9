#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace orbitres {

struct SelfCheckFailure {
  std::string check;
  std::string orbit;  // "so8 [3,2^2,1]"
  std::string detail;
};

struct SelfCheckSummary {
  int max_m = 0;
  std::int64_t orbits_checked = 0;
  std::int64_t bcd_orbits_checked = 0;
  std::int64_t in_image_pairs = 0;  // (d, q) pairs with d in the image of S_q
  std::int64_t no_verdicts = 0;
  std::vector<std::string> no_verdict_orbits;  // only collected for m <= 8
  std::vector<SelfCheckFailure> failures;

  bool ok() const noexcept { return failures.empty(); }
};

/// Runs, over every classical orbit with m <= max_m: agreement of the
/// closed-form and search verdicts, even => Yes, Yes => polarizable,
/// integrality of every N(P) exponent, and for non-zero sp/so orbits
/// Pic trivial <=> factorial together with l = 0 => Pic of rank 0.
SelfCheckSummary run_selfcheck(int max_m);

}  // namespace orbitres
