#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace koszul {

enum class Status { Verified, VerifiedAtCutoff, Inconclusive, Refuted };

std::string status_name(Status s);

struct Witness {
  int i = 0;
  int j = 0;
  std::string values;
};

/// Outcome of one check on one subject. Refuted is only produced from
/// comparisons where both sides are exact.
struct Verdict {
  std::string check;
  std::string subject;
  Status status = Status::Inconclusive;
  std::string detail;
  std::optional<Witness> witness;
  std::vector<std::pair<std::string, int>> cutoffs;
  /// For Inconclusive: which side of the comparison was cutoff-limited.
  std::string limited_side;
};

/// Worst status first: Refuted, Inconclusive, VerifiedAtCutoff, Verified.
Status combine(Status a, Status b);

}  // namespace koszul
