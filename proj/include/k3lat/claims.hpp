#pragma once

// The claim suite: each claim is one library call with frozen inputs plus the
// checks on its output.

#include <string>
#include <vector>

#include "k3lat/io.hpp"

namespace k3lat {

enum class ClaimStatus { Pass, Fail, UnverifiedResidual };
std::string to_string(ClaimStatus s);

struct ClaimRecord {
  std::string id;
  std::string description;
  std::string anchor;
  ClaimStatus status = ClaimStatus::Fail;
  Json witness;
  /// Names of the sub-checks that did not hold.
  std::vector<std::string> failed_checks;
  double seconds = 0;
  bool passed() const { return status == ClaimStatus::Pass; }
};

/// Sorted.
std::vector<std::string> claim_ids();
bool is_claim_id(const std::string& id);
/// Throws std::invalid_argument for an unknown id.
ClaimRecord run_claim(const std::string& id);
/// Runs the claims in parallel; the result is ordered by id.
std::vector<ClaimRecord> run_claims(const std::vector<std::string>& ids);

Json to_json(const ClaimRecord& c);

}  // namespace k3lat
