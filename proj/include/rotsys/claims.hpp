#pragma once

#include <string>
#include <vector>

namespace rotsys {

struct CountQuad {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int genus = 0;
  bool operator==(const CountQuad&) const = default;
};

// One verified row of the claims catalog. The quad describes the map the claim id names: the
// gadget itself for the count claims (5.1, 5.2, 7.1, 7.3), the planarized reduced drawing for
// 7.2, the planarized solver witness for 2.1, and the planarized crossing-free embedding for
// 3.1 / 3.2. pass is exactly componentwise quad equality; a violated side condition (surgery
// route disagreeing, a witness failing validation, a property sweep finding a counterexample)
// forces computed.genus to -1 with the reason in detail, so it can never pass silently.
struct ClaimReport {
  std::string claim;
  int n = 0;
  std::string variant;
  CountQuad expected;
  CountQuad computed;
  bool pass = false;
  std::string detail;
};

// Catalog ids: 2.1, 3.1, 3.2, 5.1, 5.2, 7.1, 7.2, 7.3.
std::vector<std::string> claim_ids();

// The n values a bare `claims --claim <id>` runs.
std::vector<int> claim_default_ns(const std::string& claim);

// Throws input_error for unknown ids or n outside the claim's validity range.
std::vector<ClaimReport> run_claim(const std::string& claim, const std::vector<int>& ns,
                                   int jobs = 1);

std::vector<ClaimReport> run_all_claims(int jobs = 1);

}  // namespace rotsys
