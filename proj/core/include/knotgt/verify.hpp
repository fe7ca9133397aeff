#pragma once

// Built-in verification suite: the golden worked examples plus the ten
// acceptance criteria (exact arithmetic, randomized suites driven by a
// seed).  The CLI's verify-paper subcommand and the acceptance test binary
// both run this.

#include <cstdint>
#include <string>
#include <vector>

#include "knotgt/jsj.hpp"

namespace knotgt::verify {

struct CriterionResult {
  std::string id;
  std::string name;
  bool passed = false;
  std::string detail;  // stats on success, first failures otherwise
};

struct Report {
  std::vector<CriterionResult> criteria;
  bool all_passed() const;
};

Report run_paper_suite(std::uint64_t seed);

// The classifier truth-table inputs and their frozen expected output.
struct GoldenCase {
  std::string label;
  std::string jsj_text;
  bool is_R = false;
  bool has_order_two_gt = false;
  bool has_any_gt_known = false;  // true means "yes", false means "unknown"
  std::vector<std::string> witness_pieces;
  std::string expected_json;
};

const std::vector<GoldenCase>& golden_cases();

}  // namespace knotgt::verify
