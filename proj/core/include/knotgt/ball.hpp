#pragma once

// Enumeration of the ball of generator words in a group, deduplicated by
// normal form.  Words are spelled over the presentation generators and
// their inverses in the fixed letter order a, a^-1, b, b^-1 (, c, c^-1);
// breadth-first by length, so each element keeps its length-lex minimal
// spelling.  Entry 0 is always the identity with the empty spelling.

#include <string>
#include <vector>

#include "knotgt/seifert.hpp"

namespace knotgt {

struct BallEntry {
  seifert::Element element;
  std::string word;  // minimal spelling, parseable by parse_element
};

std::vector<BallEntry> generator_ball(const seifert::GroupSpec& spec, int radius);

}  // namespace knotgt
