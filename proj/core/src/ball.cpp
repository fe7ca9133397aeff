#include "knotgt/ball.hpp"

#include <map>
#include <utility>

namespace knotgt {

using seifert::Element;
using seifert::ElementLess;
using seifert::GroupKind;
using seifert::GroupSpec;

std::vector<BallEntry> generator_ball(const GroupSpec& spec, int radius) {
  if (radius < 0) {
    throw InvalidArgument("ball radius must be nonnegative");
  }

  std::vector<std::pair<std::string, Element>> letters;
  auto add_letter = [&](char name) {
    Element g = seifert::generator(spec, name);
    letters.emplace_back(std::string(1, name), g);
    letters.emplace_back(std::string(1, name) + "^-1", seifert::invert(g));
  };
  add_letter('a');
  add_letter('b');
  if (spec.kind() == GroupKind::Cable) {
    add_letter('c');
  }

  std::vector<BallEntry> out;
  std::map<Element, bool, ElementLess> seen;

  out.push_back(BallEntry{seifert::identity(spec), ""});
  seen.emplace(out.front().element, true);

  std::size_t frontier_begin = 0;
  for (int len = 1; len <= radius; ++len) {
    std::size_t frontier_end = out.size();
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      for (const auto& [name, g] : letters) {
        Element next = seifert::multiply(out[i].element, g);
        if (seen.emplace(next, true).second) {
          std::string word = out[i].word.empty() ? name : out[i].word + " " + name;
          out.push_back(BallEntry{std::move(next), std::move(word)});
        }
      }
    }
    frontier_begin = frontier_end;
  }
  return out;
}

}  // namespace knotgt
