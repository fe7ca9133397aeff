#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <vector>

#include "knotgt/seifert.hpp"
#include "support/oracles.hpp"

using namespace knotgt;
using seifert::Element;
using seifert::GroupKind;
using seifert::GroupSpec;

namespace {

GroupSpec t23() { return seifert::make_group(GroupKind::TorusKnot, 2, 3); }
GroupSpec t35() { return seifert::make_group(GroupKind::TorusKnot, 3, 5); }
GroupSpec c23() { return seifert::make_group(GroupKind::Cable, 2, 3); }
GroupSpec c32() { return seifert::make_group(GroupKind::Cable, 3, 2); }

// Independent letter-fold evaluator for torus knot groups: one letter at a
// time, explicit Euclidean folding.  Used as the coset-rewriting oracle for
// parse_element's derived examples.
std::pair<Int, std::vector<freeprod::Syllable>> fold_torus(
    const GroupSpec& spec, const std::vector<std::pair<int, int>>& letters) {
  Int central = 0;
  std::vector<freeprod::Syllable> word;
  for (const auto& [f, e] : letters) {
    Int exp = e;
    if (!word.empty() && word.back().factor == f) {
      exp += word.back().exponent;
      word.pop_back();
    }
    const Int& m = f == 0 ? spec.p() : spec.q();
    Int carry = floor_div(exp, m);
    central += carry;
    exp -= carry * m;
    if (exp != 0) {
      word.push_back(freeprod::Syllable{f, exp});
    }
  }
  return {central, word};
}

}  // namespace

TEST_CASE("make_group: derived constants and validation") {
  GroupSpec trefoil = t23();
  CHECK(trefoil.quotient_factors().first == freeprod::FactorSpec::finite(2));
  CHECK(trefoil.quotient_factors().second == freeprod::FactorSpec::finite(3));
  CHECK(trefoil.second_letter() == 'b');

  GroupSpec cable = c23();
  CHECK(cable.quotient_factors().second == freeprod::FactorSpec::infinite_cyclic());
  CHECK(cable.cable_r() == 2);  // 2*2 - 3*1 = 1
  CHECK(cable.cable_s() == 1);
  CHECK(cable.second_letter() == 'd');

  CHECK(seifert::make_group(GroupKind::Cable, 2, 5).cable_r() == 3);  // 2*3 - 5*1 = 1
  CHECK(seifert::make_group(GroupKind::Cable, 2, 5).cable_s() == 1);
  CHECK(seifert::make_group(GroupKind::Cable, 4, 3).cable_r() == 1);  // 4*1 - 3*1 = 1
  CHECK(seifert::make_group(GroupKind::Cable, 4, 3).cable_s() == 1);

  // q = 1 degenerates gracefully: r = 1, s = p - 1, and the relator
  // b^q c^p = a^p still holds through the basis change.
  GroupSpec solid = seifert::make_group(GroupKind::Cable, 5, 1);
  CHECK(solid.cable_r() == 1);
  CHECK(solid.cable_s() == 4);
  CHECK(seifert::equals(seifert::parse_element(solid, "b c c c c c"),
                        seifert::parse_element(solid, "a^5")));
  CHECK(seifert::equals(seifert::parse_element(solid, "a^5"),
                        seifert::generator(solid, 'h')));

  CHECK_THROWS_AS(seifert::make_group(GroupKind::TorusKnot, 2, 4), InvalidArgument);
  CHECK_THROWS_AS(seifert::make_group(GroupKind::TorusKnot, 1, 3), InvalidArgument);
  CHECK_THROWS_AS(seifert::make_group(GroupKind::TorusKnot, 2, 1), InvalidArgument);
  CHECK_THROWS_AS(seifert::make_group(GroupKind::Cable, 2, 0), InvalidArgument);
  CHECK_THROWS_AS(seifert::make_group(GroupKind::Cable, 6, 3), InvalidArgument);
  CHECK_THROWS_AS(t23().cable_r(), InvalidArgument);
}

TEST_CASE("parse_element: worked examples") {
  GroupSpec spec = t23();

  Element aa = seifert::parse_element(spec, "a a");
  CHECK(aa.central() == 1);
  CHECK(aa.word().empty());

  // [a,b] in T(2,3): oracle fold of a^-1 b^-1 a b, frozen normal form, and
  // the product against the hand-inverted word.
  Element g = seifert::parse_element(spec, "[a,b]");
  auto oracle = fold_torus(spec, {{0, -1}, {1, -1}, {0, 1}, {1, 1}});
  CHECK(g.central() == oracle.first);
  CHECK(g.word().syllables() == oracle.second);
  CHECK(g.central() == -2);
  CHECK(seifert::word_text(g) == "a b^2 a b");
  CHECK(seifert::multiply(g, seifert::parse_element(spec, "inv(b) inv(a) b a")).is_identity());

  // Cable basis change: b c = h d^-1 in C(2,3).
  Element bc = seifert::parse_element(c23(), "b c");
  CHECK(bc.central() == 1);
  CHECK(seifert::word_text(bc) == "d^-1");
  CHECK(seifert::abelianize(bc) == seifert::AbelianImage{GroupKind::Cable, 2, 1});
}

TEST_CASE("parse_element: grammar corners") {
  GroupSpec spec = t23();
  CHECK(seifert::parse_element(spec, "").is_identity());
  CHECK(seifert::parse_element(spec, "   ").is_identity());
  CHECK(seifert::equals(seifert::parse_element(spec, "a^2"), seifert::generator(spec, 'h')));
  CHECK(seifert::equals(seifert::parse_element(spec, "a^0"), seifert::identity(spec)));
  CHECK(seifert::equals(seifert::parse_element(spec, "a^-1"),
                        seifert::invert(seifert::generator(spec, 'a'))));
  CHECK(seifert::equals(seifert::parse_element(spec, "h^-2"), seifert::central_power(spec, -2)));
  CHECK(seifert::equals(seifert::parse_element(spec, "inv(a b)"),
                        seifert::invert(seifert::parse_element(spec, "a b"))));
  CHECK(seifert::equals(seifert::parse_element(spec, "inv(inv(b))"), seifert::generator(spec, 'b')));
  CHECK(seifert::equals(seifert::parse_element(spec, "[a,[a,b]]"),
                        seifert::parse_element(spec, "inv(a) inv([a,b]) a [a,b]")));
  CHECK(seifert::equals(seifert::parse_element(spec, "  a   b  "),
                        seifert::parse_element(spec, "a b")));

  // Large exponents stay exact.
  Element big = seifert::parse_element(spec, "a^1000001");
  CHECK(big.central() == 500000);
  CHECK(seifert::word_text(big) == "a");

  CHECK(seifert::equals(seifert::parse_element(c23(), "d^3 d^-3"), seifert::identity(c23())));
}

TEST_CASE("parse_element: errors carry positions") {
  GroupSpec spec = t23();
  auto col_of = [&](const std::string& text) {
    try {
      seifert::parse_element(spec, text);
    } catch (const ParseError& e) {
      return e.col;
    }
    return std::size_t(0);
  };
  CHECK(col_of("x") == 1);
  CHECK(col_of("a x") == 3);
  CHECK(col_of("c") == 1);      // 'c' undefined for torus knot groups
  CHECK(col_of("a d") == 3);    // 'd' likewise
  CHECK(col_of("foo") == 1);    // multi-letter identifier
  CHECK(col_of("a ^ b") == 5);  // exponent must be an integer
  CHECK(col_of("a^") == 3);
  CHECK(col_of("[a b]") == 5);  // "a b" parses as one word, the comma is missing at ']'
  CHECK(col_of("[a,b") == 5);   // missing bracket
  CHECK(col_of("inv a") == 5);  // missing parenthesis
  CHECK(col_of("a ]") == 3);    // trailing input
  CHECK(col_of("a^-") == 3);
  CHECK(seifert::parse_element(c23(), "c d").spec().kind() == GroupKind::Cable);
}

TEST_CASE("multiply / invert / power / equals") {
  GroupSpec spec = t23();
  Element a = seifert::generator(spec, 'a');
  Element h = seifert::generator(spec, 'h');
  Element g = seifert::parse_element(spec, "[a,b]");

  CHECK(seifert::equals(seifert::multiply(seifert::identity(spec), g), g));
  CHECK(seifert::equals(seifert::multiply(a, a), h));
  CHECK(seifert::multiply(g, seifert::invert(g)).is_identity());
  CHECK(seifert::equals(seifert::invert(h), seifert::central_power(spec, -1)));
  CHECK(seifert::invert(seifert::identity(spec)).is_identity());

  Element g35 = seifert::parse_element(t35(), "[a,b]");
  CHECK(seifert::multiply(g35, seifert::invert(g35)).is_identity());
  CHECK(seifert::multiply(seifert::invert(g35), g35).is_identity());

  CHECK(seifert::equals(seifert::power(a, 6), seifert::central_power(spec, 3)));
  CHECK(seifert::equals(seifert::power(g, -2), seifert::invert(seifert::multiply(g, g))));
  CHECK(seifert::power(g, 0).is_identity());

  CHECK(seifert::equals(seifert::parse_element(spec, "a a b b b^-1 b^-1"),
                        seifert::parse_element(spec, "a a")));
  CHECK(seifert::equals(seifert::parse_element(spec, "a^2"), seifert::parse_element(spec, "b^3")));
  CHECK_FALSE(seifert::equals(seifert::generator(spec, 'a'), seifert::generator(spec, 'b')));

  CHECK_THROWS_AS(seifert::multiply(a, seifert::generator(t35(), 'a')), SpecMismatch);
  CHECK_THROWS_AS(seifert::equals(a, seifert::generator(c23(), 'a')), SpecMismatch);
}

TEST_CASE("project and abelianize: worked examples") {
  GroupSpec spec = t23();
  CHECK(seifert::project(seifert::generator(spec, 'h')).empty());
  CHECK(seifert::word_text(seifert::parse_element(spec, "[a,b]")) == "a b^2 a b");
  CHECK(seifert::word_text(seifert::parse_element(c23(), "[a,b]")) == "a d^-2 a d^2");

  CHECK(seifert::abelianize(seifert::generator(spec, 'a')) ==
        seifert::AbelianImage{GroupKind::TorusKnot, 3, 0});
  CHECK(seifert::abelianize(seifert::generator(spec, 'b')) ==
        seifert::AbelianImage{GroupKind::TorusKnot, 2, 0});
  CHECK(seifert::abelianize(seifert::generator(spec, 'h')) ==
        seifert::AbelianImage{GroupKind::TorusKnot, 6, 0});
  CHECK(seifert::abelianize(seifert::parse_element(spec, "[a,b]")).is_zero());

  GroupSpec cable = c23();
  CHECK(seifert::abelianize(seifert::generator(cable, 'h')) ==
        seifert::AbelianImage{GroupKind::Cable, 6, 2});
  CHECK(seifert::abelianize(seifert::generator(cable, 'a')) ==
        seifert::AbelianImage{GroupKind::Cable, 3, 1});
  CHECK(seifert::abelianize(seifert::generator(cable, 'b')) ==
        seifert::AbelianImage{GroupKind::Cable, 2, 0});
  CHECK(seifert::abelianize(seifert::generator(cable, 'c')) ==
        seifert::AbelianImage{GroupKind::Cable, 0, 1});
  CHECK(seifert::abelianize(seifert::parse_element(cable, "[a,c]")).is_zero());
}

TEST_CASE("normal-form soundness: relator insertion never changes the element") {
  testsupport::Rng rng(5150);
  for (const GroupSpec& spec : {t23(), t35(), c23(), c32()}) {
    std::vector<std::vector<std::string>> relators;
    auto rep = [](const std::string& s, long k) {
      return std::vector<std::string>(static_cast<std::size_t>(k), s);
    };
    long p = static_cast<long>(spec.p());
    long q = static_cast<long>(spec.q());
    if (spec.kind() == GroupKind::TorusKnot) {
      auto r1 = rep("a", p);
      auto tail = rep("b^-1", q);
      r1.insert(r1.end(), tail.begin(), tail.end());
      relators.push_back(r1);
    } else {
      auto r1 = rep("b", q);
      auto mid = rep("c", p);
      auto tail = rep("a^-1", p);
      r1.insert(r1.end(), mid.begin(), mid.end());
      r1.insert(r1.end(), tail.begin(), tail.end());
      relators.push_back(r1);
      relators.push_back({"b^-1", "c^-1", "b", "c"});
    }
    std::vector<std::string> letters = testsupport::letter_names(spec);
    for (int i = 0; i < 120; ++i) {
      std::vector<std::string> word;
      long len = rng.range(0, 8);
      for (long j = 0; j < len; ++j) {
        word.push_back(
            letters[static_cast<std::size_t>(rng.below(static_cast<long>(letters.size())))]);
      }
      auto spliced = word;
      const auto& rel =
          relators[static_cast<std::size_t>(rng.below(static_cast<long>(relators.size())))];
      auto pos = static_cast<std::size_t>(rng.below(static_cast<long>(word.size()) + 1));
      spliced.insert(spliced.begin() + static_cast<long>(pos), rel.begin(), rel.end());
      auto join = [](const std::vector<std::string>& parts) {
        std::string out;
        for (const auto& part : parts) {
          out += out.empty() ? part : " " + part;
        }
        return out;
      };
      CHECK(seifert::equals(seifert::parse_element(spec, join(word)),
                            seifert::parse_element(spec, join(spliced))));
    }
  }
}

TEST_CASE("h is central; homomorphism laws (fuzzed)") {
  testsupport::Rng rng(6021023);
  for (const GroupSpec& spec : {t23(), t35(), c23()}) {
    Element h = seifert::generator(spec, 'h');
    for (int i = 0; i < 150; ++i) {
      Element x = testsupport::random_element(rng, spec, 0, 6);
      Element y = testsupport::random_element(rng, spec, 0, 6);
      CHECK(seifert::equals(seifert::conjugate_by(x, h), h));
      CHECK(seifert::equals(seifert::multiply(x, h), seifert::multiply(h, x)));
      CHECK(seifert::project(seifert::multiply(x, y)) ==
            freeprod::concat_reduce(seifert::project(x), seifert::project(y)));
      seifert::AbelianImage ax = seifert::abelianize(x);
      seifert::AbelianImage ay = seifert::abelianize(y);
      seifert::AbelianImage axy = seifert::abelianize(seifert::multiply(x, y));
      CHECK(axy.first == ax.first + ay.first);
      CHECK(axy.second == ax.second + ay.second);
      // The abelianization filter is necessary, never sufficient on its own:
      // equality is exactly filter plus identical normal form.
      CHECK(seifert::equals(x, y) ==
            (ax == ay && x.central() == y.central() && x.word() == y.word()));
    }
  }
}

TEST_CASE("conjugate_by: worked examples") {
  GroupSpec spec = t23();
  Element a = seifert::generator(spec, 'a');
  Element g = seifert::parse_element(spec, "[a,b]");
  CHECK(seifert::conjugate_by(a, seifert::identity(spec)).is_identity());
  CHECK(seifert::equals(seifert::conjugate_by(seifert::generator(spec, 'h'), g), g));
  CHECK(seifert::equals(seifert::conjugate_by(a, g), seifert::invert(g)));
}

TEST_CASE("are_conjugate: worked examples") {
  GroupSpec spec = t23();
  Element g = seifert::parse_element(spec, "[a,b]");
  Element a = seifert::generator(spec, 'a');

  auto self = seifert::are_conjugate(g, g);
  REQUIRE(self.has_value());
  CHECK(self->is_identity());

  auto w = seifert::are_conjugate(g, seifert::invert(g));
  REQUIRE(w.has_value());
  CHECK(seifert::equals(*w, a));
  CHECK(seifert::equals(seifert::conjugate_by(*w, g), seifert::invert(g)));

  // Odd type: [a,b] is not conjugate to its inverse in T(3,5); the
  // exhaustive oracle at radius 6 agrees.
  Element g35 = seifert::parse_element(t35(), "[a,b]");
  CHECK_FALSE(seifert::are_conjugate(g35, seifert::invert(g35)).has_value());
  CHECK_FALSE(testsupport::brute_element_conjugator(g35, seifert::invert(g35), 6).has_value());

  // Distinct central powers are never conjugate.
  CHECK_FALSE(seifert::are_conjugate(seifert::central_power(spec, 1),
                                     seifert::central_power(spec, -1))
                  .has_value());
  // Factor powers: a-lifts and b-lifts are separated.
  CHECK_FALSE(seifert::are_conjugate(a, seifert::generator(spec, 'b')).has_value());
}

TEST_CASE("are_conjugate: central-offset independence and conjugation closure (fuzzed)") {
  testsupport::Rng rng(314159);
  for (const GroupSpec& spec : {t23(), t35(), c23()}) {
    Element h = seifert::generator(spec, 'h');
    for (int i = 0; i < 120; ++i) {
      Element g = testsupport::random_element(rng, spec, 1, 6);
      Element z = testsupport::random_element(rng, spec, 0, 4);
      Element conj = seifert::conjugate_by(z, g);
      auto w = seifert::are_conjugate(g, conj);
      REQUIRE(w.has_value());
      CHECK(seifert::equals(seifert::conjugate_by(*w, g), conj));

      // Conjugating by h never moves anything.
      CHECK(seifert::equals(seifert::conjugate_by(h, g), g));

      // Any lift of a quotient centralizer element fixes g: check the lift
      // of the core's primitive root, pulled back through the conjugator.
      freeprod::CyclicReduction cr = freeprod::cyclically_reduce(seifert::project(g));
      if (cr.core.size() >= 2) {
        std::size_t period = cr.core.size();
        for (std::size_t d = 1; d < cr.core.size(); ++d) {
          if (cr.core.size() % d != 0) {
            continue;
          }
          bool matches = true;
          const auto& syls = cr.core.syllables();
          for (std::size_t j = 0; j < syls.size() && matches; ++j) {
            matches = syls[j] == syls[(j + d) % syls.size()];
          }
          if (matches) {
            period = d;
            break;
          }
        }
        std::vector<freeprod::Syllable> root_syls(
            cr.core.syllables().begin(),
            cr.core.syllables().begin() + static_cast<long>(period));
        freeprod::ReducedWord root = freeprod::reduce(root_syls, spec.quotient_factors());
        freeprod::ReducedWord centralizer = freeprod::concat_reduce(
            freeprod::concat_reduce(freeprod::invert(cr.conjugator), root), cr.conjugator);
        Element lift = seifert::from_quotient_word(spec, centralizer);
        CHECK(seifert::equals(seifert::conjugate_by(lift, g), g));
        CHECK(seifert::equals(seifert::conjugate_by(seifert::power(lift, 2), g), g));
        CHECK(seifert::equals(seifert::conjugate_by(seifert::power(lift, -3), g), g));
        CHECK(seifert::equals(
            seifert::conjugate_by(seifert::multiply(lift, seifert::power(h, 3)), g), g));
      }
    }
  }
}

TEST_CASE("are_conjugate: agrees with the exhaustive oracle on all short elements") {
  for (const GroupSpec& spec : {t23(), t35()}) {
    std::vector<BallEntry> universe = generator_ball(spec, 6);
    std::map<Element, std::size_t, seifert::ElementLess> index;
    for (std::size_t i = 0; i < universe.size(); ++i) {
      index.emplace(universe[i].element, i);
    }

    // Oracle relation: conjugators of generator-word length <= 5.
    std::vector<BallEntry> ball = generator_ball(spec, 5);
    std::vector<std::vector<bool>> oracle(universe.size(),
                                          std::vector<bool>(universe.size(), false));
    for (std::size_t i = 0; i < universe.size(); ++i) {
      for (const BallEntry& x : ball) {
        Element conj = seifert::conjugate_by(x.element, universe[i].element);
        auto it = index.find(conj);
        if (it != index.end()) {
          oracle[i][it->second] = true;
        }
      }
    }

    // Partition the universe into conjugacy classes with are_conjugate,
    // bucketed by abelianization first (a conjugation invariant).
    struct AbLess {
      bool operator()(const seifert::AbelianImage& x, const seifert::AbelianImage& y) const {
        if (x.first != y.first) {
          return x.first < y.first;
        }
        return x.second < y.second;
      }
    };
    std::map<seifert::AbelianImage, std::vector<std::size_t>, AbLess> buckets;
    for (std::size_t i = 0; i < universe.size(); ++i) {
      buckets[seifert::abelianize(universe[i].element)].push_back(i);
    }
    std::vector<std::size_t> class_of(universe.size(), 0);
    std::size_t next_class = 0;
    for (auto& [ab, members] : buckets) {
      std::vector<std::size_t> reps;
      for (std::size_t i : members) {
        bool placed = false;
        for (std::size_t rep : reps) {
          auto w = seifert::are_conjugate(universe[rep].element, universe[i].element);
          if (w) {
            CHECK(seifert::equals(seifert::conjugate_by(*w, universe[rep].element),
                                  universe[i].element));
            class_of[i] = class_of[rep];
            placed = true;
            break;
          }
        }
        if (!placed) {
          class_of[i] = next_class++;
          reps.push_back(i);
        }
      }
    }

    long disagreements = 0;
    for (std::size_t i = 0; i < universe.size(); ++i) {
      for (std::size_t j = 0; j < universe.size(); ++j) {
        if ((class_of[i] == class_of[j]) != oracle[i][j]) {
          ++disagreements;
        }
      }
    }
    CHECK(disagreements == 0);
  }
}

TEST_CASE("printing round-trips through the parser") {
  testsupport::Rng rng(8675309);
  for (const GroupSpec& spec : {t23(), t35(), c23(), c32()}) {
    CHECK(seifert::to_text(seifert::identity(spec)).empty());
    for (int i = 0; i < 200; ++i) {
      Element g = testsupport::random_element(rng, spec, 0, 7);
      CHECK(seifert::equals(seifert::parse_element(spec, seifert::to_text(g)), g));
    }
  }
  CHECK(seifert::to_text(seifert::parse_element(t23(), "[a,b]")) == "h^-2 a b^2 a b");
  CHECK(seifert::to_text(seifert::central_power(t23(), -1)) == "h^-1");
  CHECK(seifert::to_text(seifert::generator(c23(), 'd')) == "d");
}

TEST_CASE("element_less is a strict total order on distinct normal forms") {
  testsupport::Rng rng(1234321);
  GroupSpec spec = t35();
  for (int i = 0; i < 200; ++i) {
    Element x = testsupport::random_element(rng, spec, 0, 6);
    Element y = testsupport::random_element(rng, spec, 0, 6);
    CHECK_FALSE(seifert::element_less(x, x));
    if (!seifert::equals(x, y)) {
      CHECK(seifert::element_less(x, y) != seifert::element_less(y, x));
    }
  }
}
