#include "knotgt/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <utility>

#include "knotgt/ball.hpp"
#include "knotgt/sclbounds.hpp"

namespace knotgt::verify {

using seifert::Element;
using seifert::ElementLess;
using seifert::GroupKind;
using seifert::GroupSpec;

bool Report::all_passed() const {
  return std::all_of(criteria.begin(), criteria.end(),
                     [](const CriterionResult& c) { return c.passed; });
}

namespace {

// Deterministic draws independent of the standard library's distribution
// implementations: plain modulo over the raw 64-bit stream.
struct Rng {
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  std::uint64_t raw() { return engine(); }
  long below(long n) { return static_cast<long>(raw() % static_cast<std::uint64_t>(n)); }
  long range(long lo, long hi) { return lo + below(hi - lo + 1); }  // inclusive
  std::mt19937_64 engine;
};

struct Checker {
  int failures = 0;
  long checks = 0;
  std::string detail;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      if (failures < 6) {
        detail += (detail.empty() ? "" : "; ") + what;
      }
      ++failures;
    }
  }

  CriterionResult result(std::string id, std::string name) const {
    std::ostringstream out;
    if (failures == 0) {
      out << checks << " checks";
    } else {
      out << failures << "/" << checks << " checks failed: " << detail;
    }
    return CriterionResult{std::move(id), std::move(name), failures == 0, out.str()};
  }
};

struct Context {
  std::uint64_t seed = 0;
  std::vector<Element> pool;  // fuzzed elements shared with the consistency criterion
};

std::vector<std::string> letter_names(const GroupSpec& spec) {
  std::vector<std::string> names{"a", "a^-1", "b", "b^-1"};
  if (spec.kind() == GroupKind::Cable) {
    names.emplace_back("c");
    names.emplace_back("c^-1");
  }
  return names;
}

std::string random_word(Rng& rng, const std::vector<std::string>& letters, int min_len,
                        int max_len) {
  int len = static_cast<int>(rng.range(min_len, max_len));
  std::string out;
  for (int i = 0; i < len; ++i) {
    if (!out.empty()) {
      out += ' ';
    }
    out += letters[static_cast<std::size_t>(rng.below(static_cast<long>(letters.size())))];
  }
  return out;
}

Element random_element(Rng& rng, const GroupSpec& spec, const std::vector<std::string>& letters,
                       int min_len, int max_len) {
  return seifert::parse_element(spec, random_word(rng, letters, min_len, max_len));
}

std::string describe(const Element& g) {
  std::string text = seifert::to_text(g);
  return text.empty() ? "<identity>" : text;
}

// ---------------------------------------------------------------------------

CriterionResult run_examples(Context& ctx) {
  Checker c;
  GroupSpec t23 = seifert::make_group(GroupKind::TorusKnot, 2, 3);
  GroupSpec t35 = seifert::make_group(GroupKind::TorusKnot, 3, 5);
  GroupSpec c23 = seifert::make_group(GroupKind::Cable, 2, 3);

  Element h23 = seifert::generator(t23, 'h');
  Element a23 = seifert::generator(t23, 'a');

  c.check(seifert::equals(seifert::parse_element(t23, "a a"), h23), "a a != h in T(2,3)");
  c.check(seifert::equals(seifert::parse_element(t23, "a^2"), seifert::parse_element(t23, "b^3")),
          "a^2 != b^3 in T(2,3)");
  c.check(seifert::equals(seifert::multiply(a23, a23), h23), "a*a != h in T(2,3)");

  c.check(seifert::abelianize(a23) == seifert::AbelianImage{GroupKind::TorusKnot, 3, 0},
          "[a] != 3 in H_1");
  c.check(seifert::abelianize(seifert::generator(t23, 'b')) ==
              seifert::AbelianImage{GroupKind::TorusKnot, 2, 0},
          "[b] != 2 in H_1");
  c.check(seifert::abelianize(h23) == seifert::AbelianImage{GroupKind::TorusKnot, 6, 0},
          "[h] != 6 in H_1");
  c.check(seifert::abelianize(seifert::generator(c23, 'h')) ==
              seifert::AbelianImage{GroupKind::Cable, 6, 2},
          "[h] != (6,2) in C(2,3)");

  Element g23 = seifert::parse_element(t23, "[a,b]");
  c.check(g23.central() == -2 && seifert::word_text(g23) == "a b^2 a b",
          "normal form of [a,b] in T(2,3)");
  c.check(seifert::equals(seifert::conjugate_by(a23, g23), seifert::invert(g23)),
          "a^-1 [a,b] a != [a,b]^-1 in T(2,3)");
  if (auto w = seifert::are_conjugate(g23, seifert::invert(g23))) {
    c.check(seifert::equals(*w, a23), "canonical conjugacy witness is not a");
  } else {
    c.check(false, "[a,b] not conjugate to its inverse in T(2,3)");
  }

  Element gc = seifert::parse_element(c23, "[a,b]");
  c.check(seifert::word_text(gc) == "a d^-2 a d^2", "quotient image of [a,b] in C(2,3)");
  for (const Element& g : {g23, gc}) {
    auto x = torsion::is_reversible(g);
    if (!x) {
      c.check(false, "even-type commutator not reversible");
      continue;
    }
    c.check(seifert::equals(*x, seifert::generator(g.spec(), 'a')),
            "reversibility witness is not a");
  }

  auto cert = torsion::gt_order_search(g23, torsion::SearchBounds{2, 4});
  if (auto* found = std::get_if<torsion::OrderFound>(&cert)) {
    c.check(found->order == 2 && found->conjugators.size() == 2 &&
                found->conjugators[0].is_identity() &&
                seifert::equals(found->conjugators[1], a23),
            "order-2 certificate of [a,b] in T(2,3)");
    c.check(torsion::verify_certificate(g23, cert), "certificate verification");
  } else {
    c.check(false, "no order-2 certificate for [a,b] in T(2,3)");
  }

  Element bc = seifert::parse_element(c23, "b c");
  c.check(bc.central() == 1 && seifert::word_text(bc) == "d^-1", "b c normal form in C(2,3)");
  c.check(seifert::abelianize(bc) == seifert::AbelianImage{GroupKind::Cable, 2, 1},
          "[b c] != (2,1) in C(2,3)");

  for (const GroupSpec& spec : {t23, t35}) {
    torsion::RootPairWitness w = torsion::unique_root_failure_witness(spec);
    c.check(seifert::equals(w.x, seifert::generator(spec, 'a')) &&
                seifert::equals(w.y, seifert::parse_element(spec, "inv(b a) a b a")) &&
                w.exponent == spec.p(),
            "unique-root failure witness shape");
    c.check(!seifert::equals(w.x, w.y) &&
                seifert::equals(seifert::power(w.x, w.exponent), seifert::power(w.y, w.exponent)),
            "unique-root failure witness verification");
  }
  bool cable_rejected = false;
  try {
    torsion::unique_root_failure_witness(c23);
  } catch (const InvalidArgument&) {
    cable_rejected = true;
  }
  c.check(cable_rejected, "cable spec must be rejected by unique_root_failure_witness");

  c.check(torsion::bs_check(a23, g23, 1, -1), "x^-1 y x = y^-1 for the trefoil witness");

  c.check(sclbounds::order_upper_bound(2) == Rational(0), "order bound k=2");
  c.check(sclbounds::order_upper_bound(3) == Rational(1, 6), "order bound k=3");
  c.check(sclbounds::order_upper_bound(2000000) == Rational(999999, 2000000),
          "order bound k=2*10^6 exact");
  c.check(sclbounds::longitude_scl(1) == Rational(1, 2), "longitude scl genus 1");
  c.check(sclbounds::longitude_scl(3) == Rational(5, 2), "longitude scl genus 3");

  c.check(sclbounds::gap_lower_bound(seifert::parse_element(t35, "[a,b]")) == Rational(1, 6),
          "gap bound 1/6 in T(3,5)");
  c.check(sclbounds::gap_lower_bound(g23) == Rational(0), "gap bound 0 in T(2,3)");
  c.check(sclbounds::gap_lower_bound(seifert::parse_element(t35, "[a^3,b]")) == Rational(0),
          "gap bound on a central commutator");

  // Classifier instances.
  jsj::Classification hyp = jsj::classify(jsj::parse_jsj(
      "knot \"k\" { piece v = hyperbolic(\"fig8\"); root v; }"));
  c.check(hyp.is_R && hyp.is_Rbar && !hyp.has_order_two_gt &&
              hyp.has_any_gt == jsj::GtKnowledge::Unknown,
          "hyperbolic-only classification");
  jsj::Classification tref = jsj::classify(jsj::parse_jsj(
      "knot \"k\" { piece t = torus_knot(2,3); root t; }"));
  c.check(!tref.is_R && !tref.is_Rbar && tref.has_order_two_gt && tref.witnesses.size() == 1,
          "trefoil classification");
  jsj::Classification odd = jsj::classify(jsj::parse_jsj(
      "knot \"k\" { piece t = torus_knot(3,5); root t; }"));
  c.check(!odd.is_R && !odd.has_order_two_gt && odd.has_any_gt == jsj::GtKnowledge::Unknown,
          "odd torus classification");
  c.check(jsj::even_type(jsj::PieceKind::torus_knot(2, 3)), "T(2,3) even");
  c.check(!jsj::even_type(jsj::PieceKind::torus_knot(3, 5)), "T(3,5) odd");
  c.check(!jsj::even_type(jsj::PieceKind::cable(3, 2)), "C(3,2) odd");

  ctx.pool.push_back(g23);
  ctx.pool.push_back(gc);
  return c.result("examples", "engine worked examples");
}

CriterionResult run_c1(Context& ctx) {
  Checker c;
  GroupSpec t23 = seifert::make_group(GroupKind::TorusKnot, 2, 3);
  Element h = seifert::generator(t23, 'h');
  Element a = seifert::generator(t23, 'a');
  Element other = seifert::parse_element(t23, "inv(b a) a b a");

  std::vector<Element> roots = torsion::roots_search(h, 2, 4);
  auto contains = [&](const Element& x) {
    return std::any_of(roots.begin(), roots.end(),
                       [&](const Element& r) { return seifert::equals(r, x); });
  };
  c.check(contains(a), "square roots of h must contain a");
  c.check(contains(other), "square roots of h must contain (ba)^-1 a (ba)");
  c.check(!seifert::equals(a, other), "the two roots must be distinct");
  c.check(seifert::equals(seifert::power(a, 2), h), "a^2 = h");
  c.check(seifert::equals(seifert::power(other, 2), h), "((ba)^-1 a (ba))^2 = h");
  for (const Element& r : roots) {
    c.check(seifert::equals(seifert::power(r, 2), h), "every reported root squares to h");
  }
  ctx.pool.push_back(h);
  return c.result("1", "square roots of the regular fiber in the trefoil group");
}

void check_order_two_witness(Checker& c, Context& ctx, const GroupSpec& spec, const Int& r) {
  std::ostringstream word;
  word << "[a^" << r << ",b]";
  Element g = seifert::parse_element(spec, word.str());
  Element expected = seifert::power(seifert::generator(spec, 'a'), r);

  auto x = torsion::is_reversible(g);
  if (!x) {
    c.check(false, "no reversibility witness for " + word.str());
    return;
  }
  c.check(seifert::equals(*x, expected), "witness for " + word.str() + " is not a^r");
  c.check(seifert::equals(seifert::conjugate_by(*x, g), seifert::invert(g)),
          "witness verification for " + word.str());

  auto cert = torsion::gt_order_search(g, torsion::SearchBounds{2, 4});
  auto* found = std::get_if<torsion::OrderFound>(&cert);
  c.check(found != nullptr && found->order == 2, "order of " + word.str() + " is exactly 2");
  if (found != nullptr) {
    c.check(torsion::verify_certificate(g, cert), "certificate re-verification");
  }
  ctx.pool.push_back(g);
}

CriterionResult run_c2(Context& ctx) {
  Checker c;
  check_order_two_witness(c, ctx, seifert::make_group(GroupKind::TorusKnot, 2, 3), 1);
  check_order_two_witness(c, ctx, seifert::make_group(GroupKind::TorusKnot, 4, 3), 2);
  return c.result("2", "order-two witnesses in even torus knot groups");
}

CriterionResult run_c3(Context& ctx) {
  Checker c;
  check_order_two_witness(c, ctx, seifert::make_group(GroupKind::Cable, 2, 3), 1);
  check_order_two_witness(c, ctx, seifert::make_group(GroupKind::Cable, 4, 3), 2);
  return c.result("3", "order-two witnesses in even cable space groups");
}

CriterionResult run_c4(Context& ctx) {
  Checker c;
  int oracle_budget_per_group = 10;
  for (const GroupSpec& spec : {seifert::make_group(GroupKind::TorusKnot, 3, 5),
                                seifert::make_group(GroupKind::Cable, 3, 2)}) {
    Rng rng(ctx.seed * 1000003 + (spec.kind() == GroupKind::TorusKnot ? 41 : 43));
    std::vector<std::string> letters = letter_names(spec);
    std::vector<Element> samples;
    long attempts = 0;
    while (samples.size() < 200 && attempts < 500000) {
      ++attempts;
      Element g = random_element(rng, spec, letters, 1, 6);
      if (g.is_identity() || !seifert::abelianize(g).is_zero()) {
        continue;
      }
      samples.push_back(std::move(g));
    }
    c.check(samples.size() == 200, "failed to sample 200 zero-H_1 elements");

    for (const Element& g : samples) {
      c.check(!torsion::is_reversible(g).has_value(),
              "odd-type element reported reversible: " + describe(g));
      ctx.pool.push_back(g);
    }

    // Brute-force cross-check on the first few samples: no conjugator of
    // generator-word length <= 5 maps g to g^-1.
    std::vector<BallEntry> ball = generator_ball(spec, 5);
    for (int i = 0; i < oracle_budget_per_group && i < static_cast<int>(samples.size()); ++i) {
      const Element& g = samples[static_cast<std::size_t>(i)];
      Element target = seifert::invert(g);
      bool found = false;
      for (const BallEntry& entry : ball) {
        if (seifert::equals(seifert::conjugate_by(entry.element, g), target)) {
          found = true;
          break;
        }
      }
      c.check(!found, "oracle found a reversing conjugator for " + describe(g));
    }
  }
  return c.result("4", "no order-two torsion in odd-type groups (randomized + oracle)");
}

CriterionResult run_c5(Context& ctx) {
  Checker c;
  GroupSpec t23 = seifert::make_group(GroupKind::TorusKnot, 2, 3);
  GroupSpec t35 = seifert::make_group(GroupKind::TorusKnot, 3, 5);
  GroupSpec c23 = seifert::make_group(GroupKind::Cable, 2, 3);

  Element g1 = seifert::parse_element(t23, "[a,b]");
  sclbounds::SclInterval i1 = sclbounds::scl_interval(g1, torsion::SearchBounds{2, 3});
  c.check(i1.lower == Rational(0) && i1.upper && *i1.upper == Rational(0),
          "scl interval of [a,b] in T(2,3) must be [0,0]");

  // In T(3,5) the spectral gap pins 1/6 from below; the search finds the
  // order-3 certificate (three-conjugate expansion of [a^3,b] = 1), so the
  // interval is the tight [1/6, 1/6].  With an empty conjugator ball the
  // search is inconclusive and the upper bound becomes +infinity.
  Element g2 = seifert::parse_element(t35, "[a,b]");
  sclbounds::SclInterval i2 = sclbounds::scl_interval(g2, torsion::SearchBounds{3, 3});
  c.check(i2.lower == Rational(1, 6) && i2.upper && *i2.upper == Rational(1, 6),
          "scl interval of [a,b] in T(3,5) must be tight at [1/6, 1/6]");
  auto cert35 = torsion::gt_order_search(g2, torsion::SearchBounds{3, 3});
  auto* found35 = std::get_if<torsion::OrderFound>(&cert35);
  c.check(found35 != nullptr && found35->order == 3 &&
              torsion::verify_certificate(g2, cert35),
          "[a,b] in T(3,5) carries a verified order-3 certificate");
  sclbounds::SclInterval i2b = sclbounds::scl_interval(g2, torsion::SearchBounds{0, 3});
  c.check(i2b.lower == Rational(1, 6) && !i2b.upper,
          "inconclusive search must report [1/6, +inf)");

  Element g3 = seifert::parse_element(c23, "[a,b]");
  sclbounds::SclInterval i3 = sclbounds::scl_interval(g3, torsion::SearchBounds{2, 3});
  c.check(i3.lower == Rational(0) && i3.upper && *i3.upper == Rational(0),
          "scl interval of [a,b] in C(2,3) must be [0,0]");

  ctx.pool.push_back(g1);
  ctx.pool.push_back(g2);
  ctx.pool.push_back(g3);
  return c.result("5", "scl interval pipeline");
}

CriterionResult run_c6(Context& ctx) {
  Checker c;
  for (const Element& g : ctx.pool) {
    if (g.is_identity() || !seifert::abelianize(g).is_zero()) {
      continue;
    }
    if (torsion::is_reversible(g)) {
      c.check(sclbounds::gap_lower_bound(g) == Rational(0),
              "reversible element with positive gap bound: " + describe(g));
    } else {
      ++c.checks;
    }
  }
  return c.result("6", "reversibility vs spectral-gap consistency over all fuzzed elements");
}

CriterionResult run_c7(Context& ctx) {
  Checker c;
  const std::vector<GroupSpec> specs{seifert::make_group(GroupKind::TorusKnot, 2, 3),
                                     seifert::make_group(GroupKind::TorusKnot, 3, 5),
                                     seifert::make_group(GroupKind::Cable, 2, 3)};
  long total = 0;
  for (std::size_t s = 0; s < specs.size(); ++s) {
    const GroupSpec& spec = specs[s];
    Rng rng(ctx.seed * 1000003 + 71 + static_cast<std::uint64_t>(s));
    std::vector<std::string> letters = letter_names(spec);
    long cases = s == 0 ? 334 : 333;
    for (long i = 0; i < cases; ++i) {
      Element x = random_element(rng, spec, letters, 0, 5);
      Element y = random_element(rng, spec, letters, 1, 5);
      while (y.is_identity()) {
        y = random_element(rng, spec, letters, 1, 5);
      }
      long m = rng.range(-4, 4);
      long n = rng.range(-4, 4);
      while (m == n || m == -n) {
        m = rng.range(-4, 4);
        n = rng.range(-4, 4);
      }
      ++total;
      c.check(!torsion::bs_check(x, y, m, n),
              "x^-1 y^m x = y^n held with m != +-n in a knot-piece group");
    }

    // Positive cases: central y with m = n, and reversibility with m = -n.
    Element x = random_element(rng, spec, letters, 0, 4);
    c.check(torsion::bs_check(x, seifert::generator(spec, 'h'), 2, 2),
            "central y with m = n must satisfy the relation");
    if (spec.p() % 2 == 0) {
      Element g = seifert::parse_element(spec, "[a,b]");
      if (auto w = torsion::is_reversible(g)) {
        c.check(torsion::bs_check(*w, g, 1, -1), "reversibility as a Baumslag-Solitar relation");
        c.check(torsion::bs_check(*w, g, 3, -3), "powers of a reversible element");
      } else {
        c.check(false, "expected reversible [a,b]");
      }
    }
  }
  c.check(total == 1000, "exactly 1000 randomized cases");
  return c.result("7", "Baumslag-Solitar relation suite");
}

CriterionResult run_c8(Context& ctx) {
  Checker c;
  const std::vector<GroupSpec> specs{seifert::make_group(GroupKind::TorusKnot, 2, 3),
                                     seifert::make_group(GroupKind::TorusKnot, 3, 5),
                                     seifert::make_group(GroupKind::Cable, 2, 3),
                                     seifert::make_group(GroupKind::Cable, 3, 2)};
  for (std::size_t s = 0; s < specs.size(); ++s) {
    const GroupSpec& spec = specs[s];
    Rng rng(ctx.seed * 1000003 + 83 + static_cast<std::uint64_t>(s));
    std::vector<std::string> letters = letter_names(spec);

    // Relator variants as letter lists; inserting one anywhere must not
    // change the normal form.
    std::vector<std::vector<std::string>> relators;
    long p = static_cast<long>(spec.p());
    long q = static_cast<long>(spec.q());
    if (spec.kind() == GroupKind::TorusKnot) {
      std::vector<std::string> r1;
      r1.insert(r1.end(), static_cast<std::size_t>(p), "a");
      r1.insert(r1.end(), static_cast<std::size_t>(q), "b^-1");
      std::vector<std::string> r2;
      r2.insert(r2.end(), static_cast<std::size_t>(q), "b");
      r2.insert(r2.end(), static_cast<std::size_t>(p), "a^-1");
      relators = {std::move(r1), std::move(r2)};
    } else {
      std::vector<std::string> r1;
      r1.insert(r1.end(), static_cast<std::size_t>(q), "b");
      r1.insert(r1.end(), static_cast<std::size_t>(p), "c");
      r1.insert(r1.end(), static_cast<std::size_t>(p), "a^-1");
      std::vector<std::string> r2{"b^-1", "c^-1", "b", "c"};
      relators = {std::move(r1), std::move(r2)};
    }

    for (int i = 0; i < 500; ++i) {
      int len = static_cast<int>(rng.range(0, 8));
      std::vector<std::string> word;
      for (int j = 0; j < len; ++j) {
        word.push_back(letters[static_cast<std::size_t>(rng.below(static_cast<long>(letters.size())))]);
      }
      const auto& relator = relators[static_cast<std::size_t>(rng.below(2))];
      std::size_t pos = static_cast<std::size_t>(rng.below(static_cast<long>(word.size()) + 1));
      std::vector<std::string> spliced = word;
      spliced.insert(spliced.begin() + static_cast<long>(pos), relator.begin(), relator.end());
      auto join = [](const std::vector<std::string>& parts) {
        std::string out;
        for (const std::string& part : parts) {
          if (!out.empty()) {
            out += ' ';
          }
          out += part;
        }
        return out;
      };
      Element base = seifert::parse_element(spec, join(word));
      Element with_relator = seifert::parse_element(spec, join(spliced));
      c.check(seifert::equals(base, with_relator), "relator insertion changed the normal form");
    }

    for (int i = 0; i < 125; ++i) {
      Element x = random_element(rng, spec, letters, 0, 5);
      Element y = random_element(rng, spec, letters, 0, 5);
      Element z = random_element(rng, spec, letters, 0, 5);
      c.check(seifert::equals(seifert::multiply(seifert::multiply(x, y), z),
                              seifert::multiply(x, seifert::multiply(y, z))),
              "associativity");
    }

    for (int i = 0; i < 125; ++i) {
      Element x = random_element(rng, spec, letters, 0, 5);
      Element y = random_element(rng, spec, letters, 0, 5);
      c.check(seifert::multiply(x, seifert::invert(x)).is_identity() &&
                  seifert::multiply(seifert::invert(x), x).is_identity(),
              "two-sided inverses");
      c.check(seifert::project(seifert::multiply(x, y)) ==
                  freeprod::concat_reduce(seifert::project(x), seifert::project(y)),
              "projection is a homomorphism");
      seifert::AbelianImage ax = seifert::abelianize(x);
      seifert::AbelianImage ay = seifert::abelianize(y);
      seifert::AbelianImage axy = seifert::abelianize(seifert::multiply(x, y));
      c.check(axy.first == ax.first + ay.first && axy.second == ax.second + ay.second,
              "abelianization is additive");
      c.check(seifert::equals(seifert::conjugate_by(x, seifert::generator(spec, 'h')),
                              seifert::generator(spec, 'h')),
              "the fiber is central");
      if ((i & 3) == 0) {
        ctx.pool.push_back(x);
      }
    }
  }
  return c.result("8", "word-problem soundness (relators, associativity, homomorphism laws)");
}

CriterionResult run_c9(Context&) {
  Checker c;
  for (const GroupSpec& spec : {seifert::make_group(GroupKind::TorusKnot, 2, 3),
                                seifert::make_group(GroupKind::TorusKnot, 3, 5)}) {
    // Universe: all elements spellable in <= 5 generator letters.
    std::vector<BallEntry> universe = generator_ball(spec, 5);
    std::map<Element, std::size_t, ElementLess> index;
    for (std::size_t i = 0; i < universe.size(); ++i) {
      index.emplace(universe[i].element, i);
    }

    // Exhaustive oracle at radius 4: which universe elements are conjugate,
    // witnessed by a conjugator of word length <= 4.
    std::vector<BallEntry> conjugators = generator_ball(spec, 4);
    std::vector<std::vector<bool>> oracle(universe.size(),
                                          std::vector<bool>(universe.size(), false));
    for (std::size_t i = 0; i < universe.size(); ++i) {
      for (const BallEntry& x : conjugators) {
        Element conj = seifert::conjugate_by(x.element, universe[i].element);
        auto it = index.find(conj);
        if (it != index.end()) {
          oracle[i][it->second] = true;
        }
      }
    }

    // Decision side, partitioned into conjugacy classes through are_conjugate
    // (witnesses verified as they are produced).
    std::vector<std::size_t> class_of(universe.size());
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < universe.size(); ++i) {
      bool placed = false;
      for (std::size_t r = 0; r < reps.size() && !placed; ++r) {
        auto w = seifert::are_conjugate(universe[reps[r]].element, universe[i].element);
        if (w) {
          c.check(seifert::equals(seifert::conjugate_by(*w, universe[reps[r]].element),
                                  universe[i].element),
                  "conjugacy witness verification");
          class_of[i] = r;
          placed = true;
        }
      }
      if (!placed) {
        class_of[i] = reps.size();
        reps.push_back(i);
      }
    }

    long disagreements = 0;
    for (std::size_t i = 0; i < universe.size(); ++i) {
      for (std::size_t j = 0; j < universe.size(); ++j) {
        bool decided = class_of[i] == class_of[j];
        if (decided != oracle[i][j]) {
          ++disagreements;
          if (disagreements <= 3) {
            c.check(false, "disagreement on (" + (universe[i].word.empty() ? "1" : universe[i].word) +
                               ", " + (universe[j].word.empty() ? "1" : universe[j].word) + ")");
          }
        } else {
          ++c.checks;
        }
      }
    }
    c.check(disagreements == 0, "conjugacy decision disagrees with the exhaustive oracle");
  }
  return c.result("9", "conjugacy decision vs exhaustive oracle");
}

CriterionResult run_c10(Context&) {
  Checker c;
  for (const GoldenCase& gc : golden_cases()) {
    jsj::JsjTree tree = jsj::parse_jsj(gc.jsj_text);
    jsj::Classification cls = jsj::classify(tree);
    c.check(cls.is_R == gc.is_R, gc.label + ": is_R");
    c.check(cls.is_Rbar == cls.is_R, gc.label + ": is_Rbar must equal is_R");
    c.check(cls.has_order_two_gt == gc.has_order_two_gt, gc.label + ": has_order_two_gt");
    c.check((cls.has_any_gt == jsj::GtKnowledge::Yes) == gc.has_any_gt_known,
            gc.label + ": has_any_gt");
    std::vector<std::string> pieces;
    for (const jsj::PieceWitness& w : cls.witnesses) {
      pieces.push_back(w.piece);
      c.check(torsion::is_reversible(w.certificate.element).has_value(),
              gc.label + ": witness must be reversible");
      c.check(seifert::equals(seifert::conjugate_by(w.certificate.conjugator,
                                                    w.certificate.element),
                              seifert::invert(w.certificate.element)),
              gc.label + ": witness conjugator verification");
    }
    c.check(pieces == gc.witness_pieces, gc.label + ": witness pieces");
    if (!gc.expected_json.empty()) {
      c.check(jsj::classification_json(tree, cls) == gc.expected_json,
              gc.label + ": golden JSON mismatch");
    } else {
      c.check(false, gc.label + ": golden JSON missing");
    }
  }
  return c.result("10", "JSJ classifier truth table (golden JSON)");
}

}  // namespace

Report run_paper_suite(std::uint64_t seed) {
  Context ctx;
  ctx.seed = seed;
  Report report;
  report.criteria.push_back(run_examples(ctx));
  report.criteria.push_back(run_c1(ctx));
  report.criteria.push_back(run_c2(ctx));
  report.criteria.push_back(run_c3(ctx));
  report.criteria.push_back(run_c4(ctx));
  report.criteria.push_back(run_c5(ctx));
  report.criteria.push_back(run_c6(ctx));
  report.criteria.push_back(run_c7(ctx));
  report.criteria.push_back(run_c8(ctx));
  report.criteria.push_back(run_c9(ctx));
  report.criteria.push_back(run_c10(ctx));
  return report;
}

const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases = [] {
    std::vector<GoldenCase> out;

    out.push_back(GoldenCase{
        "hyperbolic-only",
        "knot \"figure-eight\" {\n"
        "  piece v0 = hyperbolic(\"fig8\");\n"
        "  root v0;\n"
        "}\n",
        true, false, false, {},
        "{\n"
        "  \"name\": \"figure-eight\",\n"
        "  \"is_R\": true,\n"
        "  \"is_Rbar\": true,\n"
        "  \"has_order_two_gt\": false,\n"
        "  \"has_any_gt\": \"unknown\",\n"
        "  \"witnesses\": []\n"
        "}\n"});

    out.push_back(GoldenCase{
        "even torus knot",
        "knot \"trefoil\" {\n"
        "  piece t0 = torus_knot(2, 3);\n"
        "  root t0;\n"
        "}\n",
        false, true, true, {"t0"},
        "{\n"
        "  \"name\": \"trefoil\",\n"
        "  \"is_R\": false,\n"
        "  \"is_Rbar\": false,\n"
        "  \"has_order_two_gt\": true,\n"
        "  \"has_any_gt\": \"yes\",\n"
        "  \"witnesses\": [\n"
        "    {\n"
        "      \"piece\": \"t0\",\n"
        "      \"element\": \"h^-2 a b^2 a b\",\n"
        "      \"conjugator\": \"a\"\n"
        "    }\n"
        "  ]\n"
        "}\n"});

    out.push_back(GoldenCase{
        "odd torus knot",
        "knot \"torus-3-5\" {\n"
        "  piece t0 = torus_knot(3, 5);\n"
        "  root t0;\n"
        "}\n",
        false, false, false, {},
        "{\n"
        "  \"name\": \"torus-3-5\",\n"
        "  \"is_R\": false,\n"
        "  \"is_Rbar\": false,\n"
        "  \"has_order_two_gt\": false,\n"
        "  \"has_any_gt\": \"unknown\",\n"
        "  \"witnesses\": []\n"
        "}\n"});

    out.push_back(GoldenCase{
        "cable of trefoil",
        "knot \"cable-2-5-of-trefoil\" {\n"
        "  piece c0 = cable(2, 5);\n"
        "  piece t1 = torus_knot(2, 3);\n"
        "  glue c0 -- t1;\n"
        "  root c0;\n"
        "}\n",
        false, true, true, {"c0", "t1"},
        "{\n"
        "  \"name\": \"cable-2-5-of-trefoil\",\n"
        "  \"is_R\": false,\n"
        "  \"is_Rbar\": false,\n"
        "  \"has_order_two_gt\": true,\n"
        "  \"has_any_gt\": \"yes\",\n"
        "  \"witnesses\": [\n"
        "    {\n"
        "      \"piece\": \"c0\",\n"
        "      \"element\": \"h^-1 a d^-2 a d^2\",\n"
        "      \"conjugator\": \"a\"\n"
        "    },\n"
        "    {\n"
        "      \"piece\": \"t1\",\n"
        "      \"element\": \"h^-2 a b^2 a b\",\n"
        "      \"conjugator\": \"a\"\n"
        "    }\n"
        "  ]\n"
        "}\n"});

    out.push_back(GoldenCase{
        "odd cable over hyperbolic",
        "knot \"cable-3-2-of-hyperbolic\" {\n"
        "  piece c0 = cable(3, 2);\n"
        "  piece v1 = hyperbolic(\"companion\");\n"
        "  glue c0 -- v1;\n"
        "  root c0;\n"
        "}\n",
        false, false, false, {},
        "{\n"
        "  \"name\": \"cable-3-2-of-hyperbolic\",\n"
        "  \"is_R\": false,\n"
        "  \"is_Rbar\": false,\n"
        "  \"has_order_two_gt\": false,\n"
        "  \"has_any_gt\": \"unknown\",\n"
        "  \"witnesses\": []\n"
        "}\n"});

    out.push_back(GoldenCase{
        "composite of hyperbolic knots",
        "knot \"connected-sum\" {\n"
        "  piece s0 = composing(3);\n"
        "  piece v1 = hyperbolic(\"left\");\n"
        "  piece v2 = hyperbolic(\"right\");\n"
        "  glue s0 -- v1;\n"
        "  glue s0 -- v2;\n"
        "  root s0;\n"
        "}\n",
        true, false, false, {},
        "{\n"
        "  \"name\": \"connected-sum\",\n"
        "  \"is_R\": true,\n"
        "  \"is_Rbar\": true,\n"
        "  \"has_order_two_gt\": false,\n"
        "  \"has_any_gt\": \"unknown\",\n"
        "  \"witnesses\": []\n"
        "}\n"});

    return out;
  }();
  return cases;
}

}  // namespace knotgt::verify
