#include "knotgt/seifert.hpp"

#include <utility>
#include <vector>

namespace knotgt::seifert {

using freeprod::CarryReduction;
using freeprod::FactorPair;
using freeprod::FactorSpec;
using freeprod::ReducedWord;
using freeprod::Syllable;

const Int& GroupSpec::cable_r() const {
  if (kind_ != GroupKind::Cable) {
    throw InvalidArgument("cable basis is defined for cable space groups only");
  }
  return r_;
}

const Int& GroupSpec::cable_s() const {
  if (kind_ != GroupKind::Cable) {
    throw InvalidArgument("cable basis is defined for cable space groups only");
  }
  return s_;
}

GroupSpec make_group(GroupKind kind, Int p, Int q) {
  if (p < 2) {
    throw InvalidArgument("parameter p must be at least 2");
  }
  if (kind == GroupKind::TorusKnot && q < 2) {
    throw InvalidArgument("parameter q must be at least 2 for a torus knot space");
  }
  if (kind == GroupKind::Cable && q < 1) {
    throw InvalidArgument("parameter q must be at least 1 for a cable space");
  }
  if (int_gcd(p, q) != 1) {
    throw InvalidArgument("parameters p and q must be coprime");
  }

  if (kind == GroupKind::TorusKnot) {
    FactorPair factors{FactorSpec::finite(p), FactorSpec::finite(q)};
    return GroupSpec(kind, std::move(p), std::move(q), 0, 0, std::move(factors));
  }

  // Canonical cable basis: r = p^-1 mod q with r in [1, q], s = (pr - 1)/q.
  // For q = 1 this degenerates to r = 1, s = p - 1.
  Int r = 1;
  while (floor_mod(p * r - 1, q) != 0) {
    ++r;
  }
  Int s = (p * r - 1) / q;
  FactorPair factors{FactorSpec::finite(p), FactorSpec::infinite_cyclic()};
  return GroupSpec(kind, std::move(p), std::move(q), std::move(r), std::move(s),
                   std::move(factors));
}

Element identity(const GroupSpec& spec) {
  return Element(spec, 0, ReducedWord::identity(spec.quotient_factors()));
}

Element central_power(const GroupSpec& spec, Int k) {
  return Element(spec, std::move(k), ReducedWord::identity(spec.quotient_factors()));
}

Element from_quotient_word(const GroupSpec& spec, ReducedWord word, Int central) {
  if (word.factors() != spec.quotient_factors()) {
    throw SpecMismatch("quotient word does not match the group's factor specification");
  }
  return Element(spec, std::move(central), std::move(word));
}

static Element single_syllable(const GroupSpec& spec, int factor, Int exponent, Int central) {
  std::vector<Syllable> raw{Syllable{factor, std::move(exponent)}};
  CarryReduction cr = freeprod::reduce_with_carry(raw, spec.quotient_factors());
  return from_quotient_word(spec, std::move(cr.word), std::move(central) + cr.carry);
}

Element generator(const GroupSpec& spec, char name) {
  switch (name) {
    case 'h':
      return central_power(spec, 1);
    case 'a':
      return single_syllable(spec, 0, 1, 0);
    case 'b':
      if (spec.kind() == GroupKind::TorusKnot) {
        return single_syllable(spec, 1, 1, 0);
      }
      // b = h^-s d^p in the cable normal-form alphabet.
      return single_syllable(spec, 1, spec.p(), -spec.cable_s());
    case 'c':
      if (spec.kind() != GroupKind::Cable) {
        throw InvalidArgument("generator 'c' is defined for cable space groups only");
      }
      // c = h^r d^-q.
      return single_syllable(spec, 1, -spec.q(), spec.cable_r());
    case 'd':
      if (spec.kind() != GroupKind::Cable) {
        throw InvalidArgument("generator 'd' is defined for cable space groups only");
      }
      return single_syllable(spec, 1, 1, 0);
    default:
      throw InvalidArgument(std::string("unknown generator '") + name + "'");
  }
}

static void check_same_spec(const Element& x, const Element& y) {
  if (!(x.spec() == y.spec())) {
    throw SpecMismatch("elements belong to different groups");
  }
}

Element multiply(const Element& x, const Element& y) {
  check_same_spec(x, y);
  CarryReduction cr = freeprod::concat_reduce_with_carry(x.word(), y.word());
  return from_quotient_word(x.spec(), std::move(cr.word),
                            x.central() + y.central() + cr.carry);
}

Element invert(const Element& x) {
  CarryReduction cr = freeprod::invert_with_carry(x.word());
  return from_quotient_word(x.spec(), std::move(cr.word), -x.central() + cr.carry);
}

Element power(const Element& x, const Int& n) {
  if (n < 0) {
    return power(invert(x), -n);
  }
  Element acc = identity(x.spec());
  Element base = x;
  Int e = n;
  while (e > 0) {
    if (floor_mod(e, 2) == 1) {
      acc = multiply(acc, base);
    }
    e >>= 1;
    if (e > 0) {
      base = multiply(base, base);
    }
  }
  return acc;
}

bool equals(const Element& x, const Element& y) {
  check_same_spec(x, y);
  return x.central() == y.central() && x.word() == y.word();
}

const freeprod::ReducedWord& project(const Element& x) { return x.word(); }

AbelianImage abelianize(const Element& x) {
  const GroupSpec& spec = x.spec();
  if (spec.kind() == GroupKind::TorusKnot) {
    // a -> q, b -> p, hence h = a^p -> pq.
    Int value = x.central() * spec.p() * spec.q();
    for (const Syllable& s : x.word().syllables()) {
      value += s.exponent * (s.factor == 0 ? spec.q() : spec.p());
    }
    return AbelianImage{GroupKind::TorusKnot, std::move(value), 0};
  }
  // Basis (meridian, c): a -> (q,1), h = b^q c^p -> (pq, p), d = b^r c^s -> (rp, s).
  Int first = x.central() * spec.p() * spec.q();
  Int second = x.central() * spec.p();
  for (const Syllable& s : x.word().syllables()) {
    if (s.factor == 0) {
      first += s.exponent * spec.q();
      second += s.exponent;
    } else {
      first += s.exponent * spec.cable_r() * spec.p();
      second += s.exponent * spec.cable_s();
    }
  }
  return AbelianImage{GroupKind::Cable, std::move(first), std::move(second)};
}

Element conjugate_by(const Element& x, const Element& g) {
  check_same_spec(x, g);
  return multiply(multiply(invert(x), g), x);
}

std::optional<Element> are_conjugate(const Element& g, const Element& g2) {
  check_same_spec(g, g2);
  if (!(abelianize(g) == abelianize(g2))) {
    return std::nullopt;  // conjugation fixes the H_1 image
  }

  freeprod::CyclicReduction c1 = freeprod::cyclically_reduce(project(g));
  freeprod::CyclicReduction c2 = freeprod::cyclically_reduce(project(g2));
  if (c1.core.size() != c2.core.size()) {
    return std::nullopt;
  }

  if (c1.core.empty()) {
    // Both central: conjugate iff equal.
    if (equals(g, g2)) {
      return identity(g.spec());
    }
    return std::nullopt;
  }

  if (c1.core.size() == 1) {
    // Both conjugate into a factor.  Undo the conjugations and compare in G:
    // the subgroup generated by a factor lift and h is abelian, so the
    // unconjugated representatives are conjugate iff equal.
    Element u1 = from_quotient_word(g.spec(), c1.conjugator);
    Element u2 = from_quotient_word(g.spec(), c2.conjugator);
    Element g_hat = conjugate_by(invert(u1), g);
    Element g2_hat = conjugate_by(invert(u2), g2);
    if (!equals(g_hat, g2_hat)) {
      return std::nullopt;
    }
    Element x = multiply(invert(u1), u2);
    if (!equals(conjugate_by(x, g), g2)) {
      throw Error("internal: factor-power conjugacy witness failed verification");
    }
    return x;
  }

  // Cyclically reduced quotient length >= 2.  The central offset of
  // conjugation is independent of the chosen quotient conjugator (any lift
  // of a quotient centralizer element commutes with g), so one exact check
  // of the canonical rotation witness decides.
  std::optional<ReducedWord> xw = freeprod::are_conjugate_words(project(g), project(g2));
  if (!xw) {
    return std::nullopt;
  }
  Element x = from_quotient_word(g.spec(), std::move(*xw));
  if (equals(conjugate_by(x, g), g2)) {
    return x;
  }
  return std::nullopt;
}

bool element_less(const Element& x, const Element& y) {
  if (x.word() != y.word()) {
    return freeprod::word_less(x.word(), y.word());
  }
  return x.central() < y.central();
}

}  // namespace knotgt::seifert
