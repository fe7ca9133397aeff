#pragma once

// Exact arithmetic in torus knot groups  <a,b | a^p = b^q>  and cable space
// groups  <a,b,c | [b,c]=1, b^q c^p = a^p>, handled through their central
// extension  1 -> <h> -> G -> H -> 1  where h = a^p is the regular fiber and
// H is the quotient free product (Z_p * Z_q for a torus knot space, Z_p * Z
// for a cable space).  Elements are stored in the unique normal form
// (central h-exponent, reduced quotient word), so the word problem is a
// plain comparison.

#include <optional>
#include <string>
#include <string_view>

#include "knotgt/error.hpp"
#include "knotgt/freeprod.hpp"
#include "knotgt/ints.hpp"

namespace knotgt::seifert {

enum class GroupKind { TorusKnot, Cable };

class GroupSpec {
 public:
  GroupKind kind() const { return kind_; }
  const Int& p() const { return p_; }
  const Int& q() const { return q_; }

  // Cable only: canonical basis exponents of d = b^r c^s, with
  // p*r - q*s = 1 and r in [1, q].
  const Int& cable_r() const;
  const Int& cable_s() const;

  const freeprod::FactorPair& quotient_factors() const { return factors_; }

  // Letter used for the second quotient factor when printing: 'b' for a
  // torus knot space, 'd' for a cable space.
  char second_letter() const { return kind_ == GroupKind::TorusKnot ? 'b' : 'd'; }

  friend bool operator==(const GroupSpec& x, const GroupSpec& y) {
    return x.kind_ == y.kind_ && x.p_ == y.p_ && x.q_ == y.q_;
  }

 private:
  GroupSpec(GroupKind kind, Int p, Int q, Int r, Int s, freeprod::FactorPair factors)
      : kind_(kind), p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), s_(std::move(s)),
        factors_(std::move(factors)) {}

  GroupKind kind_;
  Int p_;
  Int q_;
  Int r_;  // cable basis, 0 for torus knots
  Int s_;
  freeprod::FactorPair factors_;

  friend GroupSpec make_group(GroupKind kind, Int p, Int q);
};

// Validates ranges (p >= 2; q >= 2 for a torus knot, q >= 1 for a cable
// space) and coprimality, and derives the quotient factors and cable basis.
GroupSpec make_group(GroupKind kind, Int p, Int q);

class Element {
 public:
  const GroupSpec& spec() const { return spec_; }
  const Int& central() const { return central_; }
  const freeprod::ReducedWord& word() const { return word_; }
  bool is_identity() const { return central_ == 0 && word_.empty(); }

 private:
  Element(GroupSpec spec, Int central, freeprod::ReducedWord word)
      : spec_(std::move(spec)), central_(std::move(central)), word_(std::move(word)) {}

  GroupSpec spec_;
  Int central_;
  freeprod::ReducedWord word_;

  friend Element identity(const GroupSpec&);
  friend Element central_power(const GroupSpec&, Int);
  friend Element from_quotient_word(const GroupSpec&, freeprod::ReducedWord, Int);
};

Element identity(const GroupSpec& spec);
Element central_power(const GroupSpec& spec, Int k);  // h^k

// Lift of a reduced quotient word times h^central.  The word must be over
// the spec's quotient factors.
Element from_quotient_word(const GroupSpec& spec, freeprod::ReducedWord word, Int central = 0);

// Generators by name: 'a', 'b', 'h' always; 'c' and 'd' for cable spaces.
Element generator(const GroupSpec& spec, char name);

// Parses the generator-word grammar:
//   word := term (ws term)* ; term := gen | gen '^' int
//         | '[' word ',' word ']' | 'inv(' word ')'
// Empty input denotes the identity.  Throws ParseError with position info.
Element parse_element(const GroupSpec& spec, std::string_view text);

Element multiply(const Element& x, const Element& y);
Element invert(const Element& x);
Element power(const Element& x, const Int& n);
bool equals(const Element& x, const Element& y);

// Projection to the quotient free product H (forgets the center).
const freeprod::ReducedWord& project(const Element& x);

// Image in H_1: a single integer for torus knot spaces (a -> q, b -> p,
// h -> pq), a pair in the (meridian, c) basis for cable spaces (a -> (q,1),
// b -> (p,0), c -> (0,1)).
struct AbelianImage {
  GroupKind kind;
  Int first;
  Int second;  // always 0 for torus knot spaces

  bool is_zero() const { return first == 0 && second == 0; }
  friend bool operator==(const AbelianImage&, const AbelianImage&) = default;
};

AbelianImage abelianize(const Element& x);

// g^x = x^-1 g x (the first argument is the conjugator).
Element conjugate_by(const Element& x, const Element& g);

// Exact conjugacy decision.  Returns a witness x with x^-1 g x = g2 when
// conjugate, none otherwise; the witness always verifies.
std::optional<Element> are_conjugate(const Element& g, const Element& g2);

// Deterministic total order: quotient word first, then central exponent.
bool element_less(const Element& x, const Element& y);

struct ElementLess {
  bool operator()(const Element& x, const Element& y) const { return element_less(x, y); }
};

// Printing in the generator-word grammar.  to_text includes the central
// h-power and parses back to the same element; word_text prints only the
// projected quotient word.  The identity prints as "".
std::string to_text(const Element& x);
std::string word_text(const Element& x);

}  // namespace knotgt::seifert
