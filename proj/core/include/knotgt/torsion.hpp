#pragma once

// Generalized-torsion computations: exact order-two decision via
// reversibility, bounded order search for products of conjugates, root
// equations, unique-root failure witnesses, and Baumslag-Solitar relation
// checks.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "knotgt/seifert.hpp"

namespace knotgt::torsion {

struct SearchBounds {
  int radius = 2;     // max generator-word length of enumerated conjugators
  int max_order = 4;  // max number of conjugates tried

  friend bool operator==(const SearchBounds&, const SearchBounds&) = default;
};

void validate(const SearchBounds& bounds);  // radius >= 0, max_order >= 2

// g together with x such that x^-1 g x = g^-1.
struct OrderTwo {
  seifert::Element element;
  seifert::Element conjugator;
};

// Conjugators x_1..x_n with g^{x_1} g^{x_2} ... g^{x_n} = 1 (x_1 = identity).
struct OrderFound {
  int order = 0;
  std::vector<seifert::Element> conjugators;
};

struct NotFoundWithinBounds {
  SearchBounds bounds;
};

// n copies of g multiply to [g]-weighted zero in H_1 only when [g] = 0, so a
// nonzero abelianization rules generalized torsion out entirely.
struct Obstructed {
  seifert::AbelianImage abelianization;
};

using TorsionCertificate = std::variant<OrderTwo, OrderFound, NotFoundWithinBounds, Obstructed>;

// Re-checks a positive certificate through exact group arithmetic; negative
// certificates are vacuously accepted.
bool verify_certificate(const seifert::Element& g, const TorsionCertificate& cert);

// Decides whether g is conjugate to its inverse, i.e. whether g is a
// generalized torsion element of order two.  Exact: no search bounds.
// Throws InvalidArgument on the identity.
std::optional<seifert::Element> is_reversible(const seifert::Element& g);

// Smallest n within bounds such that some product of n conjugates of g is
// the identity.  n = 2 is decided exactly through is_reversible; n >= 3 by
// enumeration of conjugator tuples with x_1 = identity and conjugators drawn
// from generator words of length <= radius.
TorsionCertificate gt_order_search(const seifert::Element& g, const SearchBounds& bounds);

// Solutions x of x^n = g, deduplicated by normal form and canonically
// ordered.  The equation is solved exactly through the quotient's cyclic
// structure; for central targets, whose solution family is infinite, the
// radius bounds the enumeration of conjugating words.
std::vector<seifert::Element> roots_search(const seifert::Element& g, const Int& n, int radius);

// The classical failure of unique roots in a torus knot group:
// x = a and y = (ba)^-1 a (ba) satisfy x^p = y^p with x != y.
struct RootPairWitness {
  seifert::Element x;
  seifert::Element y;
  Int exponent;
};

RootPairWitness unique_root_failure_witness(const seifert::GroupSpec& spec);

// Whether x^-1 y^m x = y^n holds.
bool bs_check(const seifert::Element& x, const seifert::Element& y, const Int& m, const Int& n);

}  // namespace knotgt::torsion
