#pragma once

// Exact rational bounds on stable commutator length.  scl is bounded, never
// computed exactly: the lower bound comes from the spectral gap of the
// quotient free product pulled back through the projection, the upper bound
// from a generalized-torsion order certificate.

#include <optional>
#include <string>

#include "knotgt/torsion.hpp"

namespace knotgt::sclbounds {

struct SclInterval {
  Rational lower;
  std::optional<Rational> upper;  // nullopt means +infinity
  std::string lower_note;
  std::string upper_note;
};

// 1/2 - 1/N where N is the minimum syllable order of the cyclically reduced
// quotient image (1/2 when every syllable has infinite order); 0 when the
// image is trivial or conjugate into a factor.  Requires zero abelianization.
Rational gap_lower_bound(const seifert::Element& g);

// 1/2 - 1/k for a generalized torsion element of order k >= 2.
Rational order_upper_bound(const Int& k);

// [gap_lower_bound, order bound or +infinity], with provenance notes.
SclInterval scl_interval(const seifert::Element& g, const torsion::SearchBounds& bounds);

// scl of the longitude of a genus-g knot: genus - 1/2.
Rational longitude_scl(const Int& genus);

}  // namespace knotgt::sclbounds
