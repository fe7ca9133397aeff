#include "knotgt/sclbounds.hpp"

#include <utility>

namespace knotgt::sclbounds {

Rational gap_lower_bound(const seifert::Element& g) {
  if (!seifert::abelianize(g).is_zero()) {
    throw InvalidArgument(
        "scl bounds are computed for elements with zero abelianization only");
  }
  freeprod::CyclicReduction cr = freeprod::cyclically_reduce(seifert::project(g));
  if (cr.core.size() < 2) {
    return Rational(0);  // quotient image trivial or in a factor: no information
  }
  std::optional<Int> n = freeprod::min_syllable_order(cr.core);
  if (!n) {
    return Rational(1, 2);
  }
  return Rational(1, 2) - Rational(1, *n);
}

Rational order_upper_bound(const Int& k) {
  if (k < 2) {
    throw InvalidArgument("generalized-torsion order is at least 2");
  }
  return Rational(1, 2) - Rational(1, k);
}

SclInterval scl_interval(const seifert::Element& g, const torsion::SearchBounds& bounds) {
  if (g.is_identity()) {
    throw InvalidArgument("scl interval is undefined for the identity");
  }
  SclInterval interval;
  interval.lower = gap_lower_bound(g);
  interval.lower_note =
      interval.lower == 0
          ? "quotient image gives no spectral-gap constraint"
          : "spectral gap 1/2 - 1/N of the quotient free product, N = minimum syllable order";

  torsion::TorsionCertificate cert = torsion::gt_order_search(g, bounds);
  if (const auto* found = std::get_if<torsion::OrderFound>(&cert)) {
    interval.upper = order_upper_bound(found->order);
    interval.upper_note = "1/2 - 1/k from a verified generalized-torsion certificate of order k = " +
                          std::to_string(found->order);
  } else {
    interval.upper = std::nullopt;
    interval.upper_note = "no generalized-torsion certificate within the search bounds";
  }

  if (interval.upper && *interval.upper < interval.lower) {
    throw Error("internal contradiction: scl upper bound below the spectral-gap lower bound");
  }
  return interval;
}

Rational longitude_scl(const Int& genus) {
  if (genus < 1) {
    throw InvalidArgument("longitude scl is defined for nontrivial knots (genus >= 1)");
  }
  return Rational(genus) - Rational(1, 2);
}

}  // namespace knotgt::sclbounds
