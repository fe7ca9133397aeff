#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knotgt/sclbounds.hpp"
#include "support/oracles.hpp"

using namespace knotgt;
using seifert::Element;
using seifert::GroupKind;
using seifert::GroupSpec;
using torsion::SearchBounds;

namespace {

GroupSpec t23() { return seifert::make_group(GroupKind::TorusKnot, 2, 3); }
GroupSpec t35() { return seifert::make_group(GroupKind::TorusKnot, 3, 5); }
GroupSpec c23() { return seifert::make_group(GroupKind::Cable, 2, 3); }

}  // namespace

TEST_CASE("gap_lower_bound: worked examples") {
  CHECK(sclbounds::gap_lower_bound(seifert::parse_element(t35(), "[a,b]")) == Rational(1, 6));
  CHECK(sclbounds::gap_lower_bound(seifert::parse_element(t23(), "[a,b]")) == Rational(0));
  // a^3 is central in T(3,5), so [a^3, b] is trivial: no information.
  CHECK(sclbounds::gap_lower_bound(seifert::parse_element(t35(), "[a^3,b]")) == Rational(0));
  // Cable: N is the minimum order over finite-factor syllables only.
  CHECK(sclbounds::gap_lower_bound(seifert::parse_element(c23(), "[a,b]")) == Rational(0));
  GroupSpec c35 = seifert::make_group(GroupKind::Cable, 3, 5);
  CHECK(sclbounds::gap_lower_bound(seifert::parse_element(c35, "[a,b]")) == Rational(1, 6));

  CHECK_THROWS_AS(sclbounds::gap_lower_bound(seifert::generator(t23(), 'a')), InvalidArgument);
}

TEST_CASE("gap_lower_bound is a conjugation invariant (fuzzed)") {
  testsupport::Rng rng(777);
  for (const GroupSpec& spec : {t23(), t35(), c23()}) {
    int done = 0;
    while (done < 60) {
      Element g = testsupport::random_element(rng, spec, 1, 6);
      if (!seifert::abelianize(g).is_zero()) {
        continue;
      }
      Element z = testsupport::random_element(rng, spec, 0, 4);
      CHECK(sclbounds::gap_lower_bound(g) ==
            sclbounds::gap_lower_bound(seifert::conjugate_by(z, g)));
      ++done;
    }
  }
}

TEST_CASE("order_upper_bound: exact values, monotone, below 1/2") {
  CHECK(sclbounds::order_upper_bound(2) == Rational(0));
  CHECK(sclbounds::order_upper_bound(3) == Rational(1, 6));
  CHECK(sclbounds::order_upper_bound(2000000) == Rational(999999, 2000000));
  CHECK_THROWS_AS(sclbounds::order_upper_bound(1), InvalidArgument);
  CHECK_THROWS_AS(sclbounds::order_upper_bound(0), InvalidArgument);

  Rational prev = sclbounds::order_upper_bound(2);
  for (Int k = 3; k < 40; ++k) {
    Rational next = sclbounds::order_upper_bound(k);
    CHECK(prev < next);
    CHECK(next < Rational(1, 2));
    prev = next;
  }
}

TEST_CASE("scl_interval: worked examples") {
  sclbounds::SclInterval i1 =
      sclbounds::scl_interval(seifert::parse_element(t23(), "[a,b]"), SearchBounds{2, 3});
  CHECK(i1.lower == Rational(0));
  REQUIRE(i1.upper.has_value());
  CHECK(*i1.upper == Rational(0));

  // [a,b] in T(3,5): the spectral gap gives 1/6 from below, and the order-3
  // certificate (the three-conjugate expansion of [a^3,b] = 1) gives
  // 1/2 - 1/3 = 1/6 from above, so the interval is tight.
  sclbounds::SclInterval i2 =
      sclbounds::scl_interval(seifert::parse_element(t35(), "[a,b]"), SearchBounds{3, 3});
  CHECK(i2.lower == Rational(1, 6));
  REQUIRE(i2.upper.has_value());
  CHECK(*i2.upper == Rational(1, 6));

  // With no conjugators to draw on, the search is inconclusive and the
  // upper bound is reported as +infinity.
  sclbounds::SclInterval i2b =
      sclbounds::scl_interval(seifert::parse_element(t35(), "[a,b]"), SearchBounds{0, 3});
  CHECK(i2b.lower == Rational(1, 6));
  CHECK_FALSE(i2b.upper.has_value());
  CHECK(!i2b.upper_note.empty());

  sclbounds::SclInterval i3 =
      sclbounds::scl_interval(seifert::parse_element(c23(), "[a,b]"), SearchBounds{2, 3});
  CHECK(i3.lower == Rational(0));
  REQUIRE(i3.upper.has_value());
  CHECK(*i3.upper == Rational(0));

  CHECK_THROWS_AS(sclbounds::scl_interval(seifert::identity(t23()), SearchBounds{2, 3}),
                  InvalidArgument);
  CHECK_THROWS_AS(sclbounds::scl_interval(seifert::generator(t23(), 'a'), SearchBounds{2, 3}),
                  InvalidArgument);
}

TEST_CASE("scl_interval: lower <= upper on fuzzed zero-H_1 elements") {
  testsupport::Rng rng(31337);
  for (const GroupSpec& spec : {t23(), t35(), c23()}) {
    int done = 0;
    while (done < 40) {
      Element g = testsupport::random_element(rng, spec, 1, 6);
      if (g.is_identity() || !seifert::abelianize(g).is_zero()) {
        continue;
      }
      sclbounds::SclInterval interval = sclbounds::scl_interval(g, SearchBounds{2, 3});
      if (interval.upper) {
        CHECK(interval.lower <= *interval.upper);
      }
      CHECK(interval.lower >= Rational(0));
      ++done;
    }
  }
}

TEST_CASE("reversible implies zero gap bound (consistency)") {
  testsupport::Rng rng(60601);
  for (const GroupSpec& spec : {t23(), t35(), c23()}) {
    int done = 0;
    while (done < 60) {
      Element g = testsupport::random_element(rng, spec, 1, 6);
      if (g.is_identity() || !seifert::abelianize(g).is_zero()) {
        continue;
      }
      ++done;
      if (torsion::is_reversible(g)) {
        CHECK(sclbounds::gap_lower_bound(g) == Rational(0));
      }
    }
  }
}

TEST_CASE("longitude_scl") {
  CHECK(sclbounds::longitude_scl(1) == Rational(1, 2));
  CHECK(sclbounds::longitude_scl(3) == Rational(5, 2));
  CHECK(sclbounds::longitude_scl(100) == Rational(199, 2));
  CHECK_THROWS_AS(sclbounds::longitude_scl(0), InvalidArgument);
  CHECK_THROWS_AS(sclbounds::longitude_scl(-2), InvalidArgument);
}
