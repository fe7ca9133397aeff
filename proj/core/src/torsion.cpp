#include "knotgt/torsion.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "knotgt/ball.hpp"

namespace knotgt::torsion {

using seifert::Element;
using seifert::ElementLess;
using seifert::GroupKind;
using seifert::GroupSpec;

void validate(const SearchBounds& bounds) {
  if (bounds.radius < 0) {
    throw InvalidArgument("search radius must be nonnegative");
  }
  if (bounds.max_order < 2) {
    throw InvalidArgument("max_order must be at least 2");
  }
}

static void require_nontrivial(const Element& g) {
  if (g.is_identity()) {
    throw InvalidArgument("the identity has no generalized-torsion order");
  }
}

std::optional<Element> is_reversible(const Element& g) {
  require_nontrivial(g);
  if (!seifert::abelianize(g).is_zero()) {
    return std::nullopt;  // g ~ g^-1 forces 2[g] = 0, hence [g] = 0
  }
  return seifert::are_conjugate(g, seifert::invert(g));
}

bool verify_certificate(const Element& g, const TorsionCertificate& cert) {
  if (const auto* two = std::get_if<OrderTwo>(&cert)) {
    return seifert::equals(two->element, g) &&
           seifert::equals(seifert::conjugate_by(two->conjugator, g), seifert::invert(g));
  }
  if (const auto* found = std::get_if<OrderFound>(&cert)) {
    if (found->order < 2 || found->conjugators.size() != static_cast<std::size_t>(found->order)) {
      return false;
    }
    Element product = seifert::identity(g.spec());
    for (const Element& x : found->conjugators) {
      product = seifert::multiply(product, seifert::conjugate_by(x, g));
    }
    return product.is_identity();
  }
  return true;
}

TorsionCertificate gt_order_search(const Element& g, const SearchBounds& bounds) {
  validate(bounds);
  require_nontrivial(g);

  seifert::AbelianImage ab = seifert::abelianize(g);
  if (!ab.is_zero()) {
    return Obstructed{std::move(ab)};
  }

  if (auto x = is_reversible(g)) {
    return OrderFound{2, {seifert::identity(g.spec()), std::move(*x)}};
  }

  if (bounds.max_order < 3) {
    return NotFoundWithinBounds{bounds};
  }

  // Distinct conjugates g^x over the radius ball, each with the first
  // conjugator producing it (the ball is in length-lex order, so witnesses
  // are minimal and the search deterministic).
  std::vector<std::pair<Element, Element>> conjugates;  // (g^x, x)
  std::map<Element, std::size_t, ElementLess> index_of;
  for (const BallEntry& entry : generator_ball(g.spec(), bounds.radius)) {
    Element conj = seifert::conjugate_by(entry.element, g);
    if (index_of.emplace(conj, conjugates.size()).second) {
      conjugates.emplace_back(std::move(conj), entry.element);
    }
  }

  // Depth-first over tuples (x_2 .. x_{n-1}); the last conjugate must equal
  // the inverse of the partial product, a single lookup.
  std::vector<std::size_t> choice;
  auto search = [&](auto&& self, const Element& partial, int remaining) -> std::optional<std::vector<Element>> {
    if (remaining == 1) {
      auto it = index_of.find(seifert::invert(partial));
      if (it == index_of.end()) {
        return std::nullopt;
      }
      std::vector<Element> xs;
      xs.push_back(seifert::identity(g.spec()));
      for (std::size_t idx : choice) {
        xs.push_back(conjugates[idx].second);
      }
      xs.push_back(conjugates[it->second].second);
      return xs;
    }
    for (std::size_t i = 0; i < conjugates.size(); ++i) {
      choice.push_back(i);
      auto found = self(self, seifert::multiply(partial, conjugates[i].first), remaining - 1);
      choice.pop_back();
      if (found) {
        return found;
      }
    }
    return std::nullopt;
  };

  for (int n = 3; n <= bounds.max_order; ++n) {
    if (auto xs = search(search, g, n - 1)) {
      OrderFound found{n, std::move(*xs)};
      if (!verify_certificate(g, TorsionCertificate{found})) {
        throw Error("internal: order-n certificate failed verification");
      }
      return found;
    }
  }
  return NotFoundWithinBounds{bounds};
}

namespace {

// Collects candidate roots; every candidate is checked exactly before entry.
class RootCollector {
 public:
  RootCollector(const Element& g, const Int& n) : g_(g), n_(n) {}

  // x0 has quotient word equal to the target's; the central exponent is the
  // one degree of freedom left, fixed by divisibility.
  void offer(const Element& x0) {
    Element t = seifert::power(x0, n_);
    if (!(t.word() == g_.word())) {
      throw Error("internal: root candidate has the wrong quotient image");
    }
    Int gap = g_.central() - t.central();
    if (floor_mod(gap, n_) != 0) {
      return;
    }
    Element x = seifert::multiply(x0, seifert::central_power(g_.spec(), gap / n_));
    if (!seifert::equals(seifert::power(x, n_), g_)) {
      throw Error("internal: root candidate failed verification");
    }
    found_.emplace(std::move(x), true);
  }

  std::vector<Element> take() {
    std::vector<Element> out;
    out.reserve(found_.size());
    for (auto& [x, unused] : found_) {
      out.push_back(x);
    }
    return out;
  }

 private:
  const Element& g_;
  Int n_;
  std::map<Element, bool, ElementLess> found_;
};

Element factor_power(const GroupSpec& spec, int factor, const Int& exponent) {
  std::vector<freeprod::Syllable> raw{freeprod::Syllable{factor, exponent}};
  freeprod::CarryReduction cr = freeprod::reduce_with_carry(raw, spec.quotient_factors());
  return seifert::from_quotient_word(spec, std::move(cr.word), cr.carry);
}

// Exponents e with n*e congruent to target in the factor (mod its order when
// finite, exactly otherwise); used for single-syllable quotient images.
std::vector<Int> factor_root_exponents(const freeprod::FactorSpec& fs, const Int& n,
                                       const Int& target) {
  std::vector<Int> out;
  if (fs.is_finite()) {
    for (Int e = 1; e < fs.order(); ++e) {
      if (floor_mod(n * e - target, fs.order()) == 0) {
        out.push_back(e);
      }
    }
  } else if (target % n == 0 && target / n != 0) {
    out.push_back(target / n);
  }
  return out;
}

}  // namespace

std::vector<Element> roots_search(const Element& g, const Int& n, int radius) {
  if (n < 1) {
    throw InvalidArgument("root degree must be at least 1");
  }
  if (radius < 0) {
    throw InvalidArgument("root search radius must be nonnegative");
  }
  if (n == 1) {
    return {g};
  }

  const GroupSpec& spec = g.spec();
  // Necessary condition in H_1: n [x] = [g].
  seifert::AbelianImage ab = seifert::abelianize(g);
  if (ab.first % n != 0 || ab.second % n != 0) {
    return {};
  }

  RootCollector roots(g, n);
  const freeprod::ReducedWord& wg = seifert::project(g);

  if (wg.empty()) {
    // Central target h^j.  The quotient image of a root has order dividing
    // n, i.e. is trivial or a conjugate of a finite-factor power; conjugates
    // are enumerated over the radius ball (the family is infinite).
    if (g.central() % n == 0) {
      roots.offer(seifert::central_power(spec, g.central() / n));
    }
    std::vector<BallEntry> ball = generator_ball(spec, radius);
    for (int factor = 0; factor < 2; ++factor) {
      const freeprod::FactorSpec& fs = spec.quotient_factors().at(factor);
      if (!fs.is_finite()) {
        continue;
      }
      for (Int e = 1; e < fs.order(); ++e) {
        if (n % (fs.order() / int_gcd(fs.order(), e)) != 0) {
          continue;  // the image's order must divide n
        }
        Element f = factor_power(spec, factor, e);
        for (const BallEntry& entry : ball) {
          roots.offer(seifert::conjugate_by(entry.element, f));
        }
      }
    }
    return roots.take();
  }

  freeprod::CyclicReduction cr = freeprod::cyclically_reduce(wg);
  Element u = seifert::from_quotient_word(spec, cr.conjugator);

  if (cr.core.size() == 1) {
    // Quotient image conjugate into a factor: roots share the conjugating
    // word, and the core exponent determines the candidates.
    const freeprod::Syllable& core = cr.core.syllables().front();
    for (const Int& e : factor_root_exponents(spec.quotient_factors().at(core.factor), n,
                                              core.exponent)) {
      roots.offer(seifert::conjugate_by(u, factor_power(spec, core.factor, e)));
    }
    return roots.take();
  }

  // Cyclically reduced quotient length L >= 2: a root's core is a block B
  // with B^n a rotation of the core, so L = n * |B| with |B| >= 2.
  const std::size_t L = cr.core.size();
  if (Int(L) % n != 0) {
    return roots.take();
  }
  const std::size_t block = static_cast<std::size_t>(Int(L) / n);
  if (block < 2) {
    return roots.take();
  }
  const auto& syls = cr.core.syllables();
  for (std::size_t t = 0; t < L; ++t) {
    bool periodic = true;
    for (std::size_t j = 0; j < L && periodic; ++j) {
      periodic = syls[(t + j) % L] == syls[(t + j % block) % L];
    }
    if (!periodic) {
      continue;
    }
    std::vector<freeprod::Syllable> rot;
    rot.reserve(block);
    for (std::size_t j = 0; j < block; ++j) {
      rot.push_back(syls[(t + j) % L]);
    }
    Element b_elem = seifert::from_quotient_word(
        spec, freeprod::reduce(rot, spec.quotient_factors()));
    // prefix rho_t of the core: core-rotation conjugator
    std::vector<freeprod::Syllable> prefix(syls.begin(), syls.begin() + static_cast<long>(t));
    freeprod::ReducedWord rho = freeprod::reduce(prefix, spec.quotient_factors());
    freeprod::ReducedWord v =
        freeprod::concat_reduce(freeprod::invert(rho), cr.conjugator);
    roots.offer(seifert::conjugate_by(seifert::from_quotient_word(spec, v), b_elem));
  }
  return roots.take();
}

RootPairWitness unique_root_failure_witness(const GroupSpec& spec) {
  if (spec.kind() != GroupKind::TorusKnot) {
    throw InvalidArgument("unique-root failure witnesses are constructed for torus knot groups only");
  }
  Element a = seifert::generator(spec, 'a');
  Element ba = seifert::multiply(seifert::generator(spec, 'b'), a);
  Element y = seifert::conjugate_by(ba, a);
  if (seifert::equals(a, y) ||
      !seifert::equals(seifert::power(a, spec.p()), seifert::power(y, spec.p()))) {
    throw Error("internal: unique-root witness failed verification");
  }
  return RootPairWitness{std::move(a), std::move(y), spec.p()};
}

bool bs_check(const Element& x, const Element& y, const Int& m, const Int& n) {
  return seifert::equals(seifert::conjugate_by(x, seifert::power(y, m)), seifert::power(y, n));
}

}  // namespace knotgt::torsion
