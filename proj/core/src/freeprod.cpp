#include "knotgt/freeprod.hpp"

#include <algorithm>
#include <utility>

namespace knotgt::freeprod {

FactorSpec FactorSpec::finite(Int order) {
  if (order < 2) {
    throw InvalidArgument("finite factor order must be at least 2");
  }
  return FactorSpec(std::move(order));
}

const Int& FactorSpec::order() const {
  if (!is_finite()) {
    throw InvalidArgument("the infinite factor has no finite order");
  }
  return order_;
}

bool syllable_less(const Syllable& a, const Syllable& b) {
  if (a.factor != b.factor) {
    return a.factor < b.factor;
  }
  return a.exponent < b.exponent;
}

ReducedWord ReducedWord::identity(FactorPair specs) {
  return ReducedWord(std::move(specs), {});
}

// Stack-based reduction.  Pushing a syllable merges it with a same-factor
// top, folds the exponent into canonical range (accumulating the Euclidean
// quotient as carry), and drops vanished syllables.  Dropping re-exposes the
// previous syllable, which the next push merges with in turn.
struct Reducer {
  explicit Reducer(FactorPair specs) : specs(std::move(specs)) {}

  void push(int factor, Int exponent) {
    if (!out.empty() && out.back().factor == factor) {
      exponent += out.back().exponent;
      out.pop_back();
    }
    const FactorSpec& fs = specs.at(factor);
    if (fs.is_finite()) {
      const Int& m = fs.order();
      carry += floor_div(exponent, m);
      exponent = floor_mod(exponent, m);
    }
    if (exponent != 0) {
      out.push_back(Syllable{factor, std::move(exponent)});
    }
  }

  void push_all(std::span<const Syllable> raw) {
    for (const Syllable& s : raw) {
      push(s.factor, s.exponent);
    }
  }

  CarryReduction take() {
    return CarryReduction{ReducedWord(std::move(specs), std::move(out)), std::move(carry)};
  }

  FactorPair specs;
  std::vector<Syllable> out;
  Int carry = 0;
};

CarryReduction reduce_with_carry(std::span<const Syllable> raw, const FactorPair& specs) {
  for (const Syllable& s : raw) {
    if (s.factor != 0 && s.factor != 1) {
      throw InvalidArgument("syllable factor index must be 0 or 1");
    }
  }
  Reducer r(specs);
  r.push_all(raw);
  return r.take();
}

ReducedWord reduce(std::span<const Syllable> raw, const FactorPair& specs) {
  return reduce_with_carry(raw, specs).word;
}

static void check_same_specs(const ReducedWord& u, const ReducedWord& v) {
  if (u.factors() != v.factors()) {
    throw SpecMismatch("words live in free products with different factor specifications");
  }
}

CarryReduction concat_reduce_with_carry(const ReducedWord& u, const ReducedWord& v) {
  check_same_specs(u, v);
  Reducer r(u.factors());
  r.push_all(u.syllables());
  r.push_all(v.syllables());
  return r.take();
}

ReducedWord concat_reduce(const ReducedWord& u, const ReducedWord& v) {
  return concat_reduce_with_carry(u, v).word;
}

CarryReduction invert_with_carry(const ReducedWord& w) {
  Reducer r(w.factors());
  const auto& syls = w.syllables();
  for (auto it = syls.rbegin(); it != syls.rend(); ++it) {
    r.push(it->factor, -it->exponent);
  }
  return r.take();
}

ReducedWord invert(const ReducedWord& w) { return invert_with_carry(w).word; }

bool is_cyclically_reduced(const ReducedWord& w) {
  return w.size() <= 1 || w.syllables().front().factor != w.syllables().back().factor;
}

CyclicReduction cyclically_reduce(const ReducedWord& w) {
  ReducedWord core = w;
  ReducedWord conjugator = ReducedWord::identity(w.factors());
  while (!is_cyclically_reduced(core)) {
    // Rotate by the last syllable s: core -> s * core * s^-1, which merges s
    // into the first syllable.  Then w == conj^-1 * core * conj throughout.
    const Syllable s = core.syllables().back();
    Reducer r(w.factors());
    r.push(s.factor, s.exponent);
    r.push_all(core.syllables());
    r.push(s.factor, -s.exponent);
    core = r.take().word;

    Reducer c(w.factors());
    c.push(s.factor, s.exponent);
    c.push_all(conjugator.syllables());
    conjugator = c.take().word;
  }
  return CyclicReduction{std::move(core), std::move(conjugator)};
}

bool word_less(const ReducedWord& u, const ReducedWord& v) {
  if (u.size() != v.size()) {
    return u.size() < v.size();
  }
  const auto& a = u.syllables();
  const auto& b = v.syllables();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) {
      return syllable_less(a[i], b[i]);
    }
  }
  return false;
}

static ReducedWord prefix_word(const ReducedWord& w, std::size_t count) {
  Reducer r(w.factors());
  for (std::size_t i = 0; i < count; ++i) {
    const Syllable& s = w.syllables()[i];
    r.push(s.factor, s.exponent);
  }
  return r.take().word;
}

static ReducedWord rotate_left(const ReducedWord& w, std::size_t i) {
  Reducer r(w.factors());
  const auto& syls = w.syllables();
  for (std::size_t j = 0; j < syls.size(); ++j) {
    const Syllable& s = syls[(i + j) % syls.size()];
    r.push(s.factor, s.exponent);
  }
  return r.take().word;
}

std::optional<ReducedWord> are_conjugate_words(const ReducedWord& u, const ReducedWord& v) {
  check_same_specs(u, v);
  CyclicReduction cu = cyclically_reduce(u);
  CyclicReduction cv = cyclically_reduce(v);
  if (cu.core.size() != cv.core.size()) {
    return std::nullopt;  // cyclically reduced length is a conjugacy invariant
  }

  if (cu.core.empty()) {
    return ReducedWord::identity(u.factors());  // both are the identity
  }

  if (cu.core.size() == 1) {
    // Factor elements: the factors are abelian, so conjugate iff equal.
    if (cu.core != cv.core) {
      return std::nullopt;
    }
    // Every conjugator has the form cu^-1 * f^t * cv: the centralizer of u
    // is the core's factor pulled back through cu.  Candidate exponents t
    // are the full range for a finite factor; for the infinite factor only
    // the junction-cancelling choices can shorten the t = 0 witness.
    const int factor = cu.core.syllables().front().factor;
    const FactorSpec& fs = u.factors().at(factor);
    ReducedWord left = invert(cu.conjugator);
    std::vector<Int> exponents{0};
    if (fs.is_finite()) {
      for (Int t = 1; t < fs.order(); ++t) {
        exponents.push_back(t);
      }
    } else {
      if (!left.empty() && left.syllables().back().factor == factor) {
        exponents.push_back(-left.syllables().back().exponent);
      }
      if (!cv.conjugator.empty() && cv.conjugator.syllables().front().factor == factor) {
        exponents.push_back(-cv.conjugator.syllables().front().exponent);
      }
      if (exponents.size() == 3) {
        exponents.push_back(exponents[1] + exponents[2]);
      }
    }
    std::optional<ReducedWord> best;
    for (const Int& t : exponents) {
      Reducer r(u.factors());
      r.push_all(left.syllables());
      if (t != 0) {
        r.push(factor, t);
      }
      r.push_all(cv.conjugator.syllables());
      ReducedWord candidate = r.take().word;
      if (!best || word_less(candidate, *best)) {
        best = std::move(candidate);
      }
    }
    return best;
  }

  // Cyclically reduced length >= 2: conjugates are exactly the syllable
  // rotations of the core.  For a match at offset i the witness is
  // cu.conjugator^-1 * prefix_i(core) * cv.conjugator.
  std::optional<ReducedWord> best;
  for (std::size_t i = 0; i < cu.core.size(); ++i) {
    if (rotate_left(cu.core, i) != cv.core) {
      continue;
    }
    Reducer r(u.factors());
    r.push_all(invert(cu.conjugator).syllables());
    r.push_all(prefix_word(cu.core, i).syllables());
    r.push_all(cv.conjugator.syllables());
    ReducedWord candidate = r.take().word;
    if (!best || word_less(candidate, *best)) {
      best = std::move(candidate);
    }
  }
  return best;
}

std::optional<Int> min_syllable_order(const ReducedWord& w) {
  if (w.size() < 2 || !is_cyclically_reduced(w)) {
    throw InvalidArgument("min_syllable_order requires a cyclically reduced word of syllable length >= 2");
  }
  std::optional<Int> best;
  for (const Syllable& s : w.syllables()) {
    const FactorSpec& fs = w.factors().at(s.factor);
    if (!fs.is_finite()) {
      continue;  // infinite order, no constraint
    }
    Int ord = fs.order() / int_gcd(fs.order(), s.exponent);
    if (!best || ord < *best) {
      best = std::move(ord);
    }
  }
  return best;
}

}  // namespace knotgt::freeprod
