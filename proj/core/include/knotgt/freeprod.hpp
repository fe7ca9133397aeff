#pragma once

// Exact word calculus in a free product of two cyclic groups H = F1 * F2,
// where F1 is finite cyclic of order >= 2 and F2 is finite cyclic or
// infinite cyclic.  Words are kept in reduced normal form (alternating
// syllables, canonical exponents), which makes equality a plain comparison.

#include <optional>
#include <span>
#include <vector>

#include "knotgt/error.hpp"
#include "knotgt/ints.hpp"

namespace knotgt::freeprod {

// One free factor: finite cyclic of the given order, or infinite cyclic.
class FactorSpec {
 public:
  static FactorSpec finite(Int order);
  static FactorSpec infinite_cyclic() { return FactorSpec(Int(0)); }

  bool is_finite() const { return order_ != 0; }
  const Int& order() const;

  friend bool operator==(const FactorSpec&, const FactorSpec&) = default;

 private:
  explicit FactorSpec(Int order) : order_(std::move(order)) {}
  Int order_;  // 0 marks the infinite factor
};

struct FactorPair {
  FactorSpec first;
  FactorSpec second;

  const FactorSpec& at(int factor) const { return factor == 0 ? first : second; }
  friend bool operator==(const FactorPair&, const FactorPair&) = default;
};

// A factor letter with an exponent.  Inside a ReducedWord the exponent is
// canonical: in [1, order-1] for a finite factor, any nonzero integer for
// the infinite factor.  As raw input the exponent is unconstrained.
struct Syllable {
  int factor = 0;  // 0 or 1
  Int exponent;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// (factor, exponent) lexicographic comparison used for canonical tie-breaks.
bool syllable_less(const Syllable& a, const Syllable& b);

class ReducedWord {
 public:
  static ReducedWord identity(FactorPair specs);

  const FactorPair& factors() const { return specs_; }
  const std::vector<Syllable>& syllables() const { return syls_; }
  bool empty() const { return syls_.empty(); }
  std::size_t size() const { return syls_.size(); }

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;

 private:
  ReducedWord(FactorPair specs, std::vector<Syllable> syls)
      : specs_(std::move(specs)), syls_(std::move(syls)) {}

  FactorPair specs_;
  std::vector<Syllable> syls_;

  friend struct Reducer;  // sole producer of reduced words
};

// Reduction result together with the net Euclidean quotient accumulated
// while folding finite-factor exponents into their canonical range.  The
// central extensions in `seifert` read the carry as an h-exponent.
struct CarryReduction {
  ReducedWord word;
  Int carry;
};

ReducedWord reduce(std::span<const Syllable> raw, const FactorPair& specs);
CarryReduction reduce_with_carry(std::span<const Syllable> raw, const FactorPair& specs);

// Group multiplication in H.  Throws SpecMismatch on differing factor pairs.
ReducedWord concat_reduce(const ReducedWord& u, const ReducedWord& v);
CarryReduction concat_reduce_with_carry(const ReducedWord& u, const ReducedWord& v);

ReducedWord invert(const ReducedWord& w);
CarryReduction invert_with_carry(const ReducedWord& w);

// w == concat(invert(conjugator), core, conjugator), with core cyclically
// reduced: first and last syllables in different factors, or size <= 1.
struct CyclicReduction {
  ReducedWord core;
  ReducedWord conjugator;
};

CyclicReduction cyclically_reduce(const ReducedWord& w);
bool is_cyclically_reduced(const ReducedWord& w);

// Conjugacy in H.  Returns a witness x with x^-1 u x = v when u and v are
// conjugate, none otherwise.  Among the cyclic-rotation matches the witness
// is the shortest candidate, ties broken by (factor, exponent) order.
std::optional<ReducedWord> are_conjugate_words(const ReducedWord& u, const ReducedWord& v);

// Minimum order over the syllables of a cyclically reduced word of syllable
// length >= 2; nullopt means every syllable has infinite order.  Throws
// InvalidArgument when the precondition fails.
std::optional<Int> min_syllable_order(const ReducedWord& w);

// Total order (length first, then syllable-wise) for deterministic output.
bool word_less(const ReducedWord& u, const ReducedWord& v);

}  // namespace knotgt::freeprod
