#pragma once

#include <cstddef>
#include <vector>

#include "kappa/arith_seq.hpp"
#include "kappa/big_int.hpp"

namespace kappa {

// numerator / 2^exponent. Not reduced; comparisons cross-multiply.
struct Dyadic {
  BigInt numerator;
  unsigned exponent = 0;

  // |this - target|, exact.
  Dyadic abs_difference(const BigInt& target) const;

  // True when |this| <= 2^-bits.
  bool magnitude_at_most_pow2_neg(unsigned bits) const;

  double to_double() const;

  friend bool operator==(const Dyadic& a, const Dyadic& b);
  friend bool operator<(const Dyadic& a, const Dyadic& b);
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return !(b < a); }
};

// Sequence of dyadic rationals on 1..n_max sharing the denominator 2^m.
class RatSeq {
 public:
  // Throws InvalidArgument if numerators is empty.
  RatSeq(std::vector<BigInt> numerators, unsigned denominator_exponent);

  std::size_t n_max() const noexcept { return numerators_.size(); }
  unsigned denominator_exponent() const noexcept { return exponent_; }
  const BigInt& numerator(std::size_t n) const { return numerators_.at(n - 1); }

  Dyadic at(std::size_t n) const { return {numerator(n), exponent_}; }

  // |this(n) - exact(n)| as an exact dyadic.
  Dyadic abs_error(const ArithSeq& exact, std::size_t n) const;

 private:
  std::vector<BigInt> numerators_;
  unsigned exponent_;
};

enum class SeriesKind { kKappa, kK };

// Partial sum of the first `terms` terms of
//   kappa_x = id_x/2 + 1*id_x/2^2 + 1*1*id_x/2^3 + ...
//   K       = eps/2  + 1/2^2      + 1*1/2^3      + ...
// Each term is the previous one convolved with 1, so the cost is
// O(terms * N log N). The exponent is ignored for kK. Throws InvalidArgument
// when terms == 0 or n_max == 0.
RatSeq series_partial(SeriesKind kind, unsigned x, unsigned terms,
                      std::size_t n_max);

}  // namespace kappa
