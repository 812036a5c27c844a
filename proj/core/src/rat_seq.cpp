#include "kappa/rat_seq.hpp"

#include <cmath>
#include <utility>

#include "kappa/builtins.hpp"
#include "kappa/errors.hpp"

namespace kappa {

Dyadic Dyadic::abs_difference(const BigInt& target) const {
  BigInt diff = numerator - (target << exponent);
  if (diff.sign() < 0) diff = -diff;
  return {std::move(diff), exponent};
}

bool Dyadic::magnitude_at_most_pow2_neg(unsigned bits) const {
  // |num| / 2^e <= 2^-bits  <=>  |num| * 2^bits <= 2^e
  BigInt lhs = abs(numerator) << bits;
  return lhs <= (BigInt(1) << exponent);
}

double Dyadic::to_double() const {
  return std::ldexp(numerator.convert_to<double>(), -static_cast<int>(exponent));
}

bool operator==(const Dyadic& a, const Dyadic& b) {
  return (a.numerator << b.exponent) == (b.numerator << a.exponent);
}

bool operator<(const Dyadic& a, const Dyadic& b) {
  return (a.numerator << b.exponent) < (b.numerator << a.exponent);
}

RatSeq::RatSeq(std::vector<BigInt> numerators, unsigned denominator_exponent)
    : numerators_(std::move(numerators)), exponent_(denominator_exponent) {
  if (numerators_.empty()) {
    throw InvalidArgument("RatSeq: n_max must be at least 1");
  }
}

Dyadic RatSeq::abs_error(const ArithSeq& exact, std::size_t n) const {
  return at(n).abs_difference(exact.at(n));
}

RatSeq series_partial(SeriesKind kind, unsigned x, unsigned terms,
                      std::size_t n_max) {
  if (terms == 0) throw InvalidArgument("series_partial: term count must be >= 1");
  if (n_max == 0) throw InvalidArgument("series_partial: n_max must be >= 1");

  ArithSeq term = kind == SeriesKind::kKappa ? fn::power(x, n_max)
                                             : fn::epsilon(n_max);
  std::vector<BigInt> numerators(n_max);
  // Term k (1-based) carries weight 2^-k = 2^(terms-k) / 2^terms.
  for (unsigned k = 1; k <= terms; ++k) {
    const unsigned shift = terms - k;
    for (std::size_t n = 1; n <= n_max; ++n) {
      if (!term(n).is_zero()) numerators[n - 1] += term(n) << shift;
    }
    if (k < terms) term = divisor_sum(term);
  }
  return RatSeq(std::move(numerators), terms);
}

}  // namespace kappa
