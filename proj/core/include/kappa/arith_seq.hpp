#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "kappa/big_int.hpp"

namespace kappa {

// An arithmetic function tabulated exactly on 1..n_max.
//
// Values are addressed 1-based: f(1) is the first entry. The label is
// descriptive only and does not take part in equality.
class ArithSeq {
 public:
  // Throws InvalidArgument if values is empty.
  explicit ArithSeq(std::vector<BigInt> values, std::string label = {});

  static ArithSeq zeros(std::size_t n_max, std::string label = {});

  std::size_t n_max() const noexcept { return values_.size(); }
  const std::string& label() const noexcept { return label_; }
  std::span<const BigInt> values() const noexcept { return values_; }

  // Unchecked, 1-based.
  const BigInt& operator()(std::size_t n) const { return values_[n - 1]; }
  BigInt& operator()(std::size_t n) { return values_[n - 1]; }

  // Checked, 1-based. Throws InvalidArgument when n is outside 1..n_max.
  const BigInt& at(std::size_t n) const;

  ArithSeq with_label(std::string label) const&;
  ArithSeq with_label(std::string label) &&;

  // Leading n_max values; throws InvalidArgument if n_max exceeds this range.
  ArithSeq prefix(std::size_t n_max) const;

  friend bool operator==(const ArithSeq& a, const ArithSeq& b) {
    return a.values_ == b.values_;
  }

  ArithSeq& operator+=(const ArithSeq& other);
  ArithSeq& operator-=(const ArithSeq& other);
  ArithSeq& operator*=(const BigInt& scalar);

 private:
  std::vector<BigInt> values_;
  std::string label_;
};

// Pointwise arithmetic. Mismatched ranges throw InvalidArgument.
ArithSeq operator+(ArithSeq a, const ArithSeq& b);
ArithSeq operator-(ArithSeq a, const ArithSeq& b);
ArithSeq operator*(const BigInt& scalar, ArithSeq a);

// (f * g)(n) = sum over d | n of f(d) g(n/d), computed by walking the
// multiples of each d: O(N log N) multiplications. Throws InvalidArgument on
// mismatched ranges.
ArithSeq dirichlet_convolve(const ArithSeq& f, const ArithSeq& g);

// g with f * g = epsilon on 1..n_max. Requires f(1) = +1 or -1 so the inverse
// stays integral; otherwise throws NotAUnit.
ArithSeq dirichlet_inverse(const ArithSeq& f);

// (1 * f)(n) = sum over d | n of f(d). Same as convolving with the constant
// function but skips the multiplications.
ArithSeq divisor_sum(const ArithSeq& f);

}  // namespace kappa
