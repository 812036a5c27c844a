#include "kappa/arith_seq.hpp"

#include <utility>

#include "kappa/errors.hpp"

namespace kappa {

namespace {

void require_same_range(const ArithSeq& a, const ArithSeq& b, const char* op) {
  if (a.n_max() != b.n_max()) {
    throw InvalidArgument(std::string(op) + ": range mismatch (" +
                          std::to_string(a.n_max()) + " vs " +
                          std::to_string(b.n_max()) + ")");
  }
}

}  // namespace

ArithSeq::ArithSeq(std::vector<BigInt> values, std::string label)
    : values_(std::move(values)), label_(std::move(label)) {
  if (values_.empty()) {
    throw InvalidArgument("ArithSeq: n_max must be at least 1");
  }
}

ArithSeq ArithSeq::zeros(std::size_t n_max, std::string label) {
  return ArithSeq(std::vector<BigInt>(n_max), std::move(label));
}

const BigInt& ArithSeq::at(std::size_t n) const {
  if (n == 0 || n > values_.size()) {
    throw InvalidArgument("ArithSeq: index " + std::to_string(n) +
                          " outside 1.." + std::to_string(values_.size()));
  }
  return values_[n - 1];
}

ArithSeq ArithSeq::with_label(std::string label) const& {
  return ArithSeq(values_, std::move(label));
}

ArithSeq ArithSeq::with_label(std::string label) && {
  label_ = std::move(label);
  return std::move(*this);
}

ArithSeq ArithSeq::prefix(std::size_t n_max) const {
  if (n_max == 0 || n_max > values_.size()) {
    throw InvalidArgument("ArithSeq::prefix: bound " + std::to_string(n_max) +
                          " outside 1.." + std::to_string(values_.size()));
  }
  return ArithSeq(std::vector<BigInt>(values_.begin(), values_.begin() + n_max),
                  label_);
}

ArithSeq& ArithSeq::operator+=(const ArithSeq& other) {
  require_same_range(*this, other, "operator+");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

ArithSeq& ArithSeq::operator-=(const ArithSeq& other) {
  require_same_range(*this, other, "operator-");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

ArithSeq& ArithSeq::operator*=(const BigInt& scalar) {
  for (auto& v : values_) v *= scalar;
  return *this;
}

ArithSeq operator+(ArithSeq a, const ArithSeq& b) { return a += b; }
ArithSeq operator-(ArithSeq a, const ArithSeq& b) { return a -= b; }
ArithSeq operator*(const BigInt& scalar, ArithSeq a) { return a *= scalar; }

ArithSeq dirichlet_convolve(const ArithSeq& f, const ArithSeq& g) {
  require_same_range(f, g, "dirichlet_convolve");
  const std::size_t n_max = f.n_max();
  ArithSeq result = ArithSeq::zeros(n_max);
  BigInt product;
  for (std::size_t d = 1; d <= n_max; ++d) {
    const BigInt& fd = f(d);
    if (fd.is_zero()) continue;
    for (std::size_t e = 1, n = d; n <= n_max; ++e, n += d) {
      const BigInt& ge = g(e);
      if (ge.is_zero()) continue;
      boost::multiprecision::multiply(product, fd, ge);
      result(n) += product;
    }
  }
  return result;
}

ArithSeq dirichlet_inverse(const ArithSeq& f) {
  const BigInt& unit = f(1);
  if (unit != 1 && unit != -1) {
    throw NotAUnit("dirichlet_inverse: f(1) = " + unit.str() +
                   " is not +1 or -1, no integer inverse exists");
  }
  const std::size_t n_max = f.n_max();
  // acc(n) collects sum over proper divisors d of n of f(n/d) g(d); each g(d)
  // is final by the time the outer loop reaches d.
  ArithSeq g = ArithSeq::zeros(n_max);
  g(1) = unit;
  BigInt product;
  for (std::size_t d = 1; d <= n_max; ++d) {
    if (d > 1) {
      g(d) = unit.sign() > 0 ? BigInt(-g(d)) : g(d);
    }
    const BigInt& gd = g(d);
    if (gd.is_zero()) continue;
    for (std::size_t k = 2, n = 2 * d; n <= n_max; ++k, n += d) {
      const BigInt& fk = f(k);
      if (fk.is_zero()) continue;
      boost::multiprecision::multiply(product, fk, gd);
      g(n) += product;
    }
  }
  return g;
}

ArithSeq divisor_sum(const ArithSeq& f) {
  const std::size_t n_max = f.n_max();
  ArithSeq result = ArithSeq::zeros(n_max);
  for (std::size_t d = 1; d <= n_max; ++d) {
    const BigInt& fd = f(d);
    if (fd.is_zero()) continue;
    for (std::size_t n = d; n <= n_max; n += d) result(n) += fd;
  }
  return result;
}

}  // namespace kappa
