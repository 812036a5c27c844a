#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace kappa {

// Smallest-prime-factor table for 1..n_max. Divisors of any n in range are
// produced from its factorization, so no per-n trial division is needed.
class DivisorTable {
 public:
  // Throws InvalidArgument when n_max == 0.
  explicit DivisorTable(std::size_t n_max);

  std::size_t n_max() const noexcept { return n_max_; }

  // Valid for 2 <= n <= n_max.
  std::uint32_t smallest_prime_factor(std::size_t n) const;
  bool is_prime(std::size_t n) const;

  // (prime, multiplicity) pairs in ascending prime order; empty for n = 1.
  std::vector<std::pair<std::uint32_t, unsigned>> factorize(std::size_t n) const;

  // Ascending. proper_divisors excludes n itself.
  std::vector<std::size_t> divisors(std::size_t n) const;
  std::vector<std::size_t> proper_divisors(std::size_t n) const;

  // Number of prime factors counted with multiplicity.
  unsigned big_omega(std::size_t n) const;

 private:
  void check_range(std::size_t n) const;

  std::size_t n_max_;
  std::vector<std::uint32_t> spf_;  // spf_[n] for n >= 2; entries 0 and 1 unused
};

}  // namespace kappa
