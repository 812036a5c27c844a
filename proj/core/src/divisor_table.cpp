#include "kappa/divisor_table.hpp"

#include <algorithm>
#include <string>

#include "kappa/errors.hpp"

namespace kappa {

DivisorTable::DivisorTable(std::size_t n_max) : n_max_(n_max) {
  if (n_max == 0) {
    throw InvalidArgument("DivisorTable: n_max must be at least 1");
  }
  spf_.assign(n_max + 1, 0);
  for (std::size_t p = 2; p <= n_max; ++p) {
    if (spf_[p] != 0) continue;
    for (std::size_t m = p; m <= n_max; m += p) {
      if (spf_[m] == 0) spf_[m] = static_cast<std::uint32_t>(p);
    }
  }
}

void DivisorTable::check_range(std::size_t n) const {
  if (n == 0 || n > n_max_) {
    throw InvalidArgument("DivisorTable: index " + std::to_string(n) +
                          " outside 1.." + std::to_string(n_max_));
  }
}

std::uint32_t DivisorTable::smallest_prime_factor(std::size_t n) const {
  check_range(n);
  if (n < 2) throw InvalidArgument("DivisorTable: 1 has no prime factor");
  return spf_[n];
}

bool DivisorTable::is_prime(std::size_t n) const {
  check_range(n);
  return n >= 2 && spf_[n] == n;
}

std::vector<std::pair<std::uint32_t, unsigned>> DivisorTable::factorize(
    std::size_t n) const {
  check_range(n);
  std::vector<std::pair<std::uint32_t, unsigned>> factors;
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    unsigned k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    factors.emplace_back(p, k);
  }
  return factors;
}

std::vector<std::size_t> DivisorTable::divisors(std::size_t n) const {
  std::vector<std::size_t> result{1};
  for (const auto& [p, k] : factorize(n)) {
    const std::size_t existing = result.size();
    std::size_t power = 1;
    for (unsigned i = 0; i < k; ++i) {
      power *= p;
      for (std::size_t j = 0; j < existing; ++j) {
        result.push_back(result[j] * power);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<std::size_t> DivisorTable::proper_divisors(std::size_t n) const {
  auto result = divisors(n);
  result.pop_back();
  return result;
}

unsigned DivisorTable::big_omega(std::size_t n) const {
  unsigned total = 0;
  for (const auto& factor : factorize(n)) total += factor.second;
  return total;
}

}  // namespace kappa
