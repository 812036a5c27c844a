#include "kappa/oracles.hpp"

#include <unordered_map>

#include "kappa/errors.hpp"

namespace kappa::oracles {

namespace {

using Memo = std::unordered_map<std::uint64_t, BigInt>;

BigInt count_from(std::uint64_t n, Memo& memo) {
  if (n == 1) return 1;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  BigInt total = 0;
  for (std::uint64_t first : trial_divisors(n)) {
    if (first >= 2) total += count_from(n / first, memo);
  }
  memo.emplace(n, total);
  return total;
}

void enumerate_from(std::uint64_t n, std::vector<std::uint64_t>& prefix,
                    std::vector<std::vector<std::uint64_t>>& out) {
  if (n == 1) {
    out.push_back(prefix);
    return;
  }
  for (std::uint64_t first : trial_divisors(n)) {
    if (first < 2) continue;
    prefix.push_back(first);
    enumerate_from(n / first, prefix, out);
    prefix.pop_back();
  }
}

BigInt kappa_from(unsigned x, std::uint64_t n, Memo& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  BigInt total = ipow(n, x);
  for (std::uint64_t d : trial_divisors(n)) {
    if (d < n) total += kappa_from(x, d, memo);
  }
  memo.emplace(n, total);
  return total;
}

}  // namespace

std::vector<std::uint64_t> trial_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small;
  std::vector<std::uint64_t> large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

BigInt count_ordered_factorizations(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("count_ordered_factorizations: n must be >= 1");
  Memo memo;
  return count_from(n, memo);
}

std::vector<std::vector<std::uint64_t>> enumerate_ordered_factorizations(
    std::uint64_t n) {
  if (n == 0) {
    throw InvalidArgument("enumerate_ordered_factorizations: n must be >= 1");
  }
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> prefix;
  enumerate_from(n, prefix, out);
  return out;
}

BigInt naive_kappa(unsigned x, std::uint64_t n) {
  if (n == 0) throw InvalidArgument("naive_kappa: n must be >= 1");
  Memo memo;
  return kappa_from(x, n, memo);
}

}  // namespace kappa::oracles
