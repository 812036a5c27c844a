#pragma once

#include <cstdint>
#include <vector>

#include "kappa/big_int.hpp"

// Slow reference implementations. Nothing here touches DivisorTable or the
// sieve generators, so a bug there cannot hide in both places at once.
namespace kappa::oracles {

// Number of ordered factorizations of n into factors > 1, by recursion over
// the first factor: K(n) = sum over f | n, f >= 2 of K(n / f), K(1) = 1.
// Throws InvalidArgument for n == 0.
BigInt count_ordered_factorizations(std::uint64_t n);

// Every ordered factorization of n into factors > 1, in lexicographic order
// of the factor lists. n = 1 yields one empty list.
std::vector<std::vector<std::uint64_t>> enumerate_ordered_factorizations(
    std::uint64_t n);

// kappa_x(n) by memoized recursion over proper divisors found by trial
// division. Throws InvalidArgument for n == 0.
BigInt naive_kappa(unsigned x, std::uint64_t n);

// Divisors of n in ascending order, by trial division up to sqrt(n).
std::vector<std::uint64_t> trial_divisors(std::uint64_t n);

}  // namespace kappa::oracles
