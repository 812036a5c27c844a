#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kappa/arith_seq.hpp"
#include "kappa/big_int.hpp"

namespace kappa {

// Both sides of an identity, tabulated on 1..n_max.
struct IdentitySides {
  ArithSeq lhs;
  ArithSeq rhs;
};

struct IdentityCheck {
  std::string id;
  std::string description;
  unsigned exponents_required = 0;  // 0, 1 or 2
  std::function<IdentitySides(unsigned x, unsigned y, std::size_t n_max)>
      evaluator;
};

struct IdentityReport {
  std::string id;
  // Unset when the identity does not use that exponent.
  std::optional<unsigned> x;
  std::optional<unsigned> y;
  std::size_t n_max = 0;
  bool passed = false;
  std::optional<std::size_t> first_failure_n;
  std::optional<BigInt> lhs_value;
  std::optional<BigInt> rhs_value;
};

// Every exactly checkable identity, ordered by id as listed: EQ3, EQ4, EQ6,
// EQ7, EQ8, EQ9, EQ10, EQ12, EQ13, SC1, SC2, JY.
const std::vector<IdentityCheck>& identity_registry();

// Identities that hold only as a limit and are therefore checked through the
// exact truncated series (series_partial), not through this registry. Each
// entry is (id, description).
const std::vector<std::pair<std::string, std::string>>& delegated_identities();

const IdentityCheck& find_identity(std::string_view id);  // throws InvalidArgument

// Exponents that an identity does not use are ignored.
IdentityReport check_identity(std::string_view id, unsigned x, unsigned y,
                              std::size_t n_max);
IdentityReport check_identity(const IdentityCheck& check, unsigned x,
                              unsigned y, std::size_t n_max);

// Runs each registered identity for every required exponent combination from
// exponent_set (ordered pairs, diagonal included, for two-exponent
// identities). Reports are sorted by (registry order, x, y). threads == 0
// picks the hardware concurrency; the result does not depend on it.
std::vector<IdentityReport> check_all(std::size_t n_max,
                                      std::span<const unsigned> exponent_set,
                                      unsigned threads = 0);

bool all_passed(std::span<const IdentityReport> reports);

// First index where the two sides differ, or nullopt.
std::optional<std::size_t> first_mismatch(const ArithSeq& lhs,
                                          const ArithSeq& rhs);

}  // namespace kappa
