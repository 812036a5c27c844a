#include "kappa/identities.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "kappa/builtins.hpp"
#include "kappa/errors.hpp"
#include "kappa/oracles.hpp"

namespace kappa {
namespace {

TEST(IdentityRegistry, CoversEveryNumberedIdentity) {
  std::set<std::string> registered;
  for (const auto& check : identity_registry()) {
    EXPECT_TRUE(registered.insert(check.id).second) << "duplicate " << check.id;
    EXPECT_LE(check.exponents_required, 2u);
    EXPECT_FALSE(check.description.empty());
  }
  const std::set<std::string> expected = {"EQ3",  "EQ4",  "EQ6", "EQ7",
                                          "EQ8",  "EQ9",  "EQ10", "EQ12",
                                          "EQ13", "SC1",  "SC2", "JY"};
  EXPECT_EQ(registered, expected);

  // The two series representations are limits and live with series_partial.
  std::set<std::string> delegated;
  for (const auto& [id, description] : delegated_identities()) delegated.insert(id);
  EXPECT_EQ(delegated, (std::set<std::string>{"EQ5", "EQ11"}));

  std::set<std::string> all = registered;
  all.insert(delegated.begin(), delegated.end());
  for (int eq = 3; eq <= 13; ++eq) {
    EXPECT_TRUE(all.count("EQ" + std::to_string(eq))) << "EQ" << eq;
  }
}

TEST(IdentityRegistry, ExponentArity) {
  auto arity = [](std::string_view id) { return find_identity(id).exponents_required; };
  EXPECT_EQ(arity("EQ3"), 2u);
  EXPECT_EQ(arity("JY"), 2u);
  EXPECT_EQ(arity("EQ4"), 1u);
  EXPECT_EQ(arity("EQ7"), 1u);
  EXPECT_EQ(arity("EQ9"), 0u);
  EXPECT_EQ(arity("SC1"), 0u);
}

TEST(CheckIdentity, UnknownAndDelegatedIdsAreRejected) {
  EXPECT_THROW(check_identity("EQ99", 0, 0, 12), InvalidArgument);
  EXPECT_THROW(check_identity("EQ5", 0, 0, 12), InvalidArgument);
  EXPECT_THROW(check_identity("EQ11", 0, 0, 12), InvalidArgument);
  EXPECT_THROW(check_identity("EQ3", 0, 0, 0), InvalidArgument);
}

TEST(CheckIdentity, Examples) {
  const IdentityReport eq9 = check_identity("EQ9", 0, 0, 12);
  EXPECT_TRUE(eq9.passed);
  EXPECT_FALSE(eq9.first_failure_n.has_value());
  EXPECT_FALSE(eq9.x.has_value());

  const IdentityReport eq3 = check_identity("EQ3", 0, 0, 100);
  EXPECT_TRUE(eq3.passed);
  EXPECT_EQ(eq3.x, 0u);
  EXPECT_EQ(eq3.y, 0u);

  EXPECT_TRUE(check_identity("EQ13", 0, 0, 12).passed);

  const IdentityReport eq6 = check_identity("EQ6", 1, 0, 12);
  EXPECT_TRUE(eq6.passed);
  EXPECT_EQ(eq6.x, 1u);
  EXPECT_FALSE(eq6.y.has_value());
  const auto sides = find_identity("EQ6").evaluator(1, 0, 12);
  EXPECT_EQ(sides.rhs(6), 14);
}

TEST(CheckIdentity, SidesOfEq9MatchTableRow) {
  const auto sides = find_identity("EQ9").evaluator(0, 0, 12);
  const std::vector<BigInt> row = {1, 2, 2, 4, 2, 6, 2, 8, 4, 6, 2, 16};
  EXPECT_EQ(std::vector<BigInt>(sides.rhs.values().begin(), sides.rhs.values().end()),
            row);
}

// kappa_2(n) against sum over d | n of d^2 K(n/d), with K from the
// enumeration oracle and divisors by trial division.
TEST(CheckIdentity, Eq12AtExponentTwoAgainstOracle) {
  const std::size_t n_max = 2000;
  const IdentityReport report = check_identity("EQ12", 2, 0, n_max);
  EXPECT_TRUE(report.passed);

  const auto sides = find_identity("EQ12").evaluator(2, 0, n_max);
  std::vector<BigInt> k_oracle(n_max + 1);
  for (std::size_t n = 1; n <= n_max; ++n) {
    k_oracle[n] = oracles::count_ordered_factorizations(n);
  }
  for (std::size_t n = 1; n <= n_max; ++n) {
    BigInt expected = 0;
    for (std::uint64_t d : oracles::trial_divisors(n)) {
      expected += BigInt(d * d) * k_oracle[n / d];
    }
    ASSERT_EQ(sides.rhs(n), expected) << n;
    ASSERT_EQ(sides.lhs(n), expected) << n;
  }
}

TEST(FirstMismatch, ReportsFirstDifferingIndex) {
  ArithSeq a = fn::kappa(0, 20);
  ArithSeq b = a;
  EXPECT_FALSE(first_mismatch(a, b).has_value());
  b(17) += 1;
  b(19) -= 1;
  EXPECT_EQ(first_mismatch(a, b), 17u);
  EXPECT_THROW(first_mismatch(a, fn::one(5)), InvalidArgument);
}

TEST(CheckIdentity, FailureCarriesBothValues) {
  // 2 kappa_x = id_x + kappa_x * 1 without the factor 2: off from n = 1.
  const IdentityCheck broken{
      "BROKEN", "kappa_x = id_x + 1 * kappa_x", 1,
      [](unsigned x, unsigned, std::size_t n) -> IdentitySides {
        ArithSeq k = fn::kappa(x, n);
        return {k, fn::power(x, n) + divisor_sum(k)};
      }};
  const IdentityReport r = check_identity(broken, 1, 0, 12);
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.first_failure_n, 1u);
  EXPECT_EQ(r.lhs_value, BigInt(1));
  EXPECT_EQ(r.rhs_value, BigInt(2));

  // A sieve-style off-by-one late in the range.
  const IdentityCheck late{
      "LATE", "kappa_0 = 1 * K, perturbed at 96", 0,
      [](unsigned, unsigned, std::size_t n) -> IdentitySides {
        ArithSeq k = fn::ordered_factorizations(n);
        if (n >= 96) k(96) += 1;
        return {fn::kappa(0, n), dirichlet_convolve(fn::one(n), k)};
      }};
  EXPECT_TRUE(check_identity(late, 0, 0, 95).passed);
  const IdentityReport r2 = check_identity(late, 0, 0, 200);
  EXPECT_FALSE(r2.passed);
  EXPECT_EQ(r2.first_failure_n, 96u);
  EXPECT_EQ(*r2.rhs_value - *r2.lhs_value, 1);
}

TEST(CheckAll, SmallRangeAllPass) {
  const std::vector<unsigned> exps = {0, 1};
  const auto reports = check_all(12, exps);
  EXPECT_TRUE(all_passed(reports));
  // 5 nullary + 5 unary x 2 + 2 binary x 4.
  EXPECT_EQ(reports.size(), 5u + 10u + 8u);
}

TEST(CheckAll, SingletonRange) {
  const std::vector<unsigned> exps = {0};
  const auto reports = check_all(1, exps);
  EXPECT_TRUE(all_passed(reports));
  for (const auto& r : reports) EXPECT_EQ(r.n_max, 1u);
}

TEST(CheckAll, EmptyExponentSetIsRejected) {
  EXPECT_THROW(check_all(12, std::vector<unsigned>{}), InvalidArgument);
}

TEST(CheckAll, DeterministicOrderIndependentOfThreads) {
  const std::vector<unsigned> exps = {2, 0, 1, 1};
  const auto serial = check_all(200, exps, 1);
  const auto parallel = check_all(200, exps, 4);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i].id, parallel[i].id);
    EXPECT_EQ(serial[i].x, parallel[i].x);
    EXPECT_EQ(serial[i].y, parallel[i].y);
    EXPECT_EQ(serial[i].passed, parallel[i].passed);
  }
  // Exponents are deduplicated and pairs are ordered.
  std::vector<std::pair<unsigned, unsigned>> eq3_pairs;
  for (const auto& r : serial) {
    if (r.id == "EQ3") eq3_pairs.emplace_back(*r.x, *r.y);
  }
  EXPECT_EQ(eq3_pairs.size(), 9u);
  EXPECT_TRUE(std::is_sorted(eq3_pairs.begin(), eq3_pairs.end()));
}

// x != y makes exchange symmetry a genuine statement.
TEST(CheckAll, ExchangeSymmetryOffDiagonalAtTenThousand) {
  for (unsigned x = 0; x <= 3; ++x) {
    for (unsigned y = 0; y <= 3; ++y) {
      if (x == y) continue;
      EXPECT_TRUE(check_identity("EQ3", x, y, 10000).passed) << x << "," << y;
    }
  }
}

TEST(CheckAll, FullSuiteAtTenThousand) {
  const std::vector<unsigned> exps = {0, 1, 2, 3};
  const auto reports = check_all(10000, exps);
  EXPECT_EQ(reports.size(), 5u + 5u * 4u + 2u * 16u);
  for (const auto& r : reports) {
    EXPECT_TRUE(r.passed) << r.id << " x=" << r.x.value_or(0)
                          << " y=" << r.y.value_or(0) << " first failure at "
                          << r.first_failure_n.value_or(0);
  }
}

}  // namespace
}  // namespace kappa
