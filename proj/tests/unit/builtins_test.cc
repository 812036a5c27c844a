#include "kappa/builtins.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "kappa/errors.hpp"

namespace kappa {
namespace {

std::vector<BigInt> ints(std::initializer_list<long> values) {
  return std::vector<BigInt>(values.begin(), values.end());
}

std::vector<BigInt> values_of(const ArithSeq& f) {
  return {f.values().begin(), f.values().end()};
}

struct Row {
  FunctionId id;
  unsigned x;
  std::vector<BigInt> expected;
};

// First twelve values of each fully tabulated row.
TEST(GenBuiltin, TableRows) {
  const std::vector<Row> rows = {
      {FunctionId::kEpsilon, 0, ints({1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0})},
      {FunctionId::kMobius, 0, ints({1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0})},
      {FunctionId::kOne, 0, ints({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1})},
      {FunctionId::kId, 1, ints({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12})},
      {FunctionId::kPhi, 0, ints({1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4})},
      {FunctionId::kNumDivisors, 0, ints({1, 2, 2, 3, 2, 4, 2, 4, 3, 4, 2, 6})},
      {FunctionId::kSigma, 1, ints({1, 3, 4, 7, 6, 12, 8, 15, 13, 18, 12, 28})},
      {FunctionId::kKappa, 0, ints({1, 2, 2, 4, 2, 6, 2, 8, 4, 6, 2, 16})},
      {FunctionId::kKappa, 1, ints({1, 3, 4, 8, 6, 14, 8, 20, 14, 20, 12, 42})},
      {FunctionId::kK, 0, ints({1, 1, 1, 2, 1, 3, 1, 4, 2, 3, 1, 8})},
  };
  for (const Row& row : rows) {
    EXPECT_EQ(values_of(gen_builtin(row.id, row.x, 12)), row.expected)
        << function_label(row.id, row.x);
  }
}

TEST(GenBuiltin, WorkedExamples) {
  EXPECT_EQ(gen_builtin(FunctionId::kKappa, 0, 4)(4), 4);
  EXPECT_EQ(gen_builtin(FunctionId::kKappa, 1, 6)(6), 14);
  EXPECT_EQ(values_of(gen_builtin(FunctionId::kJordan, 2, 4)), ints({1, 3, 8, 12}));
  EXPECT_EQ(values_of(gen_builtin(FunctionId::kEpsilon, 0, 5)), ints({1, 0, 0, 0, 0}));
  EXPECT_EQ(gen_builtin(FunctionId::kK, 0, 8)(8), 4);
}

TEST(GenBuiltin, SymbolicPatternsForSmallExponents) {
  for (unsigned x = 0; x <= 3; ++x) {
    const BigInt p2 = ipow(2, x), p3 = ipow(3, x), p4 = ipow(4, x);
    EXPECT_EQ(values_of(fn::sigma(x, 4)),
              (std::vector<BigInt>{1, p2 + 1, p3 + 1, p4 + p2 + 1})) << x;
    EXPECT_EQ(values_of(fn::power(x, 4)), (std::vector<BigInt>{1, p2, p3, p4})) << x;
    EXPECT_EQ(values_of(fn::jordan(x, DivisorTable(4))),
              (std::vector<BigInt>{1, p2 - 1, p3 - 1, p4 - p2})) << x;
    EXPECT_EQ(values_of(fn::kappa(x, 4)),
              (std::vector<BigInt>{1, p2 + 1, p3 + 1, p4 + p2 + 2})) << x;
  }
}

TEST(GenBuiltin, SingletonRangeGivesOne) {
  for (FunctionId id : kAllFunctions) {
    for (unsigned x = 0; x <= 3; ++x) {
      const ArithSeq f = gen_builtin(id, x, 1);
      ASSERT_EQ(f.n_max(), 1u);
      EXPECT_EQ(f(1), 1) << function_label(id, x);
    }
  }
}

TEST(GenBuiltin, ValueAtOneIsOne) {
  const DivisorTable table(500);
  for (FunctionId id : kAllFunctions) {
    for (unsigned x = 0; x <= 3; ++x) {
      const ArithSeq f = gen_builtin(id, x, table);
      EXPECT_EQ(f(1), 1) << function_label(id, x);
      EXPECT_EQ(dirichlet_inverse(f)(1), 1) << function_label(id, x);
    }
  }
}

TEST(GenBuiltin, ZeroRangeIsRejected) {
  for (FunctionId id : kAllFunctions) {
    EXPECT_THROW(gen_builtin(id, 1, 0), InvalidArgument) << function_name(id);
  }
}

TEST(GenBuiltin, NamesRoundTripAndUnknownIsRejected) {
  for (FunctionId id : kAllFunctions) {
    EXPECT_EQ(parse_function_id(function_name(id)), id);
  }
  EXPECT_THROW(parse_function_id("kappa0"), InvalidArgument);
  EXPECT_THROW(gen_builtin("zeta", 0, 10), InvalidArgument);
  EXPECT_EQ(gen_builtin("kappa", 1, 6).label(), "kappa_1");
  EXPECT_EQ(gen_builtin("mobius", 7, 6).label(), "mobius");
}

TEST(GenBuiltin, ExponentIgnoredWhereUnused) {
  EXPECT_EQ(gen_builtin(FunctionId::kK, 0, 200), gen_builtin(FunctionId::kK, 3, 200));
  EXPECT_EQ(gen_builtin(FunctionId::kPhi, 0, 200), gen_builtin(FunctionId::kPhi, 2, 200));
}

TEST(GenBuiltin, JordanEqualsMobiusConvolvedWithPower) {
  const std::size_t n_max = 10000;
  const DivisorTable table(n_max);
  const ArithSeq mu = fn::mobius(table);
  for (unsigned x = 0; x <= 3; ++x) {
    EXPECT_EQ(fn::jordan(x, table), dirichlet_convolve(mu, fn::power(x, n_max))) << x;
  }
  EXPECT_EQ(fn::euler_phi(table), dirichlet_convolve(mu, fn::power(1, n_max)));
  EXPECT_EQ(fn::jordan(0, table), fn::epsilon(n_max));
}

TEST(GenBuiltin, MobiusMatchesDefinition) {
  const std::size_t n_max = 5000;
  const ArithSeq mu = fn::mobius(DivisorTable(n_max));
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::size_t m = n;
    int sign = 1;
    bool square_free = true;
    for (std::size_t p = 2; p * p <= m; ++p) {
      if (m % p != 0) continue;
      m /= p;
      if (m % p == 0) square_free = false;
      while (m % p == 0) m /= p;
      sign = -sign;
    }
    if (m > 1) sign = -sign;
    ASSERT_EQ(mu(n), square_free ? sign : 0) << n;
  }
}

// 2 kappa_x(n) = n^x + sum over all d | n of kappa_x(d).
TEST(GenBuiltin, DoublingForm) {
  const std::size_t n_max = 10000;
  const DivisorTable table(n_max);
  for (unsigned x = 0; x <= 3; ++x) {
    const ArithSeq k = fn::kappa(x, n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
      BigInt rhs = ipow(n, x);
      for (std::size_t d : table.divisors(n)) rhs += k(d);
      ASSERT_EQ(2 * k(n), rhs) << "x = " << x << ", n = " << n;
    }
  }
}

// kappa and K are not multiplicative.
TEST(GenBuiltin, KappaIsNotMultiplicative) {
  const ArithSeq k = fn::kappa(0, 12);
  EXPECT_EQ(k(12), 16);
  EXPECT_NE(k(12), k(4) * k(3));
}

// Prime powers: kappa_x(p^k) = p^(kx) + sum_{j<k} 2^(k-1-j) p^(jx).
TEST(GenBuiltin, PrimePowerClosedForm) {
  const ArithSeq k3 = fn::kappa(3, 8192);
  BigInt expected = ipow(2, 3 * 13);
  for (unsigned j = 0; j < 13; ++j) expected += ipow(2, 12 - j) * ipow(2, 3 * j);
  EXPECT_EQ(k3(8192), expected);

  const ArithSeq k1 = fn::kappa(1, 3 * 3 * 3 * 3 * 3);
  expected = ipow(3, 5);
  for (unsigned j = 0; j < 5; ++j) expected += ipow(2, 4 - j) * ipow(3, j);
  EXPECT_EQ(k1(243), expected);
}

}  // namespace
}  // namespace kappa
