#include "kappa/builtins.hpp"

#include <utility>
#include <vector>

#include "kappa/errors.hpp"

namespace kappa {

namespace {

// Adds each finalized value into its proper multiples. Ascending d guarantees
// every proper divisor of n has been folded in before n itself is read.
void accumulate_over_proper_multiples(ArithSeq& seq) {
  const std::size_t n_max = seq.n_max();
  for (std::size_t d = 1; d <= n_max / 2; ++d) {
    const BigInt& v = seq(d);
    for (std::size_t n = 2 * d; n <= n_max; n += d) seq(n) += v;
  }
}

void require_positive(std::size_t n_max) {
  if (n_max == 0) throw InvalidArgument("n_max must be at least 1");
}

}  // namespace

std::string_view function_name(FunctionId id) {
  switch (id) {
    case FunctionId::kEpsilon: return "epsilon";
    case FunctionId::kMobius: return "mobius";
    case FunctionId::kOne: return "one";
    case FunctionId::kId: return "id";
    case FunctionId::kPhi: return "phi";
    case FunctionId::kJordan: return "jordan";
    case FunctionId::kNumDivisors: return "num_divisors";
    case FunctionId::kSigma: return "sigma";
    case FunctionId::kKappa: return "kappa";
    case FunctionId::kK: return "K";
  }
  return "?";
}

FunctionId parse_function_id(std::string_view name) {
  for (FunctionId id : kAllFunctions) {
    if (function_name(id) == name) return id;
  }
  throw InvalidArgument("unknown function identifier '" + std::string(name) +
                        "'");
}

bool takes_exponent(FunctionId id) {
  return id == FunctionId::kId || id == FunctionId::kJordan ||
         id == FunctionId::kSigma || id == FunctionId::kKappa;
}

std::string function_label(FunctionId id, unsigned x) {
  std::string label(function_name(id));
  if (takes_exponent(id)) label += "_" + std::to_string(x);
  return label;
}

ArithSeq gen_builtin(FunctionId id, unsigned x, const DivisorTable& table) {
  const std::size_t n_max = table.n_max();
  ArithSeq seq = [&] {
    switch (id) {
      case FunctionId::kEpsilon: return fn::epsilon(n_max);
      case FunctionId::kMobius: return fn::mobius(table);
      case FunctionId::kOne: return fn::one(n_max);
      case FunctionId::kId: return fn::power(x, n_max);
      case FunctionId::kPhi: return fn::euler_phi(table);
      case FunctionId::kJordan: return fn::jordan(x, table);
      case FunctionId::kNumDivisors: return fn::num_divisors(n_max);
      case FunctionId::kSigma: return fn::sigma(x, n_max);
      case FunctionId::kKappa: return fn::kappa(x, n_max);
      case FunctionId::kK: return fn::ordered_factorizations(n_max);
    }
    throw InvalidArgument("gen_builtin: unknown function identifier");
  }();
  return std::move(seq).with_label(function_label(id, x));
}

ArithSeq gen_builtin(FunctionId id, unsigned x, std::size_t n_max) {
  return gen_builtin(id, x, DivisorTable(n_max));
}

ArithSeq gen_builtin(std::string_view name, unsigned x, std::size_t n_max) {
  return gen_builtin(parse_function_id(name), x, n_max);
}

namespace fn {

ArithSeq epsilon(std::size_t n_max) {
  require_positive(n_max);
  ArithSeq seq = ArithSeq::zeros(n_max, "epsilon");
  seq(1) = 1;
  return seq;
}

ArithSeq one(std::size_t n_max) {
  require_positive(n_max);
  return ArithSeq(std::vector<BigInt>(n_max, BigInt(1)), "one");
}

ArithSeq power(unsigned x, std::size_t n_max) {
  require_positive(n_max);
  std::vector<BigInt> values;
  values.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) values.push_back(ipow(n, x));
  return ArithSeq(std::move(values), "id_" + std::to_string(x));
}

ArithSeq mobius(const DivisorTable& table) {
  const std::size_t n_max = table.n_max();
  ArithSeq seq = ArithSeq::zeros(n_max, "mobius");
  seq(1) = 1;
  for (std::size_t n = 2; n <= n_max; ++n) {
    const std::size_t p = table.smallest_prime_factor(n);
    const std::size_t m = n / p;
    if (m % p != 0) seq(n) = -seq(m);
  }
  return seq;
}

ArithSeq jordan(unsigned x, const DivisorTable& table) {
  // Multiplicative: J_x(p^k) = p^(kx) - p^((k-1)x).
  const std::size_t n_max = table.n_max();
  ArithSeq seq = ArithSeq::zeros(n_max, "jordan_" + std::to_string(x));
  seq(1) = 1;
  for (std::size_t n = 2; n <= n_max; ++n) {
    const std::size_t p = table.smallest_prime_factor(n);
    std::size_t m = n;
    std::size_t pk = 1;
    while (m % p == 0) {
      m /= p;
      pk *= p;
    }
    seq(n) = seq(m) * (ipow(pk, x) - ipow(pk / p, x));
  }
  return seq;
}

ArithSeq euler_phi(const DivisorTable& table) {
  return jordan(1, table).with_label("phi");
}

ArithSeq sigma(unsigned x, std::size_t n_max) {
  require_positive(n_max);
  ArithSeq seq = ArithSeq::zeros(n_max, "sigma_" + std::to_string(x));
  for (std::size_t d = 1; d <= n_max; ++d) {
    const BigInt term = ipow(d, x);
    for (std::size_t n = d; n <= n_max; n += d) seq(n) += term;
  }
  return seq;
}

ArithSeq num_divisors(std::size_t n_max) {
  return sigma(0, n_max).with_label("num_divisors");
}

ArithSeq kappa(unsigned x, std::size_t n_max) {
  ArithSeq seq = power(x, n_max).with_label("kappa_" + std::to_string(x));
  accumulate_over_proper_multiples(seq);
  return seq;
}

ArithSeq ordered_factorizations(std::size_t n_max) {
  ArithSeq seq = epsilon(n_max).with_label("K");
  accumulate_over_proper_multiples(seq);
  return seq;
}

}  // namespace fn

}  // namespace kappa
