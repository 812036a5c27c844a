#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

#include "kappa/arith_seq.hpp"
#include "kappa/divisor_table.hpp"

namespace kappa {

enum class FunctionId {
  kEpsilon,
  kMobius,
  kOne,
  kId,
  kPhi,
  kJordan,
  kNumDivisors,
  kSigma,
  kKappa,
  kK,
};

inline constexpr std::array<FunctionId, 10> kAllFunctions = {
    FunctionId::kEpsilon, FunctionId::kMobius,      FunctionId::kOne,
    FunctionId::kId,      FunctionId::kPhi,         FunctionId::kJordan,
    FunctionId::kNumDivisors, FunctionId::kSigma,   FunctionId::kKappa,
    FunctionId::kK,
};

// Identifiers as accepted on the command line: epsilon, mobius, one, id, phi,
// jordan, num_divisors, sigma, kappa, K.
std::string_view function_name(FunctionId id);
FunctionId parse_function_id(std::string_view name);  // throws InvalidArgument

// True for id, jordan, sigma and kappa; the exponent is ignored otherwise.
bool takes_exponent(FunctionId id);

// Label such as "kappa_1" or "mobius".
std::string function_label(FunctionId id, unsigned x);

ArithSeq gen_builtin(FunctionId id, unsigned x, std::size_t n_max);
ArithSeq gen_builtin(FunctionId id, unsigned x, const DivisorTable& table);
ArithSeq gen_builtin(std::string_view name, unsigned x, std::size_t n_max);

namespace fn {

ArithSeq epsilon(std::size_t n_max);
ArithSeq one(std::size_t n_max);
ArithSeq power(unsigned x, std::size_t n_max);  // id_x(n) = n^x
ArithSeq mobius(const DivisorTable& table);
ArithSeq jordan(unsigned x, const DivisorTable& table);  // J_1 = phi, J_0 = epsilon
ArithSeq euler_phi(const DivisorTable& table);
ArithSeq sigma(unsigned x, std::size_t n_max);  // sigma_0 = d
ArithSeq num_divisors(std::size_t n_max);

// kappa_x(n) = n^x + sum of kappa_x over proper divisors of n.
ArithSeq kappa(unsigned x, std::size_t n_max);
// K(n) = epsilon(n) + sum of K over proper divisors of n.
ArithSeq ordered_factorizations(std::size_t n_max);

}  // namespace fn

}  // namespace kappa
