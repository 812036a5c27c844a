#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace kappa {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt ipow(std::uint64_t base, unsigned exponent) {
  return boost::multiprecision::pow(BigInt(base), exponent);
}

}  // namespace kappa
