#pragma once

#include <iosfwd>
#include <string_view>

#include <nlohmann/json.hpp>

#include "kappa/arith_seq.hpp"
#include "kappa/identities.hpp"

namespace kappa::cli {

enum class Format { kCsv, kJson, kBFile };

Format parse_format(std::string_view name);  // throws InvalidArgument

// Integers within +-(2^53 - 1) serialize as JSON numbers, larger ones as
// decimal strings so no consumer loses precision.
nlohmann::ordered_json big_to_json(const BigInt& value);

// "n,value" header, then one row per index.
void write_csv(std::ostream& out, const ArithSeq& seq);
// Compact JSON array of the values f(1..n_max).
void write_json(std::ostream& out, const ArithSeq& seq);
void write_sequence(std::ostream& out, const ArithSeq& seq, Format format);

// {identity, x, y, n_max, passed, first_failure_n?, lhs_value?, rhs_value?}
// x and y are null when the identity does not use them.
nlohmann::ordered_json report_to_json(const IdentityReport& report);

}  // namespace kappa::cli
