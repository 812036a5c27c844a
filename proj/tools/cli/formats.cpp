#include "cli/formats.hpp"

#include <ostream>
#include <string>

#include "cli/bfile.hpp"
#include "kappa/errors.hpp"

namespace kappa::cli {

namespace {

const BigInt kMaxSafeInteger = (BigInt(1) << 53) - 1;

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  if (name == "bfile") return Format::kBFile;
  throw InvalidArgument("unknown format '" + std::string(name) +
                        "' (expected csv, json or bfile)");
}

nlohmann::ordered_json big_to_json(const BigInt& value) {
  if (abs(value) <= kMaxSafeInteger) {
    return value.convert_to<std::int64_t>();
  }
  return value.str();
}

void write_csv(std::ostream& out, const ArithSeq& seq) {
  out << "n,value\n";
  for (std::size_t n = 1; n <= seq.n_max(); ++n) {
    out << n << ',' << seq(n) << '\n';
  }
}

void write_json(std::ostream& out, const ArithSeq& seq) {
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const BigInt& v : seq.values()) array.push_back(big_to_json(v));
  out << array.dump() << '\n';
}

void write_sequence(std::ostream& out, const ArithSeq& seq, Format format) {
  switch (format) {
    case Format::kCsv: write_csv(out, seq); break;
    case Format::kJson: write_json(out, seq); break;
    case Format::kBFile: write_bfile(out, seq); break;
  }
}

nlohmann::ordered_json report_to_json(const IdentityReport& report) {
  nlohmann::ordered_json j;
  j["identity"] = report.id;
  j["x"] = report.x ? nlohmann::ordered_json(*report.x) : nlohmann::ordered_json(nullptr);
  j["y"] = report.y ? nlohmann::ordered_json(*report.y) : nlohmann::ordered_json(nullptr);
  j["n_max"] = report.n_max;
  j["passed"] = report.passed;
  if (report.first_failure_n) {
    j["first_failure_n"] = *report.first_failure_n;
    j["lhs_value"] = report.lhs_value->str();
    j["rhs_value"] = report.rhs_value->str();
  }
  return j;
}

}  // namespace kappa::cli
