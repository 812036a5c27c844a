#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "kappa/arith_seq.hpp"
#include "kappa/errors.hpp"

namespace kappa::cli {

// OEIS b-file: one "index value" pair per line. Lines starting with '#' and
// blank lines are skipped on input and never written.
struct BFileEntry {
  std::size_t index = 0;
  BigInt value;
};

struct BFile {
  std::vector<BFileEntry> entries;  // indices strictly increasing, all >= 1
  std::string source_name;
};

class BFileParseError : public InvalidArgument {
 public:
  BFileParseError(const std::string& source, std::size_t line,
                  const std::string& reason);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

BFile parse_bfile(std::istream& in, std::string source_name);
// Throws BFileParseError (line 0) if the file cannot be opened.
BFile read_bfile(const std::filesystem::path& path);

void write_bfile(std::ostream& out, const ArithSeq& seq);

}  // namespace kappa::cli
