#include "cli/bfile.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace kappa::cli {

namespace {

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

bool is_integer_token(const std::string& token, bool allow_sign) {
  std::size_t start = 0;
  if (allow_sign && !token.empty() && (token[0] == '-' || token[0] == '+')) {
    start = 1;
  }
  if (start >= token.size()) return false;
  for (std::size_t i = start; i < token.size(); ++i) {
    if (token[i] < '0' || token[i] > '9') return false;
  }
  return true;
}

}  // namespace

BFileParseError::BFileParseError(const std::string& source, std::size_t line,
                                 const std::string& reason)
    : InvalidArgument(source + ":" + std::to_string(line) + ": " + reason),
      line_(line) {}

BFile parse_bfile(std::istream& in, std::string source_name) {
  BFile file;
  file.source_name = std::move(source_name);
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (is_blank(line)) continue;
    const auto first = line.find_first_not_of(" \t");
    if (line[first] == '#') continue;

    std::istringstream fields(line);
    std::string index_token;
    std::string value_token;
    std::string extra;
    fields >> index_token >> value_token;
    if (value_token.empty() || (fields >> extra)) {
      throw BFileParseError(file.source_name, line_number,
                            "expected exactly two fields 'index value'");
    }
    if (!is_integer_token(index_token, false) || index_token.size() > 18) {
      throw BFileParseError(file.source_name, line_number,
                            "index '" + index_token + "' is not a positive integer");
    }
    if (!is_integer_token(value_token, true)) {
      throw BFileParseError(file.source_name, line_number,
                            "value '" + value_token + "' is not an integer");
    }
    const std::size_t index = std::stoull(index_token);
    if (index == 0) {
      throw BFileParseError(file.source_name, line_number,
                            "index must be at least 1");
    }
    if (!file.entries.empty() && index <= file.entries.back().index) {
      throw BFileParseError(file.source_name, line_number,
                            "indices must be strictly increasing");
    }
    if (value_token[0] == '+') value_token.erase(0, 1);
    file.entries.push_back({index, BigInt(value_token)});
  }
  return file;
}

BFile read_bfile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw BFileParseError(path.string(), 0, "cannot open file");
  return parse_bfile(in, path.string());
}

void write_bfile(std::ostream& out, const ArithSeq& seq) {
  for (std::size_t n = 1; n <= seq.n_max(); ++n) {
    out << n << ' ' << seq(n) << '\n';
  }
}

}  // namespace kappa::cli
