#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cli/formats.hpp"

namespace kappa::cli {

// 0 = success, 1 = mathematical mismatch or domain violation, 2 = usage/IO.
enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitUsage = 2 };

struct GenOptions {
  std::string fn;
  unsigned x = 0;
  std::size_t n = 12;
  Format format = Format::kCsv;
  bool inverse = false;  // emit the Dirichlet inverse of fn instead
};

struct CheckOptions {
  std::size_t n = 0;
  std::vector<unsigned> exponents{0, 1};
  std::optional<std::filesystem::path> report_path;
  unsigned threads = 0;
};

struct OeisCompareOptions {
  std::string fn;
  unsigned x = 0;
  std::filesystem::path bfile_path;
  bool inverse = false;
};

struct SeriesOptions {
  unsigned x = 0;
  double s = 3.0;
  std::size_t n = 100000;
  double tol = 1e-3;
};

struct BenchOptions {
  std::size_t n = 0;
  std::size_t naive_prefix = 2000;  // clamped to n
};

int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err);
int cmd_check(const CheckOptions& options, std::ostream& out, std::ostream& err);
int cmd_oeis_compare(const OeisCompareOptions& options, std::ostream& out,
                     std::ostream& err);
int cmd_series(const SeriesOptions& options, std::ostream& out,
               std::ostream& err);
int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err);

// KAPPA_THREADS: unset, empty or 0 means implementation default (returns 0).
unsigned threads_from_env();

}  // namespace kappa::cli
