#include <iostream>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "kappa/errors.hpp"

int main(int argc, char** argv) {
  using namespace kappa::cli;

  CLI::App app{
      "kappa: recursive divisor function, ordered factorizations and the "
      "Dirichlet convolution identities relating them"};
  app.require_subcommand(1);

  GenOptions gen;
  std::string gen_format = "csv";
  auto* gen_cmd = app.add_subcommand(
      "gen",
      "Tabulate a built-in function on 1..n. Functions: epsilon, mobius, one, "
      "id, phi, jordan, num_divisors, sigma, kappa, K. JSON output writes "
      "values beyond +-(2^53-1) as decimal strings.");
  gen_cmd->add_option("--fn", gen.fn, "Function identifier")->required();
  gen_cmd->add_option("--x", gen.x, "Exponent for id, jordan, sigma, kappa");
  gen_cmd->add_option("--n", gen.n, "Range bound")->required();
  gen_cmd->add_option("--format", gen_format, "csv, json or bfile")
      ->check(CLI::IsMember({"csv", "json", "bfile"}));
  gen_cmd->add_flag("--inverse", gen.inverse, "Emit the Dirichlet inverse");

  CheckOptions check;
  std::string report_path;
  auto* check_cmd = app.add_subcommand(
      "check", "Verify every registered convolution identity exactly on 1..n");
  check_cmd->add_option("--n", check.n, "Range bound")->required();
  check_cmd->add_option("--x", check.exponents, "Exponent set, e.g. 0,1,2,3")
      ->delimiter(',');
  check_cmd->add_option("--report", report_path, "Write a JSON report here");

  OeisCompareOptions compare;
  std::string bfile_path;
  auto* compare_cmd = app.add_subcommand(
      "oeis-compare", "Compare a built-in function against a local OEIS b-file");
  compare_cmd->add_option("--fn", compare.fn, "Function identifier")->required();
  compare_cmd->add_option("--x", compare.x, "Exponent");
  compare_cmd->add_option("--bfile", bfile_path, "b-file path")->required();
  compare_cmd->add_flag("--inverse", compare.inverse,
                        "Compare the Dirichlet inverse");

  SeriesOptions series;
  auto* series_cmd = app.add_subcommand(
      "series",
      "Compare the partial Dirichlet sum of kappa_x with zeta(s-x)/(2-zeta(s))");
  series_cmd->add_option("--x", series.x, "Exponent");
  series_cmd->add_option("--s", series.s, "Real evaluation point")->required();
  series_cmd->add_option("--n", series.n, "Number of terms");
  series_cmd->add_option("--tol", series.tol, "Relative tolerance");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand(
      "bench", "Time sieve generation against the naive recursion (JSON)");
  bench_cmd->add_option("--n", bench.n, "Range bound")->required();
  bench_cmd->add_option("--naive-prefix", bench.naive_prefix,
                        "Prefix length for the naive timing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (gen_cmd->parsed()) {
    gen.format = parse_format(gen_format);
    return cmd_gen(gen, std::cout, std::cerr);
  }
  if (check_cmd->parsed()) {
    if (!report_path.empty()) check.report_path = report_path;
    check.threads = threads_from_env();
    return cmd_check(check, std::cout, std::cerr);
  }
  if (compare_cmd->parsed()) {
    compare.bfile_path = bfile_path;
    return cmd_oeis_compare(compare, std::cout, std::cerr);
  }
  if (series_cmd->parsed()) return cmd_series(series, std::cout, std::cerr);
  if (bench_cmd->parsed()) return cmd_bench(bench, std::cout, std::cerr);
  return kExitUsage;
}
