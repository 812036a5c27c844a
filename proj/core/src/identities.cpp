#include "kappa/identities.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "kappa/builtins.hpp"
#include "kappa/divisor_table.hpp"
#include "kappa/errors.hpp"

namespace kappa {

namespace {

using fn::epsilon;
using fn::kappa;
using fn::one;
using fn::ordered_factorizations;
using fn::power;
using fn::sigma;

ArithSeq twice_mobius_minus_epsilon(const DivisorTable& table) {
  return BigInt(2) * fn::mobius(table) - epsilon(table.n_max());
}

std::vector<IdentityCheck> build_registry() {
  std::vector<IdentityCheck> checks;

  checks.push_back({"EQ3", "kappa_x * sigma_y = kappa_y * sigma_x", 2,
                    [](unsigned x, unsigned y, std::size_t n) -> IdentitySides {
                      return {dirichlet_convolve(kappa(x, n), sigma(y, n)),
                              dirichlet_convolve(kappa(y, n), sigma(x, n))};
                    }});

  checks.push_back({"EQ4", "2 kappa_x = id_x + 1 * kappa_x", 1,
                    [](unsigned x, unsigned, std::size_t n) -> IdentitySides {
                      ArithSeq k = kappa(x, n);
                      return {BigInt(2) * k, power(x, n) + divisor_sum(k)};
                    }});

  checks.push_back({"EQ6", "kappa_x = J_x * kappa_0", 1,
                    [](unsigned x, unsigned, std::size_t n) -> IdentitySides {
                      const DivisorTable table(n);
                      return {kappa(x, n),
                              dirichlet_convolve(fn::jordan(x, table), kappa(0, n))};
                    }});

  checks.push_back(
      {"EQ7", "kappa_x^-1 = J_x^-1 * (2 mu - eps)", 1,
       [](unsigned x, unsigned, std::size_t n) -> IdentitySides {
         const DivisorTable table(n);
         return {dirichlet_inverse(kappa(x, n)),
                 dirichlet_convolve(dirichlet_inverse(fn::jordan(x, table)),
                                    twice_mobius_minus_epsilon(table))};
       }});

  checks.push_back({"EQ8", "sigma_x = kappa_x * (2 1 - d)", 1,
                    [](unsigned x, unsigned, std::size_t n) -> IdentitySides {
                      return {sigma(x, n),
                              dirichlet_convolve(
                                  kappa(x, n),
                                  BigInt(2) * one(n) - fn::num_divisors(n))};
                    }});

  checks.push_back({"EQ9", "kappa_0 = 1 * K", 0,
                    [](unsigned, unsigned, std::size_t n) -> IdentitySides {
                      return {kappa(0, n),
                              dirichlet_convolve(one(n), ordered_factorizations(n))};
                    }});

  checks.push_back({"EQ10", "2 K = eps + 1 * K", 0,
                    [](unsigned, unsigned, std::size_t n) -> IdentitySides {
                      ArithSeq k = ordered_factorizations(n);
                      return {BigInt(2) * k, epsilon(n) + divisor_sum(k)};
                    }});

  checks.push_back({"EQ12", "kappa_x = id_x * K", 1,
                    [](unsigned x, unsigned, std::size_t n) -> IdentitySides {
                      return {kappa(x, n),
                              dirichlet_convolve(power(x, n),
                                                 ordered_factorizations(n))};
                    }});

  checks.push_back({"EQ13", "K^-1 = 2 eps - 1", 0,
                    [](unsigned, unsigned, std::size_t n) -> IdentitySides {
                      return {dirichlet_inverse(ordered_factorizations(n)),
                              BigInt(2) * epsilon(n) - one(n)};
                    }});

  checks.push_back({"SC1", "kappa_1 = phi * kappa_0", 0,
                    [](unsigned, unsigned, std::size_t n) -> IdentitySides {
                      const DivisorTable table(n);
                      return {kappa(1, n),
                              dirichlet_convolve(fn::euler_phi(table), kappa(0, n))};
                    }});

  checks.push_back({"SC2", "kappa_0^-1 = 2 mu - eps", 0,
                    [](unsigned, unsigned, std::size_t n) -> IdentitySides {
                      const DivisorTable table(n);
                      return {dirichlet_inverse(kappa(0, n)),
                              twice_mobius_minus_epsilon(table)};
                    }});

  checks.push_back({"JY", "kappa_x * J_y = kappa_y * J_x", 2,
                    [](unsigned x, unsigned y, std::size_t n) -> IdentitySides {
                      const DivisorTable table(n);
                      return {dirichlet_convolve(kappa(x, n), fn::jordan(y, table)),
                              dirichlet_convolve(kappa(y, n), fn::jordan(x, table))};
                    }});

  return checks;
}

IdentityReport run_check(const IdentityCheck& check, unsigned x, unsigned y,
                         std::size_t n_max) {
  if (n_max == 0) throw InvalidArgument("check_identity: n_max must be >= 1");
  IdentityReport report;
  report.id = check.id;
  if (check.exponents_required >= 1) report.x = x;
  if (check.exponents_required >= 2) report.y = y;
  report.n_max = n_max;

  const IdentitySides sides = check.evaluator(x, y, n_max);
  report.first_failure_n = first_mismatch(sides.lhs, sides.rhs);
  report.passed = !report.first_failure_n.has_value();
  if (!report.passed) {
    report.lhs_value = sides.lhs(*report.first_failure_n);
    report.rhs_value = sides.rhs(*report.first_failure_n);
  }
  return report;
}

}  // namespace

const std::vector<IdentityCheck>& identity_registry() {
  static const std::vector<IdentityCheck> registry = build_registry();
  return registry;
}

const std::vector<std::pair<std::string, std::string>>& delegated_identities() {
  static const std::vector<std::pair<std::string, std::string>> delegated = {
      {"EQ5", "kappa_x = id_x/2 + 1*id_x/2^2 + 1*1*id_x/2^3 + ..."},
      {"EQ11", "K = eps/2 + 1/2^2 + 1*1/2^3 + ..."},
  };
  return delegated;
}

const IdentityCheck& find_identity(std::string_view id) {
  for (const auto& check : identity_registry()) {
    if (check.id == id) return check;
  }
  for (const auto& [code, description] : delegated_identities()) {
    if (code == id) {
      throw InvalidArgument("identity " + code +
                            " is a limit statement; check it with the truncated "
                            "series (series_partial)");
    }
  }
  throw InvalidArgument("unknown identity '" + std::string(id) + "'");
}

IdentityReport check_identity(std::string_view id, unsigned x, unsigned y,
                              std::size_t n_max) {
  return run_check(find_identity(id), x, y, n_max);
}

IdentityReport check_identity(const IdentityCheck& check, unsigned x,
                              unsigned y, std::size_t n_max) {
  return run_check(check, x, y, n_max);
}

std::optional<std::size_t> first_mismatch(const ArithSeq& lhs,
                                          const ArithSeq& rhs) {
  if (lhs.n_max() != rhs.n_max()) {
    throw InvalidArgument("first_mismatch: range mismatch");
  }
  for (std::size_t n = 1; n <= lhs.n_max(); ++n) {
    if (lhs(n) != rhs(n)) return n;
  }
  return std::nullopt;
}

std::vector<IdentityReport> check_all(std::size_t n_max,
                                      std::span<const unsigned> exponent_set,
                                      unsigned threads) {
  if (exponent_set.empty()) {
    throw InvalidArgument("check_all: exponent set must be nonempty");
  }
  if (n_max == 0) throw InvalidArgument("check_all: n_max must be >= 1");

  std::vector<unsigned> exponents(exponent_set.begin(), exponent_set.end());
  std::sort(exponents.begin(), exponents.end());
  exponents.erase(std::unique(exponents.begin(), exponents.end()),
                  exponents.end());

  struct Task {
    const IdentityCheck* check;
    unsigned x;
    unsigned y;
  };
  std::vector<Task> tasks;
  for (const auto& check : identity_registry()) {
    switch (check.exponents_required) {
      case 0:
        tasks.push_back({&check, 0, 0});
        break;
      case 1:
        for (unsigned x : exponents) tasks.push_back({&check, x, 0});
        break;
      default:
        for (unsigned x : exponents)
          for (unsigned y : exponents) tasks.push_back({&check, x, y});
        break;
    }
  }

  std::vector<IdentityReport> reports(tasks.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(tasks.size()));

  // Each worker writes only to the slots it claims, so the output order is
  // fixed by the task list regardless of scheduling.
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(tasks.size());
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        reports[i] = run_check(*tasks[i].check, tasks[i].x, tasks[i].y, n_max);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  return reports;
}

bool all_passed(std::span<const IdentityReport> reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const IdentityReport& r) { return r.passed; });
}

}  // namespace kappa
