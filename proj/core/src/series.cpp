#include "kappa/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "kappa/builtins.hpp"
#include "kappa/errors.hpp"

namespace kappa {

namespace {

// B_2, B_4, ..., B_18.
constexpr std::array<double, 9> kBernoulli = {
    1.0 / 6.0,       -1.0 / 30.0,    1.0 / 42.0,
    -1.0 / 30.0,     5.0 / 66.0,     -691.0 / 2730.0,
    7.0 / 6.0,       -3617.0 / 510.0, 43867.0 / 798.0,
};
constexpr int kCorrectionTerms = 8;  // B_2..B_16 applied; B_18 bounds the rest

class NeumaierSum {
 public:
  void add(double term) {
    const double t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term)) {
      compensation_ += (sum_ - t) + term;
    } else {
      compensation_ += (term - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

struct EulerMaclaurin {
  double value;
  double truncation_bound;
};

EulerMaclaurin euler_maclaurin(double s, std::size_t cutoff) {
  const double m = static_cast<double>(cutoff);
  NeumaierSum sum;
  // Smallest terms first.
  for (std::size_t n = cutoff - 1; n >= 1; --n) {
    sum.add(std::pow(static_cast<double>(n), -s));
  }
  const double m_pow = std::pow(m, -s);
  sum.add(m * m_pow / (s - 1.0));
  sum.add(0.5 * m_pow);

  // T_k = B_2k / (2k)! * s (s+1) ... (s+2k-2) * M^(-s-2k+1)
  double rising = s;            // s (s+1) ... (s+2k-2)
  double factorial = 2.0;       // (2k)!
  double m_factor = m_pow / m;  // M^(-s-2k+1)
  double next_term = 0.0;
  for (int k = 1; k <= kCorrectionTerms + 1; ++k) {
    const double term = kBernoulli[k - 1] / factorial * rising * m_factor;
    if (k <= kCorrectionTerms) {
      sum.add(term);
    } else {
      next_term = term;
    }
    rising *= (s + 2.0 * k - 1.0) * (s + 2.0 * k);
    factorial *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
    m_factor /= m * m;
  }
  return {sum.value(), std::abs(next_term)};
}

std::string describe_tail(const ArithSeq& f, double s, std::size_t n_terms) {
  const double last =
      std::abs(f(n_terms).convert_to<double>()) *
      std::pow(static_cast<double>(n_terms), -s);
  std::ostringstream note;
  note << "truncated after " << n_terms << " terms; |last term| = " << last;
  return note.str();
}

}  // namespace

ZetaValue zeta(double s, double tol) {
  if (!(s > 1.0)) {
    std::ostringstream msg;
    msg << "zeta: series diverges for s <= 1 (s = " << s << ")";
    throw DivergenceError(msg.str());
  }
  if (!(tol > 0.0)) throw InvalidArgument("zeta: tolerance must be positive");

  constexpr double kEps = std::numeric_limits<double>::epsilon();
  constexpr std::size_t kMaxCutoff = std::size_t{1} << 20;
  for (std::size_t cutoff = 8;; cutoff *= 2) {
    const EulerMaclaurin em = euler_maclaurin(s, cutoff);
    // Compensated summation leaves a few ulps, plus the pow() rounding of
    // the tail, which dominates near s = 1.
    const double rounding =
        8.0 * kEps * (std::abs(em.value) + static_cast<double>(cutoff) *
                                               std::pow(cutoff, -s) / (s - 1.0));
    const double bound = em.truncation_bound + rounding;
    if (bound <= tol) {
      return {s, em.value, bound, cutoff};
    }
    if (rounding > tol || cutoff >= kMaxCutoff) {
      std::ostringstream msg;
      msg << "zeta: tolerance " << tol
          << " is tighter than double precision allows at s = " << s;
      throw InvalidArgument(msg.str());
    }
  }
}

SeriesPoint dirichlet_partial_sum(const ArithSeq& f, double s) {
  return dirichlet_partial_sum(f, s, f.n_max());
}

SeriesPoint dirichlet_partial_sum(const ArithSeq& f, double s,
                                  std::size_t n_terms) {
  if (n_terms == 0 || n_terms > f.n_max()) {
    throw InvalidArgument("dirichlet_partial_sum: n_terms outside 1..n_max");
  }
  NeumaierSum sum;
  for (std::size_t n = 1; n <= n_terms; ++n) {
    const BigInt& v = f(n);
    if (v.is_zero()) continue;
    sum.add(v.convert_to<double>() * std::pow(static_cast<double>(n), -s));
  }
  return {s, n_terms, sum.value(), describe_tail(f, s, n_terms)};
}

double kappa_series_closed_form(unsigned x, double s) {
  if (!(s > 1.0) || zeta(s).value >= 2.0) {
    const double rho = find_singularity();
    std::ostringstream msg;
    msg << "s = " << s << " is at or below rho = " << rho
        << " where zeta(rho) = 2; the series for kappa_x does not converge";
    throw SingularityDomainError(msg.str(), rho);
  }
  if (!(s - x > 1.0)) {
    std::ostringstream msg;
    msg << "zeta(s - x) diverges: s - x = " << s - x << " <= 1";
    throw DivergenceError(msg.str());
  }
  return zeta(s - x).value / (2.0 - zeta(s).value);
}

Theorem1Report verify_theorem1(unsigned x, double s, std::size_t n_max,
                               double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("verify_theorem1: tol must be positive");
  if (n_max == 0) throw InvalidArgument("verify_theorem1: n_max must be >= 1");

  Theorem1Report report;
  report.x = x;
  report.s = s;
  report.tol = tol;
  report.closed_form = kappa_series_closed_form(x, s);

  const ArithSeq seq = fn::kappa(x, n_max);
  report.n_terms = {std::max<std::size_t>(1, n_max / 4),
                    std::max<std::size_t>(1, n_max / 2), n_max};
  for (std::size_t i = 0; i < report.n_terms.size(); ++i) {
    report.partial_sums[i] =
        dirichlet_partial_sum(seq, s, report.n_terms[i]).partial_sum;
    report.gaps[i] = std::abs(report.partial_sums[i] - report.closed_form);
  }
  report.relative_gap = report.gaps[2] / std::abs(report.closed_form);
  report.shrinking =
      report.gaps[0] > report.gaps[1] && report.gaps[1] > report.gaps[2];
  report.passed = report.relative_gap < tol && report.shrinking;
  return report;
}

double find_singularity(double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("find_singularity: tol must be positive");
  // zeta(2) = pi^2/6 < 2 < zeta(1.5), and zeta decreases on (1, inf).
  double lo = 1.5;
  double hi = 2.0;
  for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (zeta(mid, 1e-13).value > 2.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace kappa
