#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "kappa/arith_seq.hpp"

namespace kappa {

struct ZetaValue {
  double s = 0.0;
  double value = 0.0;
  double abs_error_bound = 0.0;  // > 0; covers truncation and rounding
  std::size_t cutoff = 0;        // terms summed directly before the tail
};

// Riemann zeta at real s > 1 by Euler-Maclaurin summation: direct sum below a
// cutoff M, the integral tail M^(1-s)/(s-1), the half term M^-s/2, and
// Bernoulli corrections through B_16. M doubles until the first omitted
// correction is below tol.
//
// Throws DivergenceError for s <= 1 and InvalidArgument when tol <= 0 or tol
// is tighter than double precision can deliver.
ZetaValue zeta(double s, double tol = 1e-12);

struct SeriesPoint {
  double s = 0.0;
  std::size_t n_terms = 0;
  double partial_sum = 0.0;
  std::string tail_note;
};

// sum_{n=1}^{n_terms} f(n) / n^s in ascending n with Neumaier compensation.
// The two-argument form sums the whole sequence.
SeriesPoint dirichlet_partial_sum(const ArithSeq& f, double s);
SeriesPoint dirichlet_partial_sum(const ArithSeq& f, double s,
                                  std::size_t n_terms);

// zeta(s - x) / (2 - zeta(s)). Throws SingularityDomainError when
// zeta(s) >= 2 (including s <= 1) and DivergenceError when s - x <= 1.
double kappa_series_closed_form(unsigned x, double s);

struct Theorem1Report {
  unsigned x = 0;
  double s = 0.0;
  double tol = 0.0;
  double closed_form = 0.0;
  // Partial sums and absolute gaps at n_max/4, n_max/2, n_max.
  std::array<std::size_t, 3> n_terms{};
  std::array<double, 3> partial_sums{};
  std::array<double, 3> gaps{};
  double relative_gap = 0.0;  // gaps[2] / |closed_form|
  bool shrinking = false;     // gaps strictly decrease as n_max doubles
  bool passed = false;        // relative_gap < tol and shrinking
};

// Compares the partial Dirichlet sum of kappa_x with the closed form.
// Domain errors as for kappa_series_closed_form; InvalidArgument for tol <= 0
// or n_max == 0.
Theorem1Report verify_theorem1(unsigned x, double s, std::size_t n_max,
                               double tol);

// Real rho in (1.5, 2) with zeta(rho) = 2, by bisection to width <= tol.
double find_singularity(double tol = 1e-10);

}  // namespace kappa
