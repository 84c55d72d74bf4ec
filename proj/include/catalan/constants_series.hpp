#pragma once

// Catalan sum rules with certified tail bounds, and the Glaisher-Kinkelin
// constant recovered from the integral of ln Gamma(x + 1) over [0, 1/2].

#include <cstddef>
#include <string_view>
#include <optional>

#include "catalan/quadrature.hpp"

namespace catalan {

/// odd_weight: sum C_{2n} C_n / ((2n + 1) 64^n), stated to equal 8 sqrt(2)/(3 pi)
/// plain:      sum C_{2n} C_n / 64^n = (4/pi) ln(3 + 2 sqrt 2) - 8 sqrt(2)/(3 pi)
/// weighted:   sum (2n + 1) C_{2n} C_n / 64^n = 8 sqrt(2) / (3 pi)
///
/// The odd_weight series actually sums to 1.01241973780425754...; the
/// closed form 8 sqrt(2)/(3 pi) belongs to the weighted series, which is
/// kept as the diagnostic for that mismatch.
enum class SumRule { odd_weight, plain, weighted };

std::string_view to_string(SumRule rule);
std::optional<SumRule> parse_sum_rule(std::string_view name);

struct SeriesResult {
  SumRule rule = SumRule::plain;
  double partial_sum = 0.0;  // terms n = 0 .. terms_used - 1
  std::size_t terms_used = 0;
  double tail_bound = 0.0;
  double certified_value = 0.0;  // midpoint of [partial, partial + tail]
  double target = 0.0;
  double abs_err = 0.0;
  bool converged = false;  // tail_bound <= requested tolerance

  friend bool operator==(const SeriesResult&, const SeriesResult&) = default;
};

inline constexpr std::size_t kDefaultTermBudget = 10'000'000;

/// Closed-form right-hand side of the sum rule.
double sum_rule_target(SumRule rule);

/// The n-th term, assembled in the log domain from exact C_{2n} and C_n.
double stewart_term(SumRule rule, std::size_t n);

/// Upper bound on the sum of the terms with index >= n_start, from
/// C_m <= 4^m / (sqrt(pi) m^{3/2}):
///   plain      1 / (pi 2^{5/2} (n_start - 1)^2)
///   odd_weight the plain bound divided by 2 n_start + 1
///   weighted   (2/(N - 1) + 1/(2 (N - 1)^2)) / (pi 2^{3/2}), N = n_start.
/// Throws std::invalid_argument for n_start < 4.
double series_tail_bound(std::size_t n_start, SumRule rule = SumRule::plain);

/// Sums exactly `terms` terms and attaches the certified interval.
SeriesResult stewart_partial(SumRule rule, std::size_t terms);

/// Adds terms until the tail bound is <= tol or the budget is spent; in the
/// latter case the result has converged = false and carries the partial sum.
/// Throws std::invalid_argument unless tol > 0.
SeriesResult stewart_sum(SumRule rule, double tol,
                         std::size_t max_terms = kDefaultTermBudget);

inline SeriesResult stewart_sum_odd_weight(
    double tol, std::size_t max_terms = kDefaultTermBudget) {
  return stewart_sum(SumRule::odd_weight, tol, max_terms);
}
inline SeriesResult stewart_sum_plain(double tol,
                                      std::size_t max_terms = kDefaultTermBudget) {
  return stewart_sum(SumRule::plain, tol, max_terms);
}

struct GlaisherResult {
  double integral_value = 0.0;  // integral of ln Gamma(x + 1) on [0, 1/2]
  double ln_A = 0.0;
  double oracle_ln_A = 0.0;
  double abs_err = 0.0;
  double quad_error_estimate = 0.0;
  bool converged = false;

  friend bool operator==(const GlaisherResult&, const GlaisherResult&) = default;
};

/// ln A = (2/3) (I + 1/2 + (7/24) ln 2 - (1/4) ln pi).
double glaisher_ln_a_from_integral(double integral);
/// Inverse of glaisher_ln_a_from_integral.
double glaisher_integral_from_ln_a(double ln_a);

/// sum_{k<=m} k ln k - (m^2/2 + m/2 + 1/12) ln m + m^2/4, which decreases to
/// ln A like 1/(720 m^2).
double glaisher_sequence(std::size_t m);

/// ln A by two Richardson steps on glaisher_sequence at m, 2m, 4m.
/// Throws std::invalid_argument for m < 10.
double glaisher_oracle(std::size_t m = 1000);

/// Integrates log_gamma_reference(x + 1) over [0, 1/2] and compares the
/// implied ln A with glaisher_oracle().
GlaisherResult glaisher_from_integral(const QuadConfig& cfg = {});

}  // namespace catalan
