#pragma once

// Adaptive quadrature on finite intervals and on the half-line [0, inf).
//
// Every integrand in this library has a finite limit at t -> 0+ even when its
// closed form is 0/0 there, so an Integrand carries that limit and the
// threshold below which it replaces the formula.

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace catalan {

/// Variable substitution used before the adaptive rule runs.
///
/// none               finite: plain Gauss-Kronrod; half-line: same as rational_map
/// exp_decay_map      half-line only: t = -ln(1 - u)/c truncated where the
///                    integrand's exponential tail bound drops below abs_tol/10
/// double_exponential tanh-sinh on finite intervals, exp-sinh on the half-line
/// rational_map       half-line only: t = (u/(1 - u))^2, for algebraic decay
enum class Transform { none, exp_decay_map, double_exponential, rational_map };

std::string_view to_string(Transform t);
/// Accepts the names produced by to_string and their dashed spellings.
std::optional<Transform> parse_transform(std::string_view name);

/// |f(t)| <= scale * exp(-rate * t) for all t >= from.
struct TailBound {
  double scale = 1.0;
  double rate = 1.0;
  double from = 1.0;
};

struct Integrand {
  std::function<double(double)> eval;
  /// Value of f at 0+; used for t < small_t_threshold.
  std::optional<double> origin_limit;
  /// df/dt at 0+, added as a first-order correction when present.
  std::optional<double> origin_slope;
  double small_t_threshold = 1e-6;
  std::optional<TailBound> tail;

  /// Evaluates with the origin guard applied.
  double operator()(double t) const;
};

struct QuadConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-11;
  std::size_t max_subdivisions = 2000;
  Transform transform = Transform::exp_decay_map;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
  /// max(abs_tol, rel_tol * |value|)
  double target(double value) const;
};

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

/// Raised when the integrand returns NaN or infinity at a sample point.
class NonFiniteIntegrand : public std::runtime_error {
 public:
  NonFiniteIntegrand(double abscissa, double value, const std::string& what);
  double abscissa() const { return abscissa_; }
  double value() const { return value_; }

 private:
  double abscissa_;
  double value_;
};

/// Integrates f over [a, b]. Uses adaptive 21-point Gauss-Kronrod
/// bisection, or tanh-sinh when cfg.transform is double_exponential.
/// Non-convergence is reported through QuadResult::converged.
QuadResult integrate_finite(const Integrand& f, double a, double b,
                            const QuadConfig& cfg);

/// Integrates f over [0, inf). exp_decay_map requires f.tail; without one it
/// falls back to rational_map.
QuadResult integrate_half_line(const Integrand& f, const QuadConfig& cfg);

}  // namespace catalan
