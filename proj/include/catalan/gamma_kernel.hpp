#pragma once

// Log-Gamma integrands over the half-line and a series-based ln Gamma
// reference that shares no code with them.

#include <cstddef>
#include <string>

#include "catalan/quadrature.hpp"

namespace catalan {

/// A named half-line integrand with its exponential tail constants.
struct KernelSpec {
  std::string name;
  double parameter = 0.0;
  Integrand integrand;
  TailBound tail;  // same constants as integrand.tail
};

/// ln Gamma(x) for x > 0: shift upward to x + m >= 10, then the Stirling
/// series through the z^-13 term (truncation < 3e-17 at z = 10).
/// Throws std::domain_error for x <= 0.
double log_gamma_reference(double x);

/// Stirling main terms x ln x - x + ln(2 pi x)/2 of ln Gamma(x + 1).
double stirling_main_terms(double x);

/// 1/(e^t - 1) - 1/t + 1/2, accurate for all t > 0.
double binet_factor(double t);

/// Malmsten integrand [x - (1 - e^{-xt})/(1 - e^{-t})] e^{-t}/t whose
/// half-line integral is ln Gamma(x + 1). Requires x > -1.
KernelSpec malmsten_log_gamma_kernel(double x);

/// ln Gamma(x + 1) by integrating malmsten_log_gamma_kernel(x).
/// Throws std::domain_error for x <= -1.
QuadResult log_gamma_malmsten(double x, const QuadConfig& cfg = {});

/// Integrand (1/(e^t - 1) - 1/t + 1/2) e^{-xt}/t of the Binet remainder.
KernelSpec binet_theta_kernel(double x);

/// theta(x) with ln Gamma(x + 1) = stirling_main_terms(x) + theta(x).
/// Throws std::domain_error for x <= 0.
QuadResult binet_theta(double x, const QuadConfig& cfg = {});

/// [(e^{3t/2} - 1)/(e^t - 1) e^{-nt} - 3/2] e^{-t}/t. Its half-line integral
/// is ln Gamma(n + 1/2) - ln Gamma(n + 2), so
/// ln C_n = 2n ln 2 - ln(pi)/2 + integral.
KernelSpec malmsten_catalan_kernel(std::size_t n);

/// Binet remainder difference theta(n + 1/2) - theta(n + 2) as a single
/// integrand: binet_factor(t) (e^{-t/2} - e^{-2t}) e^{-nt}/t.
KernelSpec binet_catalan_kernel(std::size_t n);

/// Difference of the Malmsten integrands for ln Gamma(n + 1/2) and
/// ln Gamma(n + 2), left unsimplified. Pointwise equal to
/// malmsten_catalan_kernel(n); kept as an independent cross-check.
KernelSpec log_gamma_difference_kernel(std::size_t n);

}  // namespace catalan
