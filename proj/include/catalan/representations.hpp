#pragma once

// Every evaluation route for ln C_n, each checked against the exact value.

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "catalan/quadrature.hpp"

namespace catalan {

enum class Method {
  gamma_closed_form,
  malmsten,
  binet,
  penson_moment,
  penson_mellin,
};

inline constexpr std::array<Method, 5> kAllMethods = {
    Method::gamma_closed_form, Method::malmsten, Method::binet,
    Method::penson_moment, Method::penson_mellin};

/// Report identifier, e.g. "penson_moment".
std::string_view to_string(Method m);
/// Command-line spelling, e.g. "penson-moment"; "gamma" for the closed form.
std::string_view cli_name(Method m);
/// Accepts either spelling.
std::optional<Method> parse_method(std::string_view name);

/// Largest n accepted by the two moment-type routes.
inline constexpr std::size_t kPensonMaxN = 200;

struct RepresentationResult {
  std::size_t n = 0;
  Method method = Method::gamma_closed_form;
  double ln_value = 0.0;
  double exact_ln = 0.0;
  double abs_err_ln = 0.0;
  double quad_error_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;

  friend bool operator==(const RepresentationResult&,
                         const RepresentationResult&) = default;
};

/// True when the row is a route evaluated outside its stated hypothesis
/// (the Malmsten route is stated for n >= 1).
bool outside_hypothesis(const RepresentationResult& row);

/// ln C_n = 2n ln 2 - ln(pi)/2 + ln Gamma(n + 1/2) - ln Gamma(n + 2).
RepresentationResult catalan_gamma_closed_form(std::size_t n);

/// ln C_n = 2n ln 2 - ln(pi)/2 + integral of malmsten_catalan_kernel(n).
/// Also evaluated at n = 0; see outside_hypothesis().
RepresentationResult catalan_malmsten(std::size_t n, const QuadConfig& cfg = {});

/// ln C_n = 3/2 + 2n ln 2 + n ln(n + 1/2) - ln(pi)/2 - (n + 3/2) ln(n + 2)
///          + integral of binet_catalan_kernel(n).
///
/// The prefactor follows from Binet's formula applied twice:
///   ln Gamma(n + 1/2) = ln Gamma(n + 3/2) - ln(n + 1/2)
///                     = n ln(n + 1/2) - (n + 1/2) + ln(2 pi)/2 + theta(n + 1/2)
///   ln Gamma(n + 2)   = ln Gamma(n + 3) - ln(n + 2)
///                     = (n + 3/2) ln(n + 2) - (n + 2) + ln(2 pi)/2 + theta(n + 2)
/// so their difference is the prefactor above plus theta(n + 1/2) - theta(n + 2),
/// which is the kernel integral with the exponent e^{-nt}.
RepresentationResult catalan_binet(std::size_t n, const QuadConfig& cfg = {});

/// ln C_n = ln(2/pi) + 2n ln 2 + ln of the integral of t^{2n} sqrt(1 - t^2)
/// over [-1, 1]. Throws std::out_of_range for n > kPensonMaxN.
RepresentationResult catalan_penson_moment(std::size_t n,
                                           const QuadConfig& cfg = {});

/// ln C_n = 2(n + 2) ln 2 - ln pi + ln of the half-line integral of
/// sqrt(t)/(4t + 1)^{n+2}. The integrand decays algebraically, so the
/// exponential-decay map is replaced by the rational map.
/// Throws std::out_of_range for n > kPensonMaxN.
RepresentationResult catalan_penson_mellin(std::size_t n,
                                           const QuadConfig& cfg = {});

/// Dispatches to one of the routes above.
RepresentationResult evaluate(Method method, std::size_t n,
                              const QuadConfig& cfg = {});

/// Binet-route prefactor 3/2 + n ln(n + 1/2) - (n + 3/2) ln(n + 2)
/// (without the 2n ln 2 - ln(pi)/2 common to all Gamma-ratio routes).
double binet_prefactor_ln(std::size_t n);

/// All (n, method) rows for n in 0..=n_max, ordered by (n, method).
/// A failing row is recorded with converged = false; it never aborts the
/// sweep. Rows are computed on up to `threads` workers (0 = hardware).
std::vector<RepresentationResult> compare_representations(
    std::size_t n_max, const QuadConfig& cfg = {}, unsigned threads = 0);

}  // namespace catalan
