#include "catalan/gamma_kernel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

namespace catalan {

namespace {

// B_{2k} / (2k (2k - 1)), k = 1..7. The first omitted term is
// B_16 / (240 z^15), below 3e-17 once z >= 10.
constexpr std::array<double, 7> kStirling = {
    1.0 / 12.0,    -1.0 / 360.0,          1.0 / 1260.0, -1.0 / 1680.0,
    1.0 / 1188.0, -691.0 / 360360.0, 1.0 / 156.0};
constexpr double kStirlingShift = 10.0;

// B_{2k} / (2k)!, k = 1..10: binet_factor(t) = sum c_k t^{2k-1} for |t| < 2 pi.
constexpr std::array<double, 10> kBinetSeries = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
    43867.0 / 5109094217170944000.0,
    -174611.0 / 802857662698291200000.0};

// Below this the Binet series (ratio ~ (t / 2 pi)^2 per term) is used.
constexpr double kBinetSeriesCutoff = 1.0;

constexpr double kHalfLn2Pi = 0.91893853320467274178032973640562;

// Raw Malmsten integrand for ln Gamma(x + 1), x > -1.
double malmsten_integrand(double x, double t) {
  // e^{-t} (1 - e^{-xt})/(1 - e^{-t}) rewritten so that no factor overflows
  // for large t when -1 < x < 0.
  const double ratio =
      t <= 30.0 ? std::exp(-t) * std::expm1(-x * t) / std::expm1(-t)
                : (std::exp(-(1.0 + x) * t) - std::exp(-t)) / std::expm1(-t);
  return (x * std::exp(-t) - ratio) / t;
}

// Taylor data of malmsten_integrand at t = 0+:
//   limit x (x - 1)/2, slope 5x/12 - x^2/4 - x^3/6.
double malmsten_limit(double x) { return 0.5 * x * (x - 1.0); }
double malmsten_slope(double x) {
  return 5.0 * x / 12.0 - x * x / 4.0 - x * x * x / 6.0;
}

// For t >= 1: |x| e^{-t} + (e^{-(1+x)t} + e^{-t})/(1 - e^{-1}) bounds the
// numerator, and 1/(1 - e^{-1}) < 1.6.
TailBound malmsten_tail(double x) {
  return {std::abs(x) + 3.2, std::min(1.0, 1.0 + x), 1.0};
}

KernelSpec make_kernel(std::string name, double parameter,
                       std::function<double(double)> eval, double limit,
                       double slope, TailBound tail) {
  Integrand f;
  f.eval = std::move(eval);
  f.origin_limit = limit;
  f.origin_slope = slope;
  f.tail = tail;
  return {std::move(name), parameter, std::move(f), tail};
}

}  // namespace

double log_gamma_reference(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error(
        fmt::format("log_gamma_reference: x = {} is not positive", x));
  }
  double z = x;
  double product = 1.0;
  while (z < kStirlingShift) {
    product *= z;
    z += 1.0;
  }
  const double inv = 1.0 / z;
  const double inv2 = inv * inv;
  double series = 0.0;
  for (auto it = kStirling.rbegin(); it != kStirling.rend(); ++it) {
    series = series * inv2 + *it;
  }
  series *= inv;
  return (z - 0.5) * std::log(z) - z + kHalfLn2Pi + series - std::log(product);
}

double stirling_main_terms(double x) {
  return x * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi * x);
}

double binet_factor(double t) {
  if (t < kBinetSeriesCutoff) {
    const double t2 = t * t;
    double s = 0.0;
    for (auto it = kBinetSeries.rbegin(); it != kBinetSeries.rend(); ++it) {
      s = s * t2 + *it;
    }
    return s * t;
  }
  return 1.0 / std::expm1(t) - 1.0 / t + 0.5;
}

KernelSpec malmsten_log_gamma_kernel(double x) {
  if (!(x > -1.0)) {
    throw std::domain_error(
        fmt::format("Malmsten integral needs x > -1, got {}", x));
  }
  return make_kernel(
      "malmsten_log_gamma", x, [x](double t) { return malmsten_integrand(x, t); },
      malmsten_limit(x), malmsten_slope(x), malmsten_tail(x));
}

QuadResult log_gamma_malmsten(double x, const QuadConfig& cfg) {
  return integrate_half_line(malmsten_log_gamma_kernel(x).integrand, cfg);
}

KernelSpec binet_theta_kernel(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error(fmt::format("binet_theta needs x > 0, got {}", x));
  }
  // binet_factor(t)/t = 1/12 - t^2/720 + ..., so the slope comes from
  // e^{-xt} alone. binet_factor < 1/2 bounds the tail.
  return make_kernel(
      "binet_theta", x,
      [x](double t) { return binet_factor(t) * std::exp(-x * t) / t; },
      1.0 / 12.0, -x / 12.0, {0.5, x, 1.0});
}

QuadResult binet_theta(double x, const QuadConfig& cfg) {
  return integrate_half_line(binet_theta_kernel(x).integrand, cfg);
}

KernelSpec malmsten_catalan_kernel(std::size_t n) {
  const double nd = static_cast<double>(n);
  // With s = t/2, (e^{3t/2} - 1)/(e^t - 1) - 3/2 = e^s q(s) where
  //   q(s) = (2 + e^{-s})(1 - e^{-s}) / (2 (1 + e^{-s})),  0 <= q < 1,
  // and the integrand becomes
  //   [q(s) e^{-(n+1/2)t} + (3/2)(e^{-nt} - 1) e^{-t}] / t
  // with no cancellation near 0 and no overflow for large t.
  auto eval = [nd](double t) {
    const double em = std::exp(-0.5 * t);
    const double q = (2.0 + em) * -std::expm1(-0.5 * t) / (2.0 * (1.0 + em));
    return (q * std::exp(-(nd + 0.5) * t) +
            1.5 * std::expm1(-nd * t) * std::exp(-t)) /
           t;
  };
  // Expanding q(s) = 3s/4 + s^2/2 + O(s^3) gives
  //   limit 3/8 - 3n/2,  slope 3n^2/4 + 9n/8 - 1/4.
  // For t >= 1 the integrand is at most e^{-(n+1/2)t} + 1.5 e^{-t}.
  return make_kernel("malmsten_catalan", nd, eval, 0.375 - 1.5 * nd,
                     0.75 * nd * nd + 1.125 * nd - 0.25,
                     {2.5, std::min(1.0, nd + 0.5), 1.0});
}

KernelSpec binet_catalan_kernel(std::size_t n) {
  const double nd = static_cast<double>(n);
  // (e^{-t/2} - e^{-2t}) e^{-nt} = (1 - e^{-3t/2}) e^{-(n+1/2)t}.
  auto eval = [nd](double t) {
    return binet_factor(t) * -std::expm1(-1.5 * t) * std::exp(-(nd + 0.5) * t) /
           t;
  };
  // (t/12)(3t/2)/t = t/8 near 0.
  return make_kernel("binet_catalan", nd, eval, 0.0, 0.125,
                     {0.5, nd + 0.5, 1.0});
}

KernelSpec log_gamma_difference_kernel(std::size_t n) {
  const double lo = static_cast<double>(n) - 0.5;
  const double hi = static_cast<double>(n) + 1.0;
  auto eval = [lo, hi](double t) {
    return malmsten_integrand(lo, t) - malmsten_integrand(hi, t);
  };
  const TailBound a = malmsten_tail(lo);
  const TailBound b = malmsten_tail(hi);
  return make_kernel("log_gamma_difference", static_cast<double>(n), eval,
                     malmsten_limit(lo) - malmsten_limit(hi),
                     malmsten_slope(lo) - malmsten_slope(hi),
                     {a.scale + b.scale, std::min(a.rate, b.rate), 1.0});
}

}  // namespace catalan
