#include "catalan/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <vector>

#include <fmt/format.h>

namespace catalan {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min();

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
// Odd indices are shared with the Gauss rule; the last entry is the centre.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208980436962, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr int kMaxDoubleExpLevel = 10;
constexpr double kTanhSinhSpan = 4.0;
constexpr double kExpSinhSpan = 6.5;

// Counts samples and rejects non-finite values. `to_t` maps the rule's
// variable back to the integrand's own abscissa for error reporting.
class Sampler {
 public:
  explicit Sampler(std::function<double(double)> g,
                   std::function<double(double)> to_t = {})
      : g_(std::move(g)), to_t_(std::move(to_t)) {}

  double operator()(double x) {
    ++count_;
    const double v = g_(x);
    if (!std::isfinite(v)) {
      const double t = to_t_ ? to_t_(x) : x;
      throw NonFiniteIntegrand(
          t, v, fmt::format("integrand is not finite at t = {:.17g}", t));
    }
    return v;
  }
  std::size_t count() const { return count_; }

 private:
  std::function<double(double)> g_;
  std::function<double(double)> to_t_;
  std::size_t count_ = 0;
};

struct Segment {
  double a;
  double b;
  double value;
  double error;
};

struct WorseFirst {
  bool operator()(const Segment& x, const Segment& y) const {
    return x.error < y.error;
  }
};

Segment kronrod21(Sampler& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double abs_half = std::abs(half);

  std::array<double, 10> f_lo{};
  std::array<double, 10> f_hi{};
  const double fc = f(centre);
  double res_gauss = 0.0;
  double res_kronrod = kWgk[10] * fc;
  double res_abs = std::abs(res_kronrod);
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    f_lo[j] = f(centre - dx);
    f_hi[j] = f(centre + dx);
    const double pair = f_lo[j] + f_hi[j];
    res_kronrod += kWgk[j] * pair;
    res_abs += kWgk[j] * (std::abs(f_lo[j]) + std::abs(f_hi[j]));
    if (j % 2 == 1) res_gauss += kWg[j / 2] * pair;
  }
  const double mean = 0.5 * res_kronrod;
  double res_asc = kWgk[10] * std::abs(fc - mean);
  for (std::size_t j = 0; j < 10; ++j) {
    res_asc += kWgk[j] * (std::abs(f_lo[j] - mean) + std::abs(f_hi[j] - mean));
  }
  res_abs *= abs_half;
  res_asc *= abs_half;

  double err = std::abs((res_kronrod - res_gauss) * half);
  if (res_asc != 0.0 && err != 0.0) {
    err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
  }
  if (res_abs > kTiny / (50.0 * kEps)) {
    err = std::max(50.0 * kEps * res_abs, err);
  }
  return {a, b, res_kronrod * half, err};
}

// Bisects the worst segment until error + reserve <= cfg.target(value).
// `reserve` accounts for error committed outside [a, b] (a truncated tail).
QuadResult adaptive_kronrod(Sampler& f, double a, double b,
                            const QuadConfig& cfg, double reserve = 0.0) {
  std::priority_queue<Segment, std::vector<Segment>, WorseFirst> heap;
  heap.push(kronrod21(f, a, b));

  auto totals = [&heap] {
    // Priority queues hide their container; copy is O(subdivisions).
    auto copy = heap;
    double value = 0.0;
    double error = 0.0;
    while (!copy.empty()) {
      value += copy.top().value;
      error += copy.top().error;
      copy.pop();
    }
    return std::pair{value, error};
  };

  double value = heap.top().value;
  double error = heap.top().error;
  auto done = [&] { return error + reserve <= cfg.target(value); };
  bool converged = done();
  while (!converged && heap.size() < cfg.max_subdivisions) {
    const Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    const double scale = std::max(std::abs(worst.a), std::abs(worst.b));
    if (!(mid > worst.a && mid < worst.b) ||
        worst.b - worst.a <= 100.0 * kEps * scale) {
      break;
    }
    heap.pop();
    const Segment left = kronrod21(f, worst.a, mid);
    const Segment right = kronrod21(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    if (done()) {
      // Resum to shed drift from the running totals before deciding.
      std::tie(value, error) = totals();
      converged = done();
    }
  }
  std::tie(value, error) = totals();
  converged = done();
  return {value, error + reserve, f.count(), converged};
}

// Trapezoidal sums of a double-exponential rule over s in [-span, span],
// halving the step each level. `node` returns (abscissa, weight) or nothing
// when the abscissa is not representable.
template <typename Node>
QuadResult double_exponential(Sampler& f, Node node, double span,
                              const QuadConfig& cfg) {
  auto sum_points = [&](double h, bool odd_only, double& abs_sum) {
    double s_sum = 0.0;
    const int jmax = static_cast<int>(std::floor(span / h));
    for (int j = -jmax; j <= jmax; ++j) {
      if (odd_only && j % 2 == 0) continue;
      const auto nw = node(j * h);
      if (!nw) continue;
      const double term = nw->second * f(nw->first);
      s_sum += term;
      abs_sum += std::abs(term);
    }
    return s_sum;
  };

  double h = 0.5;
  double abs_sum = 0.0;
  double raw = sum_points(h, false, abs_sum);
  double estimate = h * raw;
  double error = std::numeric_limits<double>::infinity();
  bool converged = false;
  for (int level = 1; level <= kMaxDoubleExpLevel; ++level) {
    h *= 0.5;
    raw += sum_points(h, true, abs_sum);
    const double next = h * raw;
    const double roundoff = 10.0 * kEps * h * abs_sum;
    error = std::max(std::abs(next - estimate), roundoff);
    estimate = next;
    if (level >= 3 && error <= cfg.target(estimate)) {
      converged = true;
      break;
    }
  }
  return {estimate, error, f.count(), converged};
}

QuadResult tanh_sinh(Sampler& f, double a, double b, const QuadConfig& cfg) {
  const double half = 0.5 * (b - a);
  auto node = [a, b, half](double s) -> std::optional<std::pair<double, double>> {
    const double u = std::numbers::pi / 2 * std::sinh(s);
    const double e = std::exp(2.0 * std::abs(u));
    // Distance to the nearer endpoint, computed without cancellation.
    const double delta = half * 2.0 / (e + 1.0);
    const double x = s >= 0.0 ? b - delta : a + delta;
    if (!(delta > 0.0) || x <= a || x >= b) return std::nullopt;
    const double ch = std::cosh(u);
    const double w = half * std::numbers::pi / 2 * std::cosh(s) / (ch * ch);
    return std::pair{x, w};
  };
  return double_exponential(f, node, kTanhSinhSpan, cfg);
}

QuadResult exp_sinh(Sampler& f, const QuadConfig& cfg) {
  auto node = [](double s) -> std::optional<std::pair<double, double>> {
    const double t = std::exp(std::numbers::pi / 2 * std::sinh(s));
    if (!(t > 0.0) || !std::isfinite(t)) return std::nullopt;
    return std::pair{t, std::numbers::pi / 2 * std::cosh(s) * t};
  };
  return double_exponential(f, node, kExpSinhSpan, cfg);
}

}  // namespace

std::string_view to_string(Transform t) {
  switch (t) {
    case Transform::none:
      return "none";
    case Transform::exp_decay_map:
      return "exp_decay_map";
    case Transform::double_exponential:
      return "double_exponential";
    case Transform::rational_map:
      return "rational_map";
  }
  return "unknown";
}

std::optional<Transform> parse_transform(std::string_view name) {
  for (auto t : {Transform::none, Transform::exp_decay_map,
                 Transform::double_exponential, Transform::rational_map}) {
    const std::string_view canonical = to_string(t);
    if (name == canonical) return t;
    std::string dashed(canonical);
    std::replace(dashed.begin(), dashed.end(), '_', '-');
    if (name == dashed) return t;
  }
  return std::nullopt;
}

double Integrand::operator()(double t) const {
  if (origin_limit && t < small_t_threshold) {
    return *origin_limit + (origin_slope ? *origin_slope * t : 0.0);
  }
  return eval(t);
}

void QuadConfig::validate() const {
  if (!(abs_tol >= 0.0) || !(rel_tol >= 0.0)) {
    throw std::invalid_argument("QuadConfig: tolerances must be >= 0");
  }
  if (!(abs_tol + rel_tol > 0.0)) {
    throw std::invalid_argument("QuadConfig: abs_tol + rel_tol must be > 0");
  }
  if (max_subdivisions < 1) {
    throw std::invalid_argument("QuadConfig: max_subdivisions must be >= 1");
  }
}

double QuadConfig::target(double value) const {
  return std::max(abs_tol, rel_tol * std::abs(value));
}

NonFiniteIntegrand::NonFiniteIntegrand(double abscissa, double value,
                                       const std::string& what)
    : std::runtime_error(what), abscissa_(abscissa), value_(value) {}

QuadResult integrate_finite(const Integrand& f, double a, double b,
                            const QuadConfig& cfg) {
  cfg.validate();
  if (!(a < b)) {
    throw std::invalid_argument(
        fmt::format("integrate_finite: need a < b, got [{}, {}]", a, b));
  }
  Sampler sampler([&f](double t) { return f(t); });
  if (cfg.transform == Transform::double_exponential) {
    return tanh_sinh(sampler, a, b, cfg);
  }
  return adaptive_kronrod(sampler, a, b, cfg);
}

QuadResult integrate_half_line(const Integrand& f, const QuadConfig& cfg) {
  cfg.validate();
  auto checked = [&f](double t) {
    const double v = f(t);
    if (!std::isfinite(v) && !f.origin_limit && t < 1e-3) {
      throw NonFiniteIntegrand(
          t, v,
          fmt::format("integrand without an origin limit is not finite "
                      "near 0 (t = {:.17g})",
                      t));
    }
    return v;
  };

  Transform transform = cfg.transform;
  if (transform == Transform::none ||
      (transform == Transform::exp_decay_map && !f.tail)) {
    transform = Transform::rational_map;
  }

  switch (transform) {
    case Transform::double_exponential: {
      Sampler sampler(checked);
      return exp_sinh(sampler, cfg);
    }
    case Transform::exp_decay_map: {
      const TailBound tail = *f.tail;
      const double c = tail.rate;
      // Cut where the tail integral scale * exp(-c T) / c <= abs_tol / 10.
      const double tail_tol = std::max(cfg.abs_tol, 1e-300) / 10.0;
      const double cutoff =
          std::max(tail.from, std::log(tail.scale / (c * tail_tol)) / c);
      const double tail_bound = tail.scale * std::exp(-c * cutoff) / c;
      const double u_max = -std::expm1(-c * cutoff);
      auto to_t = [c](double u) { return -std::log1p(-u) / c; };
      Sampler sampler(
          [&checked, to_t, c](double u) {
            return checked(to_t(u)) / (c * (1.0 - u));
          },
          to_t);
      return adaptive_kronrod(sampler, 0.0, u_max, cfg, tail_bound);
    }
    case Transform::rational_map:
    case Transform::none: {
      // t = s^2 with s = u/(1 - u): dt = 2 u / (1 - u)^3 du. Squaring
      // absorbs sqrt(t) behaviour at the origin, and t^{-p} decay maps to
      // (1 - u)^{2p - 3}, bounded for p >= 3/2.
      auto to_t = [](double u) {
        const double s = u / (1.0 - u);
        return s * s;
      };
      Sampler sampler(
          [&checked, to_t](double u) {
            const double w = 1.0 - u;
            return checked(to_t(u)) * 2.0 * u / (w * w * w);
          },
          to_t);
      return adaptive_kronrod(sampler, 0.0, 1.0, cfg);
    }
  }
  throw std::logic_error("integrate_half_line: unhandled transform");
}

}  // namespace catalan
