#include "catalan/constants_series.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "catalan/exact.hpp"
#include "catalan/gamma_kernel.hpp"

namespace catalan {

namespace {

// Terms up to this index come from exact integers; later terms (only reached
// for tolerances below ~1e-11) follow the exact rational ratio between
// consecutive terms, which adds ~4 ulp of relative error per step.
constexpr std::size_t kExactHorizon = 4096;

double ln_weight(SumRule rule, std::size_t n) {
  const double w = 2.0 * static_cast<double>(n) + 1.0;
  switch (rule) {
    case SumRule::odd_weight:
      return -std::log(w);
    case SumRule::weighted:
      return std::log(w);
    case SumRule::plain:
      break;
  }
  return 0.0;
}

// ln(C_{2n} C_n / 64^n) with the powers of two cancelled as integers, so the
// result carries no error proportional to n ln 64.
double ln_plain_term(const BigCount& c_2n, const BigCount& c_n, std::size_t n) {
  std::int64_t e_2n = 0;
  std::int64_t e_n = 0;
  const double m = frexp_big(c_2n, e_2n) * frexp_big(c_n, e_n);
  const std::int64_t e = e_2n + e_n - 6 * static_cast<std::int64_t>(n);
  return std::log(m) + static_cast<double>(e) * std::numbers::ln2;
}

// C_m / C_{m-1}
double catalan_ratio(double m) { return 2.0 * (2.0 * m - 1.0) / (m + 1.0); }

// Produces terms n = 0, 1, 2, ... in order.
class TermStream {
 public:
  explicit TermStream(SumRule rule) : rule_(rule) {}

  double next() {
    double term;
    if (n_ <= kExactHorizon) {
      if (n_ > 0) advance_exact();
      term = std::exp(ln_plain_term(c_2n_, c_n_, n_) + ln_weight(rule_, n_));
    } else {
      const double n = static_cast<double>(n_);
      term = last_ * catalan_ratio(2.0 * n - 1.0) * catalan_ratio(2.0 * n) *
             catalan_ratio(n) / 64.0;
      if (rule_ == SumRule::odd_weight) term *= (2.0 * n - 1.0) / (2.0 * n + 1.0);
      if (rule_ == SumRule::weighted) term *= (2.0 * n + 1.0) / (2.0 * n - 1.0);
    }
    last_ = term;
    ++n_;
    return term;
  }

 private:
  void advance_exact() {
    // C_{m+1} = C_m * 2(2m + 1) / (m + 2), exact.
    auto step = [](BigCount& c, std::size_t m) {
      c *= 2 * (2 * m + 1);
      c /= m + 2;
    };
    step(c_n_, n_ - 1);
    step(c_2n_, 2 * n_ - 2);
    step(c_2n_, 2 * n_ - 1);
  }

  SumRule rule_;
  std::size_t n_ = 0;
  BigCount c_n_ = 1;
  BigCount c_2n_ = 1;
  double last_ = 0.0;
};

// Neumaier-compensated running sum; terms are added in ascending n.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

SeriesResult finish(SumRule rule, double partial, std::size_t terms,
                    double tail) {
  SeriesResult r;
  r.rule = rule;
  r.partial_sum = partial;
  r.terms_used = terms;
  r.tail_bound = tail;
  r.certified_value = partial + 0.5 * tail;
  r.target = sum_rule_target(rule);
  r.abs_err = std::abs(r.certified_value - r.target);
  return r;
}

}  // namespace

std::string_view to_string(SumRule rule) {
  switch (rule) {
    case SumRule::odd_weight:
      return "odd-weight";
    case SumRule::plain:
      return "plain";
    case SumRule::weighted:
      return "weighted";
  }
  return "unknown";
}

std::optional<SumRule> parse_sum_rule(std::string_view name) {
  if (name == "odd-weight" || name == "odd_weight") return SumRule::odd_weight;
  if (name == "plain") return SumRule::plain;
  if (name == "weighted") return SumRule::weighted;
  return std::nullopt;
}

double sum_rule_target(SumRule rule) {
  const double odd = 8.0 * std::numbers::sqrt2 / (3.0 * std::numbers::pi);
  if (rule != SumRule::plain) return odd;
  return 4.0 / std::numbers::pi * std::log(3.0 + 2.0 * std::numbers::sqrt2) -
         odd;
}

double stewart_term(SumRule rule, std::size_t n) {
  return std::exp(ln_plain_term(catalan_exact(2 * n), catalan_exact(n), n) +
                  ln_weight(rule, n));
}

double series_tail_bound(std::size_t n_start, SumRule rule) {
  if (n_start < 4) {
    throw std::invalid_argument("series_tail_bound: n_start must be >= 4");
  }
  // Each term is at most 1/(pi 2^{3/2} n^3), and
  // sum_{n >= N} n^{-3} <= integral_{N-1}^inf x^{-3} dx = 1/(2 (N-1)^2).
  const double m = static_cast<double>(n_start - 1);
  const double scale = 1.0 / (std::numbers::pi * 2.0 * std::numbers::sqrt2);
  switch (rule) {
    case SumRule::plain:
      return scale / (2.0 * m * m);
    case SumRule::odd_weight:
      return scale / (2.0 * m * m) / (2.0 * static_cast<double>(n_start) + 1.0);
    case SumRule::weighted:
      // (2n + 1)/n^3 = 2/n^2 + 1/n^3, each tail bounded by an integral.
      return scale * (2.0 / m + 1.0 / (2.0 * m * m));
  }
  return scale;
}

SeriesResult stewart_partial(SumRule rule, std::size_t terms) {
  if (terms < 4) {
    throw std::invalid_argument("stewart_partial: need at least 4 terms");
  }
  TermStream stream(rule);
  CompensatedSum sum;
  for (std::size_t i = 0; i < terms; ++i) sum.add(stream.next());
  SeriesResult r = finish(rule, sum.value(), terms, series_tail_bound(terms, rule));
  r.converged = true;
  return r;
}

SeriesResult stewart_sum(SumRule rule, double tol, std::size_t max_terms) {
  if (!(tol > 0.0)) throw std::invalid_argument("stewart_sum: tol must be > 0");
  if (max_terms < 4) {
    throw std::invalid_argument("stewart_sum: term budget must be >= 4");
  }
  TermStream stream(rule);
  CompensatedSum sum;
  std::size_t terms = 0;
  while (terms < 4) {
    sum.add(stream.next());
    ++terms;
  }
  double tail = series_tail_bound(terms, rule);
  while (tail > tol && terms < max_terms) {
    sum.add(stream.next());
    ++terms;
    tail = series_tail_bound(terms, rule);
  }
  SeriesResult r = finish(rule, sum.value(), terms, tail);
  r.converged = tail <= tol;
  return r;
}

double glaisher_ln_a_from_integral(double integral) {
  return (2.0 / 3.0) * (integral + 0.5 + (7.0 / 24.0) * std::numbers::ln2 -
                        0.25 * std::log(std::numbers::pi));
}

double glaisher_integral_from_ln_a(double ln_a) {
  return -0.5 - (7.0 / 24.0) * std::numbers::ln2 +
         0.25 * std::log(std::numbers::pi) + 1.5 * ln_a;
}

double glaisher_sequence(std::size_t m) {
  if (m < 1) throw std::invalid_argument("glaisher_sequence: m must be >= 1");
  // sum k ln k - (m(m+1)/2) ln m = sum k ln(k/m); the remaining terms cancel
  // against m^2/4 to ~1e-10 of their size, so accumulate in extended
  // precision with compensation.
  const long double md = static_cast<long double>(m);
  long double sum = 0.0L;
  long double carry = 0.0L;
  for (std::size_t k = 1; k <= m; ++k) {
    const long double kd = static_cast<long double>(k);
    const long double y = kd * std::log(kd / md) - carry;
    const long double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return static_cast<double>(sum - std::log(md) / 12.0L + md * md / 4.0L);
}

double glaisher_oracle(std::size_t m) {
  if (m < 10) throw std::invalid_argument("glaisher_oracle: m must be >= 10");
  // The sequence error expands in even powers of 1/m.
  const double d1 = glaisher_sequence(m);
  const double d2 = glaisher_sequence(2 * m);
  const double d4 = glaisher_sequence(4 * m);
  const double r1 = (4.0 * d2 - d1) / 3.0;
  const double r2 = (4.0 * d4 - d2) / 3.0;
  return (16.0 * r2 - r1) / 15.0;
}

GlaisherResult glaisher_from_integral(const QuadConfig& cfg) {
  Integrand f;
  f.eval = [](double x) { return log_gamma_reference(x + 1.0); };
  QuadConfig finite = cfg;
  if (finite.transform != Transform::double_exponential) {
    finite.transform = Transform::none;
  }
  const QuadResult q = integrate_finite(f, 0.0, 0.5, finite);
  GlaisherResult r;
  r.integral_value = q.value;
  r.ln_A = glaisher_ln_a_from_integral(q.value);
  r.oracle_ln_A = glaisher_oracle();
  r.abs_err = std::abs(r.ln_A - r.oracle_ln_A);
  r.quad_error_estimate = q.error_estimate;
  r.converged = q.converged;
  return r;
}

}  // namespace catalan
