#include "catalan/representations.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

#include "catalan/exact.hpp"
#include "catalan/gamma_kernel.hpp"

namespace catalan {

namespace {

constexpr double kLn2 = std::numbers::ln2;
const double kLnPi = std::log(std::numbers::pi);

RepresentationResult make_row(std::size_t n, Method m, double ln_value,
                              const QuadResult& q) {
  RepresentationResult r;
  r.n = n;
  r.method = m;
  r.ln_value = ln_value;
  r.exact_ln = ln_exact(n);
  r.abs_err_ln = std::abs(ln_value - r.exact_ln);
  r.quad_error_estimate = q.error_estimate;
  r.evaluations = q.evaluations;
  r.converged = q.converged;
  return r;
}

// ln(I + dI) - ln I ~ dI / I: the quadrature error in log units.
QuadResult relative(QuadResult q) {
  q.error_estimate /= std::abs(q.value);
  return q;
}

void check_penson_range(std::size_t n, const char* route) {
  if (n > kPensonMaxN) {
    throw std::out_of_range(std::string(route) + ": n = " + std::to_string(n) +
                            " exceeds " + std::to_string(kPensonMaxN));
  }
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::gamma_closed_form:
      return "gamma_closed_form";
    case Method::malmsten:
      return "malmsten";
    case Method::binet:
      return "binet";
    case Method::penson_moment:
      return "penson_moment";
    case Method::penson_mellin:
      return "penson_mellin";
  }
  return "unknown";
}

std::string_view cli_name(Method m) {
  switch (m) {
    case Method::gamma_closed_form:
      return "gamma";
    case Method::malmsten:
      return "malmsten";
    case Method::binet:
      return "binet";
    case Method::penson_moment:
      return "penson-moment";
    case Method::penson_mellin:
      return "penson-mellin";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : kAllMethods) {
    if (name == to_string(m) || name == cli_name(m)) return m;
  }
  return std::nullopt;
}

bool outside_hypothesis(const RepresentationResult& row) {
  return row.method == Method::malmsten && row.n == 0;
}

RepresentationResult catalan_gamma_closed_form(std::size_t n) {
  const double nd = static_cast<double>(n);
  const double ln_value = 2.0 * nd * kLn2 - 0.5 * kLnPi +
                          log_gamma_reference(nd + 0.5) -
                          log_gamma_reference(nd + 2.0);
  return make_row(n, Method::gamma_closed_form, ln_value,
                  QuadResult{ln_value, 0.0, 0, true});
}

RepresentationResult catalan_malmsten(std::size_t n, const QuadConfig& cfg) {
  const QuadResult q =
      integrate_half_line(malmsten_catalan_kernel(n).integrand, cfg);
  const double nd = static_cast<double>(n);
  return make_row(n, Method::malmsten, 2.0 * nd * kLn2 - 0.5 * kLnPi + q.value,
                  q);
}

double binet_prefactor_ln(std::size_t n) {
  const double nd = static_cast<double>(n);
  return 1.5 + nd * std::log(nd + 0.5) - (nd + 1.5) * std::log(nd + 2.0);
}

RepresentationResult catalan_binet(std::size_t n, const QuadConfig& cfg) {
  const QuadResult q =
      integrate_half_line(binet_catalan_kernel(n).integrand, cfg);
  const double nd = static_cast<double>(n);
  return make_row(
      n, Method::binet,
      2.0 * nd * kLn2 - 0.5 * kLnPi + binet_prefactor_ln(n) + q.value, q);
}

RepresentationResult catalan_penson_moment(std::size_t n,
                                           const QuadConfig& cfg) {
  check_penson_range(n, "catalan_penson_moment");
  const int power = static_cast<int>(2 * n);
  Integrand f;
  f.eval = [power](double t) {
    return std::pow(t, power) * std::sqrt((1.0 - t) * (1.0 + t));
  };
  const QuadResult q = integrate_finite(f, -1.0, 1.0, cfg);
  const double nd = static_cast<double>(n);
  const double ln_value =
      q.value > 0.0 ? std::log(2.0 / std::numbers::pi) + 2.0 * nd * kLn2 +
                          std::log(q.value)
                    : std::numeric_limits<double>::quiet_NaN();
  RepresentationResult r = make_row(n, Method::penson_moment, ln_value,
                                    relative(q));
  r.converged = r.converged && q.value > 0.0;
  return r;
}

RepresentationResult catalan_penson_mellin(std::size_t n,
                                           const QuadConfig& cfg) {
  check_penson_range(n, "catalan_penson_mellin");
  const double power = static_cast<double>(n) + 2.0;
  Integrand f;
  f.eval = [power](double t) {
    return std::exp(0.5 * std::log(t) - power * std::log1p(4.0 * t));
  };
  QuadConfig mapped = cfg;
  if (mapped.transform != Transform::double_exponential) {
    mapped.transform = Transform::rational_map;
  }
  const QuadResult q = integrate_half_line(f, mapped);
  const double ln_value = q.value > 0.0
                              ? 2.0 * power * kLn2 - kLnPi + std::log(q.value)
                              : std::numeric_limits<double>::quiet_NaN();
  RepresentationResult r =
      make_row(n, Method::penson_mellin, ln_value, relative(q));
  r.converged = r.converged && q.value > 0.0;
  return r;
}

RepresentationResult evaluate(Method method, std::size_t n,
                              const QuadConfig& cfg) {
  switch (method) {
    case Method::gamma_closed_form:
      return catalan_gamma_closed_form(n);
    case Method::malmsten:
      return catalan_malmsten(n, cfg);
    case Method::binet:
      return catalan_binet(n, cfg);
    case Method::penson_moment:
      return catalan_penson_moment(n, cfg);
    case Method::penson_mellin:
      return catalan_penson_mellin(n, cfg);
  }
  throw std::logic_error("evaluate: unknown method");
}

std::vector<RepresentationResult> compare_representations(
    std::size_t n_max, const QuadConfig& cfg, unsigned threads) {
  cfg.validate();
  const std::size_t per_n = kAllMethods.size();
  const std::size_t total = (n_max + 1) * per_n;
  std::vector<RepresentationResult> rows(total);

  auto compute = [&](std::size_t i) {
    const std::size_t n = i / per_n;
    const Method m = kAllMethods[i % per_n];
    try {
      rows[i] = evaluate(m, n, cfg);
    } catch (const std::exception&) {
      RepresentationResult r;
      r.n = n;
      r.method = m;
      r.ln_value = std::numeric_limits<double>::quiet_NaN();
      r.exact_ln = ln_exact(n);
      r.abs_err_ln = std::numeric_limits<double>::quiet_NaN();
      r.converged = false;
      rows[i] = r;
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < total; i = next++) compute(i);
    });
  }
  pool.clear();  // joins
  return rows;
}

}  // namespace catalan
