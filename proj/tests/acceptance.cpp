// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "catalan/constants_series.hpp"
#include "catalan/exact.hpp"
#include "catalan/gamma_kernel.hpp"
#include "catalan/representations.hpp"
#include "corpus.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, std::string note) {
    if (!ok) pass = false;
    notes.push_back((ok ? "ok   " : "FAIL ") + std::move(note));
  }
  void info(std::string note) { notes.push_back("info " + std::move(note)); }
};

std::string first_line_of(const std::string& args, int& code) {
  const std::string cmd = std::string(CATALAN_CLI_PATH) + " " + args;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    code = -1;
    return out;
  }
  std::array<char, 512> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out.substr(0, out.find('\n'));
}

Outcome anchor_values() {
  Outcome o;
  int code = 0;
  const std::string c3 = first_line_of("exact 3", code);
  o.require(code == 0 && c3 == "5", fmt::format("exact 3 -> '{}'", c3));
  const std::string c5 = first_line_of("exact 5", code);
  o.require(code == 0 && c5 == "42", fmt::format("exact 5 -> '{}'", c5));
  const auto parens = catalan::count_balanced_parentheses(3);
  o.require(parens == 5, "count_balanced_parentheses(3) = " + parens.str());
  const auto tri = catalan::count_polygon_triangulations(7);
  o.require(tri == 42, "count_polygon_triangulations(7) = " + tri.str());
  return o;
}

Outcome theorem() {
  Outcome o;
  double worst = 0.0;
  std::size_t worst_n = 0;
  bool all_converged = true;
  for (std::size_t n = 1; n <= 50; ++n) {
    const auto r = catalan::catalan_malmsten(n);
    all_converged = all_converged && r.converged;
    const double err = std::abs(r.ln_value - catalan::ln_exact(n));
    if (!(err <= worst)) {
      worst = err;
      worst_n = n;
    }
  }
  o.require(all_converged && worst <= 1e-9,
            fmt::format("max |ln C_n(malmsten) - ln_exact| over 1..50 = {:.3e} (n={})",
                        worst, worst_n));
  const double ln_c0 = catalan::catalan_malmsten(0).ln_value;
  o.require(std::abs(ln_c0) <= 1e-9, fmt::format("|ln C_0(malmsten)| = {:.3e}", ln_c0));
  return o;
}

Outcome cross_representation() {
  Outcome o;
  const auto rows = catalan::compare_representations(50);
  o.require(rows.size() == 51 * catalan::kAllMethods.size(),
            fmt::format("{} rows", rows.size()));
  for (catalan::Method m : catalan::kAllMethods) {
    double worst = 0.0;
    std::size_t converged = 0;
    for (const auto& r : rows) {
      if (r.method != m || !r.converged) continue;
      ++converged;
      if (!(r.abs_err_ln <= worst)) worst = r.abs_err_ln;
    }
    o.require(converged == 51 && worst <= 1e-8,
              fmt::format("{:<18} converged {}/51, max abs_err_ln {:.3e}",
                          catalan::to_string(m), converged, worst));
  }
  return o;
}

Outcome malmsten_self_check() {
  Outcome o;
  for (double x : {0.0, 0.25, 0.5, 1.0, 2.5, 7.0, 20.0}) {
    const double err = std::abs(catalan::log_gamma_malmsten(x).value -
                                catalan::log_gamma_reference(x + 1));
    o.require(err <= 1e-10, fmt::format("x = {:<5} error {:.3e}", x, err));
  }
  return o;
}

Outcome binet_closure() {
  Outcome o;
  for (double x : {1.0, 2.0, 5.0, 10.0}) {
    const double theta = catalan::binet_theta(x).value;
    const double rebuilt = x * std::log(x) - x +
                           0.5 * std::log(2 * std::numbers::pi * x) + theta;
    const double err = std::abs(rebuilt - catalan::log_gamma_reference(x + 1));
    o.require(err <= 1e-10, fmt::format("closure x = {:<3} error {:.3e}", x, err));
  }
  for (double x : {0.5, 1.0, 2.0, 5.0, 10.0, 50.0}) {
    const double theta = catalan::binet_theta(x).value;
    o.require(theta > 0 && theta < 1 / (12 * x),
              fmt::format("0 < theta({}) = {:.6e} < {:.6e}", x, theta, 1 / (12 * x)));
  }
  return o;
}

Outcome sum_rules() {
  Outcome o;
  for (catalan::SumRule rule : {catalan::SumRule::odd_weight, catalan::SumRule::plain}) {
    const auto t0 = Clock::now();
    const auto s = catalan::stewart_sum(rule, 1e-6);
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    o.require(s.converged && s.abs_err <= 2e-6 && secs < 30,
              fmt::format("{:<10} certified {:.12f} target {:.12f} abs_err {:.3e} "
                          "({} terms, {:.2f}s)",
                          catalan::to_string(rule), s.certified_value, s.target,
                          s.abs_err, s.terms_used, secs));
    for (std::size_t n : {10u, 100u, 1000u}) {
      const auto p = catalan::stewart_partial(rule, n);
      const bool inside = p.partial_sum <= p.target && p.target <= p.partial_sum + p.tail_bound;
      o.require(inside, fmt::format("{:<10} checkpoint {:>4}: [{:.10f}, {:.10f}] "
                                    "contains target",
                                    catalan::to_string(rule), n, p.partial_sum,
                                    p.partial_sum + p.tail_bound));
    }
  }
  const auto w = catalan::stewart_sum(catalan::SumRule::weighted, 1e-6);
  o.info(fmt::format("sum (2n+1) C_2n C_n / 64^n certified {:.12f}, "
                     "|- 8 sqrt2/(3 pi)| = {:.3e}",
                     w.certified_value, w.abs_err));
  return o;
}

Outcome glaisher() {
  Outcome o;
  const auto g = catalan::glaisher_from_integral();
  o.require(g.converged && g.abs_err <= 1e-8,
            fmt::format("ln A from integral {:.15f}, oracle {:.15f}, |diff| {:.3e}",
                        g.ln_A, g.oracle_ln_A, g.abs_err));
  return o;
}

Outcome property_suites() {
  Outcome o;

  bool triple = true;
  for (std::size_t n = 0; n <= 200 && triple; ++n) {
    const auto c = catalan::catalan_exact(n);
    triple = c == catalan::catalan_segner(n) && c == catalan::catalan_hypergeometric(n);
  }
  o.require(triple, "exact = segner = hypergeometric for n <= 200");

  std::size_t honest = 0;
  std::size_t total = 0;
  for (catalan::Transform tr :
       {catalan::Transform::none, catalan::Transform::exp_decay_map,
        catalan::Transform::double_exponential, catalan::Transform::rational_map}) {
    catalan::QuadConfig cfg;
    cfg.transform = tr;
    for (const auto& c : corpus::closed_form_cases()) {
      const auto r = corpus::integrate(c, cfg);
      ++total;
      if (std::abs(r.value - c.exact) <= 10 * r.error_estimate) ++honest;
    }
  }
  o.require(honest == total,
            fmt::format("error-estimate honesty {}/{} (corpus x transforms)", honest, total));

  std::vector<catalan::KernelSpec> kernels;
  for (std::size_t n : {0u, 1u, 5u, 20u, 50u}) {
    kernels.push_back(catalan::malmsten_catalan_kernel(n));
    kernels.push_back(catalan::binet_catalan_kernel(n));
    kernels.push_back(catalan::log_gamma_difference_kernel(n));
  }
  for (double x : {0.0, 0.25, 0.5, 1.0, 2.5, 7.0, 20.0}) {
    kernels.push_back(catalan::malmsten_log_gamma_kernel(x));
    if (x > 0) kernels.push_back(catalan::binet_theta_kernel(x));
  }
  std::size_t limit_ok = 0;
  for (const auto& k : kernels) {
    const auto& f = k.integrand;
    const double lim = f.origin_limit.value_or(NAN);
    const double h1 = 1e-4;
    const double h2 = 1e-5;
    const double extrapolated = (h1 * f.eval(h2) - h2 * f.eval(h1)) / (h1 - h2);
    if (std::abs(f.eval(f.small_t_threshold) - lim) <= 0.01 * (1 + std::abs(lim)) &&
        std::abs(extrapolated - lim) <= 1e-6 * (1 + std::abs(lim))) {
      ++limit_ok;
    }
  }
  o.require(limit_ok == kernels.size(),
            fmt::format("origin-limit consistency {}/{} kernels", limit_ok, kernels.size()));

  std::size_t equal = 0;
  std::size_t samples = 0;
  for (std::size_t n : {0u, 1u, 5u, 10u, 20u}) {
    const auto a = catalan::malmsten_catalan_kernel(n);
    const auto b = catalan::log_gamma_difference_kernel(n);
    for (double t : {1e-3, 0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 30.0}) {
      const double va = a.integrand(t);
      const double vb = b.integrand(t);
      ++samples;
      const double tol = 1e-12 * std::max(1.0, 1.0 / t) * std::max(1.0, std::abs(va));
      if (std::abs(va - vb) <= tol) ++equal;
    }
  }
  o.require(equal == samples,
            fmt::format("malmsten kernel = difference kernel at {}/{} (n, t) samples",
                        equal, samples));
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double time_limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "anchor values", 1.0, anchor_values},
      {2, "Malmsten-Catalan theorem, n = 0..50", 30.0, theorem},
      {3, "cross-representation agreement, n <= 50", 120.0, cross_representation},
      {4, "Malmsten ln Gamma self-check", 0.0, malmsten_self_check},
      {5, "Binet closure and theta bounds", 0.0, binet_closure},
      {6, "sum rules", 0.0, sum_rules},
      {7, "Glaisher-Kinkelin constant", 10.0, glaisher},
      {8, "property suites", 0.0, property_suites},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o = c.run();
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (c.time_limit_s > 0) {
      o.require(secs < c.time_limit_s,
                fmt::format("runtime {:.3f}s < {}s", secs, c.time_limit_s));
    }
    fmt::print("[{}] criterion {}: {} ({:.3f}s)\n", o.pass ? "PASS" : "FAIL", c.id,
               c.title, secs);
    for (const auto& note : o.notes) fmt::print("         {}\n", note);
    if (!o.pass) ++failures;
  }
  fmt::print("{} of {} criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
