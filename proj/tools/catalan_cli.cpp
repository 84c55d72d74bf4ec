// catalan: exact Catalan numbers, integral-representation checks, sum rules
// and the Glaisher-Kinkelin integral.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "catalan/constants_series.hpp"
#include "catalan/exact.hpp"
#include "catalan/report.hpp"
#include "catalan/representations.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QuadFlags {
  double abs_tol = catalan::QuadConfig{}.abs_tol;
  double rel_tol = catalan::QuadConfig{}.rel_tol;
  std::size_t max_subdivisions = catalan::QuadConfig{}.max_subdivisions;
  std::string transform{catalan::to_string(catalan::QuadConfig{}.transform)};

  void attach(CLI::App* cmd) {
    cmd->add_option("--abs-tol", abs_tol, "absolute quadrature tolerance");
    cmd->add_option("--rel-tol", rel_tol, "relative quadrature tolerance");
    cmd->add_option("--max-subdivisions", max_subdivisions,
                    "adaptive subdivision budget");
    cmd->add_option("--transform", transform,
                    "none | exp-decay-map | double-exponential | rational-map");
  }

  catalan::QuadConfig config() const {
    catalan::QuadConfig cfg;
    cfg.abs_tol = abs_tol;
    cfg.rel_tol = rel_tol;
    cfg.max_subdivisions = max_subdivisions;
    const auto t = catalan::parse_transform(transform);
    if (!t) throw UsageError("unknown transform '" + transform + "'");
    cfg.transform = *t;
    try {
      cfg.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    return cfg;
  }
};

catalan::OutputFormat format_or_throw(const std::string& name) {
  const auto f = catalan::parse_format(name);
  if (!f) throw UsageError("unknown format '" + name + "'");
  return *f;
}

void emit(const std::string& payload, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << payload;
    std::cout.flush();
    if (!std::cout) throw IoError("failed writing to stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << payload;
  out.close();
  if (!out) throw IoError("failed writing '" + path + "'");
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Catalan numbers: exact values and integral representations"};
  app.require_subcommand(1);

  // exact
  std::size_t exact_n = 0;
  auto* exact = app.add_subcommand("exact", "print C_n exactly and ln C_n");
  exact->add_option("n", exact_n, "index")->required();

  // rep
  std::string rep_method;
  std::size_t rep_n = 0;
  double rep_tol = catalan::kDefaultVerifyThreshold;
  std::string rep_format = "text";
  QuadFlags rep_quad;
  auto* rep = app.add_subcommand("rep", "evaluate ln C_n by one representation");
  rep->add_option("method", rep_method,
                  "gamma | malmsten | binet | penson-moment | penson-mellin")
      ->required();
  rep->add_option("n", rep_n, "index")->required();
  rep->add_option("--tol", rep_tol, "abs_err_ln threshold for success");
  rep->add_option("--format", rep_format, "text | csv | json");
  rep_quad.attach(rep);

  // verify
  std::size_t verify_n_max = 5;
  std::string verify_format = "text";
  double verify_tol = catalan::kDefaultVerifyThreshold;
  std::string verify_output;
  QuadFlags verify_quad;
  auto* verify = app.add_subcommand("verify", "compare all representations");
  verify->add_option("--n-max", verify_n_max, "largest n");
  verify->add_option("--format", verify_format, "text | csv | json");
  verify->add_option("--tol", verify_tol, "abs_err_ln threshold per row");
  verify->add_option("--output,-o", verify_output, "write to file instead of stdout");
  verify_quad.attach(verify);

  // sumrule
  std::string sum_which;
  double sum_tol = 1e-6;
  std::size_t sum_max_terms = catalan::kDefaultTermBudget;
  std::string sum_format = "text";
  auto* sumrule = app.add_subcommand("sumrule", "evaluate a Catalan sum rule");
  sumrule->add_option("which", sum_which, "odd-weight | plain | weighted")->required();
  sumrule->add_option("--tol", sum_tol, "tail-bound target");
  sumrule->add_option("--max-terms", sum_max_terms, "term budget");
  sumrule->add_option("--format", sum_format, "text | json");

  // glaisher
  std::string gla_format = "text";
  QuadFlags gla_quad;
  auto* glaisher = app.add_subcommand(
      "glaisher", "Glaisher-Kinkelin constant from the ln Gamma integral");
  glaisher->add_option("--format", gla_format, "text | json");
  gla_quad.attach(glaisher);

  // dump-kernel
  std::string dump_method;
  std::size_t dump_n = 0;
  double dump_t_min = 1e-8;
  double dump_t_max = 40.0;
  std::size_t dump_points = 200;
  auto* dump = app.add_subcommand("dump-kernel", "CSV samples of an integrand");
  dump->add_option("method", dump_method,
                   "malmsten | binet | difference | log-gamma | theta")
      ->required();
  dump->add_option("n", dump_n, "kernel parameter")->required();
  dump->add_option("--t-min", dump_t_min, "first abscissa (>= 0)");
  dump->add_option("--t-max", dump_t_max, "last abscissa");
  dump->add_option("--points", dump_points, "number of samples (>= 2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*exact) {
      const catalan::BigCount c = catalan::catalan_exact(exact_n);
      std::cout << c.str() << '\n'
                << "ln_C " << catalan::format_real(catalan::ln_big(c)) << '\n';
      return kExitOk;
    }

    if (*rep) {
      const auto method = catalan::parse_method(rep_method);
      if (!method) {
        std::cerr << "unknown method '" << rep_method << "'\n" << rep->help();
        return kExitUsage;
      }
      const auto format = format_or_throw(rep_format);
      catalan::RepresentationResult row;
      try {
        row = catalan::evaluate(*method, rep_n, rep_quad.config());
      } catch (const std::out_of_range& e) {
        throw UsageError(e.what());
      }
      if (format == catalan::OutputFormat::json) {
        std::cout << dump_json(catalan::to_json(row));
      } else if (format == catalan::OutputFormat::csv) {
        std::cout << catalan::rows_to_csv({row});
      } else {
        std::cout << catalan::row_to_text(row) << '\n';
      }
      return row.converged && row.abs_err_ln <= rep_tol ? kExitOk
                                                        : kExitVerification;
    }

    if (*verify) {
      const auto format = format_or_throw(verify_format);
      const catalan::Report report = catalan::build_verify_report(
          verify_n_max, verify_quad.config(), verify_tol,
          catalan::utc_timestamp());
      std::string payload;
      switch (format) {
        case catalan::OutputFormat::json:
          payload = dump_json(catalan::to_json(report));
          break;
        case catalan::OutputFormat::csv:
          payload = catalan::rows_to_csv(report.rows);
          break;
        case catalan::OutputFormat::text:
          payload = catalan::report_to_text(report);
          break;
      }
      emit(payload, verify_output);
      return report.summary.failures == 0 ? kExitOk : kExitVerification;
    }

    if (*sumrule) {
      const auto rule = catalan::parse_sum_rule(sum_which);
      if (!rule) {
        std::cerr << "unknown sum rule '" << sum_which << "'\n" << sumrule->help();
        return kExitUsage;
      }
      const auto format = format_or_throw(sum_format);
      const catalan::SeriesResult s =
          catalan::stewart_sum(*rule, sum_tol, sum_max_terms);
      if (format == catalan::OutputFormat::json) {
        std::cout << dump_json(catalan::to_json(s));
      } else {
        std::cout << catalan::series_to_text(s);
      }
      return s.converged && s.abs_err <= sum_tol + s.tail_bound
                 ? kExitOk
                 : kExitVerification;
    }

    if (*glaisher) {
      const auto format = format_or_throw(gla_format);
      const catalan::GlaisherResult g =
          catalan::glaisher_from_integral(gla_quad.config());
      if (format == catalan::OutputFormat::json) {
        std::cout << dump_json(catalan::to_json(g));
      } else {
        std::cout << catalan::glaisher_to_text(g);
      }
      return g.converged && g.abs_err <= 1e-8 ? kExitOk : kExitVerification;
    }

    if (*dump) {
      const catalan::KernelSpec kernel =
          catalan::kernel_by_name(dump_method, dump_n);
      std::cout << catalan::dump_kernel_csv(kernel, dump_t_min, dump_t_max,
                                            dump_points);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerification;
  }
  return kExitUsage;
}
