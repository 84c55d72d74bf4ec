#include "catalan/report.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

namespace catalan {

namespace {

using nlohmann::json;

double real_from_json(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN()
                     : j.get<double>();
}

RepresentationResult row_from_json(const json& j) {
  RepresentationResult r;
  r.n = j.at("n").get<std::size_t>();
  const auto method = parse_method(j.at("method").get<std::string>());
  if (!method) throw std::invalid_argument("report: unknown method");
  r.method = *method;
  r.ln_value = real_from_json(j.at("ln_value"));
  r.exact_ln = real_from_json(j.at("exact_ln"));
  r.abs_err_ln = real_from_json(j.at("abs_err_ln"));
  r.quad_error_estimate = real_from_json(j.at("quad_error_estimate"));
  r.evaluations = j.at("evaluations").get<std::size_t>();
  r.converged = j.at("converged").get<bool>();
  return r;
}

SeriesResult series_from_json(const json& j) {
  SeriesResult s;
  const auto rule = parse_sum_rule(j.at("rule").get<std::string>());
  if (!rule) throw std::invalid_argument("report: unknown sum rule");
  s.rule = *rule;
  s.partial_sum = j.at("partial_sum").get<double>();
  s.terms_used = j.at("terms_used").get<std::size_t>();
  s.tail_bound = j.at("tail_bound").get<double>();
  s.certified_value = j.at("certified_value").get<double>();
  s.target = j.at("target").get<double>();
  s.abs_err = j.at("abs_err").get<double>();
  s.converged = j.at("converged").get<bool>();
  return s;
}

GlaisherResult glaisher_from_json(const json& j) {
  GlaisherResult g;
  g.integral_value = j.at("integral_value").get<double>();
  g.ln_A = j.at("ln_A").get<double>();
  g.oracle_ln_A = j.at("oracle_ln_A").get<double>();
  g.abs_err = j.at("abs_err").get<double>();
  g.quad_error_estimate = j.at("quad_error_estimate").get<double>();
  g.converged = j.at("converged").get<bool>();
  return g;
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::text;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  return std::nullopt;
}

bool operator==(const QuadConfig& a, const QuadConfig& b) {
  return a.abs_tol == b.abs_tol && a.rel_tol == b.rel_tol &&
         a.max_subdivisions == b.max_subdivisions && a.transform == b.transform;
}

bool operator==(const Report& a, const Report& b) {
  return a.schema_version == b.schema_version &&
         a.generated_at == b.generated_at && a.config == b.config &&
         a.threshold == b.threshold && a.rows == b.rows &&
         a.series == b.series && a.glaisher == b.glaisher &&
         a.summary == b.summary;
}

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ReportSummary summarize(const std::vector<RepresentationResult>& rows,
                        double threshold) {
  ReportSummary s;
  for (const auto& r : rows) {
    if (r.converged && std::isfinite(r.abs_err_ln)) {
      s.max_abs_err_ln = std::max(s.max_abs_err_ln, r.abs_err_ln);
    }
    // Written so that a NaN error counts as a failure.
    if (!r.converged || !(r.abs_err_ln <= threshold)) ++s.failures;
  }
  return s;
}

Report build_verify_report(std::size_t n_max, const QuadConfig& cfg,
                           double threshold, std::string generated_at) {
  Report report;
  report.generated_at = std::move(generated_at);
  report.config = cfg;
  report.threshold = threshold;
  report.rows = compare_representations(n_max, cfg);
  report.summary = summarize(report.rows, threshold);
  return report;
}

json to_json(const RepresentationResult& row) {
  json j = json::object();
  j["n"] = row.n;
  j["method"] = std::string(to_string(row.method));
  j["ln_value"] = row.ln_value;
  j["exact_ln"] = row.exact_ln;
  j["abs_err_ln"] = row.abs_err_ln;
  j["quad_error_estimate"] = row.quad_error_estimate;
  j["evaluations"] = row.evaluations;
  j["converged"] = row.converged;
  return j;
}

json to_json(const SeriesResult& s) {
  return json{{"rule", std::string(to_string(s.rule))},
              {"partial_sum", s.partial_sum},
              {"terms_used", s.terms_used},
              {"tail_bound", s.tail_bound},
              {"certified_value", s.certified_value},
              {"target", s.target},
              {"abs_err", s.abs_err},
              {"converged", s.converged}};
}

json to_json(const GlaisherResult& g) {
  return json{{"integral_value", g.integral_value},
              {"ln_A", g.ln_A},
              {"oracle_ln_A", g.oracle_ln_A},
              {"abs_err", g.abs_err},
              {"quad_error_estimate", g.quad_error_estimate},
              {"converged", g.converged}};
}

json to_json(const Report& report) {
  json rows = json::array();
  for (const auto& r : report.rows) rows.push_back(to_json(r));
  json series = json::array();
  for (const auto& s : report.series) series.push_back(to_json(s));
  return json{
      {"schema_version", report.schema_version},
      {"generated_at", report.generated_at},
      {"config",
       {{"abs_tol", report.config.abs_tol},
        {"rel_tol", report.config.rel_tol},
        {"max_subdivisions", report.config.max_subdivisions},
        {"transform", std::string(to_string(report.config.transform))}}},
      {"threshold", report.threshold},
      {"rows", std::move(rows)},
      {"series", std::move(series)},
      {"glaisher", report.glaisher ? to_json(*report.glaisher) : json(nullptr)},
      {"summary",
       {{"max_abs_err_ln", report.summary.max_abs_err_ln},
        {"failures", report.summary.failures}}}};
}

Report report_from_json(const json& j) {
  Report r;
  r.schema_version = j.at("schema_version").get<std::string>();
  if (r.schema_version != kSchemaVersion) {
    throw std::invalid_argument("report: unsupported schema_version " +
                                r.schema_version);
  }
  r.generated_at = j.at("generated_at").get<std::string>();
  const json& cfg = j.at("config");
  r.config.abs_tol = cfg.at("abs_tol").get<double>();
  r.config.rel_tol = cfg.at("rel_tol").get<double>();
  r.config.max_subdivisions = cfg.at("max_subdivisions").get<std::size_t>();
  const auto transform = parse_transform(cfg.at("transform").get<std::string>());
  if (!transform) throw std::invalid_argument("report: unknown transform");
  r.config.transform = *transform;
  r.threshold = j.at("threshold").get<double>();
  for (const auto& row : j.at("rows")) r.rows.push_back(row_from_json(row));
  for (const auto& s : j.at("series")) r.series.push_back(series_from_json(s));
  if (!j.at("glaisher").is_null()) r.glaisher = glaisher_from_json(j.at("glaisher"));
  r.summary.max_abs_err_ln = j.at("summary").at("max_abs_err_ln").get<double>();
  r.summary.failures = j.at("summary").at("failures").get<std::size_t>();
  return r;
}

std::string format_real(double x) { return fmt::format("{:.17g}", x); }

std::string rows_to_csv(const std::vector<RepresentationResult>& rows) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += fmt::format("{},{},{},{},{},{},{},{}\n", r.n, to_string(r.method),
                       format_real(r.ln_value), format_real(r.exact_ln),
                       format_real(r.abs_err_ln),
                       format_real(r.quad_error_estimate), r.evaluations,
                       r.converged ? "true" : "false");
  }
  return out;
}

std::string row_to_text(const RepresentationResult& r) {
  std::string line = fmt::format(
      "n={} method={} ln_value={} exact_ln={} abs_err_ln={} "
      "quad_error_estimate={} evaluations={} converged={}",
      r.n, to_string(r.method), format_real(r.ln_value),
      format_real(r.exact_ln), format_real(r.abs_err_ln),
      format_real(r.quad_error_estimate), r.evaluations,
      r.converged ? "true" : "false");
  if (outside_hypothesis(r)) line += " (n = 0 is outside the n >= 1 hypothesis)";
  return line;
}

std::string report_to_text(const Report& report) {
  std::string out = fmt::format(
      "schema_version {}\ngenerated_at {}\nconfig abs_tol={} rel_tol={} "
      "max_subdivisions={} transform={}\nthreshold {}\n",
      report.schema_version, report.generated_at,
      format_real(report.config.abs_tol), format_real(report.config.rel_tol),
      report.config.max_subdivisions, to_string(report.config.transform),
      format_real(report.threshold));
  for (const auto& r : report.rows) out += row_to_text(r) + '\n';
  for (const auto& s : report.series) out += series_to_text(s);
  if (report.glaisher) out += glaisher_to_text(*report.glaisher);
  out += fmt::format("summary max_abs_err_ln={} failures={}\n",
                     format_real(report.summary.max_abs_err_ln),
                     report.summary.failures);
  return out;
}

std::string series_to_text(const SeriesResult& s) {
  return fmt::format(
      "rule {}\npartial_sum {}\nterms_used {}\ntail_bound {}\n"
      "certified_value {}\ntarget {}\nabs_err {}\nconverged {}\n",
      to_string(s.rule), format_real(s.partial_sum), s.terms_used,
      format_real(s.tail_bound), format_real(s.certified_value),
      format_real(s.target), format_real(s.abs_err),
      s.converged ? "true" : "false");
}

std::string glaisher_to_text(const GlaisherResult& g) {
  return fmt::format(
      "integral_value {}\nln_A {}\noracle_ln_A {}\nabs_err {}\n"
      "quad_error_estimate {}\nconverged {}\n",
      format_real(g.integral_value), format_real(g.ln_A),
      format_real(g.oracle_ln_A), format_real(g.abs_err),
      format_real(g.quad_error_estimate), g.converged ? "true" : "false");
}

KernelSpec kernel_by_name(std::string_view name, std::size_t n) {
  const double x = static_cast<double>(n);
  if (name == "malmsten") return malmsten_catalan_kernel(n);
  if (name == "binet") return binet_catalan_kernel(n);
  if (name == "difference") return log_gamma_difference_kernel(n);
  if (name == "log-gamma") return malmsten_log_gamma_kernel(x);
  if (name == "theta") return binet_theta_kernel(x);
  throw std::invalid_argument("unknown kernel '" + std::string(name) + "'");
}

std::string dump_kernel_csv(const KernelSpec& kernel, double t_min,
                            double t_max, std::size_t points) {
  if (!(t_min >= 0.0) || !(t_max > t_min) || !std::isfinite(t_max)) {
    throw std::invalid_argument("dump-kernel: need 0 <= t_min < t_max");
  }
  if (points < 2) throw std::invalid_argument("dump-kernel: need points >= 2");

  std::vector<double> grid;
  grid.reserve(points);
  double lo = t_min;
  std::size_t log_points = points;
  if (t_min == 0.0) {
    grid.push_back(0.0);
    lo = t_max * 1e-10;
    --log_points;
  }
  if (log_points == 1) {
    grid.push_back(t_max);
  } else {
    const double ratio = std::log(t_max / lo);
    for (std::size_t i = 0; i < log_points; ++i) {
      const double frac =
          static_cast<double>(i) / static_cast<double>(log_points - 1);
      grid.push_back(i + 1 == log_points ? t_max : lo * std::exp(ratio * frac));
    }
  }

  std::string out = "t,value\n";
  for (double t : grid) {
    out += fmt::format("{},{}\n", format_real(t), format_real(kernel.integrand(t)));
  }
  return out;
}

}  // namespace catalan
