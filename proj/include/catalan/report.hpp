#pragma once

// Machine-readable verification reports and integrand dumps for the CLI.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "catalan/constants_series.hpp"
#include "catalan/gamma_kernel.hpp"
#include "catalan/quadrature.hpp"
#include "catalan/representations.hpp"

namespace catalan {

inline constexpr std::string_view kSchemaVersion = "1";
inline constexpr double kDefaultVerifyThreshold = 1e-8;

enum class OutputFormat { text, csv, json };
std::optional<OutputFormat> parse_format(std::string_view name);

struct ReportSummary {
  double max_abs_err_ln = 0.0;  // over converged rows
  std::size_t failures = 0;     // not converged, or abs_err_ln > threshold

  friend bool operator==(const ReportSummary&, const ReportSummary&) = default;
};

struct Report {
  std::string schema_version{kSchemaVersion};
  std::string generated_at;
  QuadConfig config;
  double threshold = kDefaultVerifyThreshold;
  std::vector<RepresentationResult> rows;
  std::vector<SeriesResult> series;
  std::optional<GlaisherResult> glaisher;
  ReportSummary summary;
};

bool operator==(const QuadConfig& a, const QuadConfig& b);
bool operator==(const Report& a, const Report& b);

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

ReportSummary summarize(const std::vector<RepresentationResult>& rows,
                        double threshold);

/// Runs compare_representations and fills in the summary.
Report build_verify_report(std::size_t n_max, const QuadConfig& cfg,
                           double threshold, std::string generated_at);

nlohmann::json to_json(const RepresentationResult& row);
nlohmann::json to_json(const SeriesResult& s);
nlohmann::json to_json(const GlaisherResult& g);
nlohmann::json to_json(const Report& report);
Report report_from_json(const nlohmann::json& j);

inline constexpr std::string_view kCsvHeader =
    "n,method,ln_value,exact_ln,abs_err_ln,quad_error_estimate,evaluations,"
    "converged";

/// Header plus one LF-terminated line per row.
std::string rows_to_csv(const std::vector<RepresentationResult>& rows);
std::string row_to_text(const RepresentationResult& row);
std::string report_to_text(const Report& report);
std::string series_to_text(const SeriesResult& s);
std::string glaisher_to_text(const GlaisherResult& g);

/// %.17g, independent of the global locale.
std::string format_real(double x);

/// Kernel named on the command line: malmsten, binet, difference,
/// log-gamma (Malmsten ln Gamma(x + 1) integrand) or theta.
/// Throws std::invalid_argument for an unknown name.
KernelSpec kernel_by_name(std::string_view name, std::size_t n);

/// CSV "t,value" on a log-spaced grid of `points` abscissae from t_min to
/// t_max. With t_min = 0 the first row is t = 0 (the origin limit) and the
/// rest are log-spaced from t_max * 1e-10. Values go through the origin
/// guard. Throws std::invalid_argument on a bad range or points < 2.
std::string dump_kernel_csv(const KernelSpec& kernel, double t_min,
                            double t_max, std::size_t points);

}  // namespace catalan
