#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "catalan/report.hpp"

namespace {

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(Report, JsonRoundTrip) {
  catalan::QuadConfig cfg;
  cfg.abs_tol = 1e-13;
  cfg.transform = catalan::Transform::double_exponential;
  catalan::Report r = catalan::build_verify_report(3, cfg, 1e-8, "2026-01-01T00:00:00Z");
  r.series.push_back(catalan::stewart_sum_plain(1e-4));
  r.glaisher = catalan::glaisher_from_integral();
  const nlohmann::json j = catalan::to_json(r);
  const catalan::Report back = catalan::report_from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(back, r);
  EXPECT_EQ(j.at("schema_version"), "1");
  EXPECT_EQ(j.at("rows").size(), 20u);
}

TEST(Report, JsonRowFieldsAreExact) {
  const auto row = catalan::catalan_malmsten(4);
  const nlohmann::json j = catalan::to_json(row);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  const std::vector<std::string> expected = {
      "abs_err_ln", "converged", "evaluations", "exact_ln",
      "ln_value",   "method",    "n",           "quad_error_estimate"};
  EXPECT_EQ(keys, expected);
  EXPECT_EQ(j.at("method"), "malmsten");
}

TEST(Report, RejectsOtherSchemaVersions) {
  nlohmann::json j = catalan::to_json(catalan::build_verify_report(0, {}, 1e-8, "x"));
  j["schema_version"] = "2";
  EXPECT_ANY_THROW(catalan::report_from_json(j));
}

TEST(Report, SummaryCountsFailures) {
  std::vector<catalan::RepresentationResult> rows(4);
  rows[0].converged = true;
  rows[0].abs_err_ln = 1e-12;
  rows[1].converged = true;
  rows[1].abs_err_ln = 1e-6;
  rows[2].converged = false;
  rows[2].abs_err_ln = 1e-14;
  rows[3].converged = true;
  rows[3].abs_err_ln = std::numeric_limits<double>::quiet_NaN();
  const auto s = catalan::summarize(rows, 1e-8);
  EXPECT_EQ(s.failures, 3u);
  EXPECT_EQ(s.max_abs_err_ln, 1e-6);
}

TEST(Report, VerifySummaryMatchesRows) {
  const auto r = catalan::build_verify_report(5, {}, 1e-8, "t");
  EXPECT_EQ(r.summary.failures, 0u);
  double max_err = 0.0;
  for (const auto& row : r.rows) max_err = std::max(max_err, row.abs_err_ln);
  EXPECT_EQ(r.summary.max_abs_err_ln, max_err);
  const auto strict = catalan::build_verify_report(5, {}, 0.0, "t");
  std::size_t nonzero = 0;
  for (const auto& row : strict.rows) nonzero += row.abs_err_ln > 0.0 ? 1 : 0;
  EXPECT_EQ(strict.summary.failures, nonzero);
}

TEST(Report, CsvShape) {
  const auto rows = catalan::compare_representations(2);
  const auto csv = lines(catalan::rows_to_csv(rows));
  ASSERT_EQ(csv.size(), 16u);
  EXPECT_EQ(csv[0], catalan::kCsvHeader);
  for (std::size_t i = 1; i < csv.size(); ++i) {
    EXPECT_EQ(std::count(csv[i].begin(), csv[i].end(), ','), 7) << csv[i];
  }
  EXPECT_EQ(csv[1].rfind("0,gamma_closed_form,", 0), 0u);
}

TEST(Report, TextMarksExtensionRow) {
  const auto text = catalan::row_to_text(catalan::catalan_malmsten(0));
  EXPECT_NE(text.find("hypothesis"), std::string::npos);
  EXPECT_EQ(catalan::row_to_text(catalan::catalan_malmsten(2)).find("hypothesis"),
            std::string::npos);
}

TEST(Report, FormatRealRoundTrips) {
  for (double x : {0.1, 1.0 / 3.0, 131.13811556443723, 1e-300, -2.5}) {
    EXPECT_EQ(std::stod(catalan::format_real(x)), x);
  }
}

TEST(DumpKernel, GridAndValues) {
  const auto k = catalan::kernel_by_name("malmsten", 1);
  const auto out = lines(catalan::dump_kernel_csv(k, 1e-8, 40, 50));
  ASSERT_EQ(out.size(), 51u);
  EXPECT_EQ(out[0], "t,value");
  EXPECT_NEAR(std::stod(out[1].substr(out[1].find(',') + 1)), -9.0 / 8, 1e-7);
  EXPECT_EQ(out.back().substr(0, out.back().find(',')), "40");
}

TEST(DumpKernel, ZeroStartUsesOriginLimit) {
  const auto k = catalan::kernel_by_name("malmsten", 0);
  const auto out = lines(catalan::dump_kernel_csv(k, 0, 10, 5));
  ASSERT_EQ(out.size(), 6u);
  EXPECT_EQ(out[1], "0,0.375");
}

TEST(DumpKernel, Errors) {
  const auto k = catalan::kernel_by_name("binet", 2);
  EXPECT_THROW(catalan::dump_kernel_csv(k, 1, 1, 10), std::invalid_argument);
  EXPECT_THROW(catalan::dump_kernel_csv(k, -1, 1, 10), std::invalid_argument);
  EXPECT_THROW(catalan::dump_kernel_csv(k, 0.1, 1, 1), std::invalid_argument);
  EXPECT_THROW(catalan::kernel_by_name("nope", 1), std::invalid_argument);
  EXPECT_THROW(catalan::kernel_by_name("theta", 0), std::domain_error);
}
