// Runs the installed binary end to end and checks exit codes and output.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun cli(const std::string& args) {
  const std::string cmd = std::string(CATALAN_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST(Cli, Exact) {
  EXPECT_EQ(first_line(cli("exact 3").out), "5");
  EXPECT_EQ(first_line(cli("exact 0").out), "1");
  EXPECT_EQ(first_line(cli("exact 10").out), "16796");
  const CliRun r = cli("exact 5");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "42");
  const auto ln_at = r.out.find("ln_C ");
  ASSERT_NE(ln_at, std::string::npos);
  EXPECT_NEAR(std::stod(r.out.substr(ln_at + 5)), std::log(42.0), 1e-15);
  EXPECT_EQ(first_line(cli("exact 100").out),
            "896519947090131496687170070074100632420837521538745909320");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("exact").code, 2);
  EXPECT_EQ(cli("exact -3").code, 2);
  EXPECT_EQ(cli("exact abc").code, 2);
  EXPECT_EQ(cli("rep euler 3").code, 2);
  EXPECT_EQ(cli("rep penson-moment 201").code, 2);
  EXPECT_EQ(cli("rep malmsten 3 --transform simpson").code, 2);
  EXPECT_EQ(cli("verify --format xml").code, 2);
  EXPECT_EQ(cli("sumrule cubic").code, 2);
  EXPECT_EQ(cli("sumrule plain --tol 0").code, 2);
  EXPECT_EQ(cli("dump-kernel theta 0").code, 2);
  EXPECT_EQ(cli("dump-kernel malmsten 1 --points 1").code, 2);
}

TEST(Cli, Rep) {
  const CliRun m = cli("rep malmsten 5 --format json");
  EXPECT_EQ(m.code, 0);
  const auto j = nlohmann::json::parse(m.out);
  EXPECT_NEAR(j.at("ln_value").get<double>(), std::log(42.0), 1e-10);
  EXPECT_EQ(cli("rep gamma 0").code, 0);
  const auto g = nlohmann::json::parse(cli("rep gamma 0 --format json").out);
  EXPECT_NEAR(g.at("ln_value").get<double>(), 0.0, 1e-14);
  const auto p = nlohmann::json::parse(cli("rep penson-mellin 3 --format json").out);
  EXPECT_NEAR(p.at("ln_value").get<double>(), std::log(5.0), 1e-9);
  // Starved quadrature cannot converge.
  EXPECT_EQ(cli("rep binet 5 --max-subdivisions 1 --abs-tol 1e-16 --rel-tol 1e-16").code,
            1);
}

TEST(Cli, VerifyCsv) {
  const CliRun r = cli("verify --n-max 0 --format csv");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out), 6u);
  EXPECT_EQ(first_line(r.out),
            "n,method,ln_value,exact_ln,abs_err_ln,quad_error_estimate,evaluations,"
            "converged");
}

TEST(Cli, VerifyJson) {
  const CliRun r = cli("verify --n-max 50 --format json");
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_LE(j.at("summary").at("max_abs_err_ln").get<double>(), 1e-8);
  EXPECT_EQ(j.at("summary").at("failures").get<int>(), 0);
  EXPECT_EQ(j.at("rows").size(), 255u);
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(cli("verify --n-max 5").code, 0);
  EXPECT_EQ(cli("verify --n-max 2 --tol 1e-300").code, 1);
  EXPECT_EQ(cli("verify --n-max 1 -o /nonexistent-dir/report.json").code, 3);
}

TEST(Cli, VerifyIsDeterministic) {
  auto strip = [](const std::string& s) {
    auto j = nlohmann::json::parse(s);
    j.erase("generated_at");
    return j;
  };
  const auto a = strip(cli("verify --n-max 8 --format json").out);
  const auto b = strip(cli("verify --n-max 8 --format json").out);
  EXPECT_EQ(a, b);
}

TEST(Cli, VerifyWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "catalan_cli_verify.json";
  std::filesystem::remove(path);
  EXPECT_EQ(cli("verify --n-max 1 --format json -o " + path.string()).code, 0);
  EXPECT_TRUE(std::filesystem::exists(path));
  std::filesystem::remove(path);
}

TEST(Cli, SumRules) {
  const CliRun plain = cli("sumrule plain --tol 1e-6 --format json");
  EXPECT_EQ(plain.code, 0);
  EXPECT_LE(nlohmann::json::parse(plain.out).at("abs_err").get<double>(), 2e-6);
  EXPECT_EQ(cli("sumrule weighted --tol 1e-6").code, 0);
  EXPECT_EQ(cli("sumrule odd-weight --tol 1e-30 --max-terms 100000").code, 1);
}

TEST(Cli, Glaisher) {
  const CliRun r = cli("glaisher --format json");
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_LE(j.at("abs_err").get<double>(), 1e-8);
  EXPECT_GT(j.at("ln_A").get<double>(), 0.0);
  EXPECT_LT(j.at("integral_value").get<double>(), 0.0);
}

TEST(Cli, DumpKernel) {
  const CliRun r = cli("dump-kernel malmsten 1 --t-min 0 --t-max 20 --points 11");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out), 12u);
  EXPECT_NE(r.out.find("\n0,-1.125\n"), std::string::npos);
}
