#include "catalan/exact.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace catalan {

namespace mp = boost::multiprecision;

namespace {

BigCount central_binomial(std::size_t n) {
  // binomial(2n, n) via the running product binomial(n + i, i); each
  // intermediate division is exact.
  BigCount b = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    b *= n + i;
    b /= i;
  }
  return b;
}

void extend_dyck(std::size_t open, std::size_t close, std::size_t n,
                 std::uint64_t& count) {
  if (open == n && close == n) {
    ++count;
    return;
  }
  if (open < n) extend_dyck(open + 1, close, n, count);
  if (close < open) extend_dyck(open, close + 1, n, count);
}

}  // namespace

BigCount catalan_exact(std::size_t n) {
  BigCount binom = central_binomial(n);
  BigCount q;
  BigCount r;
  mp::divide_qr(binom, BigCount(n + 1), q, r);
  if (r != 0) {
    throw std::logic_error("binomial(2n, n) not divisible by n + 1 at n = " +
                           std::to_string(n));
  }
  return q;
}

BigCount catalan_segner(std::size_t n) {
  std::vector<BigCount> c(n + 1);
  c[0] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    BigCount s = 0;
    for (std::size_t i = 0; i <= k; ++i) s += c[i] * c[k - i];
    c[k + 1] = std::move(s);
  }
  return c[n];
}

BigCount catalan_hypergeometric(std::size_t n) {
  using Rational = mp::cpp_rational;
  // term_{k+1} / term_k = (k + 1 - n)(k - n) / ((k + 2)(k + 1))
  const auto nn = static_cast<long long>(n);
  Rational term = 1;
  Rational sum = 0;
  for (long long k = 0;; ++k) {
    sum += term;
    if (k >= nn - 1) break;
    term *= Rational((k + 1 - nn) * (k - nn), (k + 2) * (k + 1));
  }
  if (mp::denominator(sum) != 1) {
    throw std::logic_error("hypergeometric Catalan sum is not integral");
  }
  return mp::numerator(sum);
}

BigCount count_balanced_parentheses(std::size_t n) {
  if (n > kMaxParenthesesPairs) {
    throw std::out_of_range("count_balanced_parentheses: n = " +
                            std::to_string(n) + " exceeds " +
                            std::to_string(kMaxParenthesesPairs));
  }
  std::uint64_t count = 0;
  extend_dyck(0, 0, n, count);
  return BigCount(count);
}

BigCount count_polygon_triangulations(std::size_t sides) {
  if (sides < kMinPolygonSides || sides > kMaxPolygonSides) {
    throw std::out_of_range("count_polygon_triangulations: sides = " +
                            std::to_string(sides) + " outside [3, 16]");
  }
  // t[i][j]: triangulations of the sub-polygon on vertices i..j. The edge
  // (i, j) lies in exactly one triangle (i, k, j).
  std::vector<std::vector<BigCount>> t(sides, std::vector<BigCount>(sides, 0));
  for (std::size_t i = 0; i + 1 < sides; ++i) t[i][i + 1] = 1;
  for (std::size_t span = 2; span < sides; ++span) {
    for (std::size_t i = 0; i + span < sides; ++i) {
      const std::size_t j = i + span;
      BigCount s = 0;
      for (std::size_t k = i + 1; k < j; ++k) s += t[i][k] * t[k][j];
      t[i][j] = std::move(s);
    }
  }
  return t[0][sides - 1];
}

double frexp_big(const BigCount& value, std::int64_t& exponent) {
  if (value <= 0) throw std::domain_error("frexp_big: value must be positive");
  const std::size_t top_bit = mp::msb(value);
  std::uint64_t top;
  std::int64_t shift = 0;
  if (top_bit < 64) {
    top = static_cast<std::uint64_t>(value);
  } else {
    shift = static_cast<std::int64_t>(top_bit) - 63;
    top = static_cast<std::uint64_t>(value >> shift);
  }
  int e = 0;
  const double mantissa = std::frexp(static_cast<double>(top), &e);
  exponent = shift + e;
  return mantissa;
}

double ln_big(const BigCount& value) {
  std::int64_t e = 0;
  const double m = frexp_big(value, e);
  return std::log(m) + static_cast<double>(e) * std::numbers::ln2;
}

double ln_exact(std::size_t n) { return ln_big(catalan_exact(n)); }

CatalanTable::CatalanTable(std::size_t max_n) {
  values_.reserve(max_n + 1);
  values_.emplace_back(1);
  for (std::size_t n = 0; n < max_n; ++n) {
    BigCount num = values_.back() * (2 * (2 * n + 1));
    BigCount q;
    BigCount r;
    mp::divide_qr(num, BigCount(n + 2), q, r);
    if (r != 0) throw std::logic_error("CatalanTable: inexact recurrence step");
    values_.push_back(std::move(q));
  }
}

}  // namespace catalan
