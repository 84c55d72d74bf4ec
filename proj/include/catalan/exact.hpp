#pragma once

// Exact Catalan numbers and the combinatorial counts that anchor every
// floating-point route in this library.

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace catalan {

/// Arbitrary-precision nonnegative integer used for exact counts.
using BigCount = boost::multiprecision::cpp_int;

/// C_n = binomial(2n, n) / (n + 1), computed exactly.
BigCount catalan_exact(std::size_t n);

/// Convolution recurrence C_{k+1} = sum_i C_i C_{k-i}. O(n^2) big-int products.
BigCount catalan_segner(std::size_t n);

/// Terminating hypergeometric sum 2F1(1-n, -n; 2; 1) in exact rationals.
BigCount catalan_hypergeometric(std::size_t n);

inline constexpr std::size_t kMaxParenthesesPairs = 14;
inline constexpr std::size_t kMinPolygonSides = 3;
inline constexpr std::size_t kMaxPolygonSides = 16;

/// Counts Dyck words with n pairs by explicit backtracking.
/// Throws std::out_of_range for n > kMaxParenthesesPairs.
BigCount count_balanced_parentheses(std::size_t n);

/// Counts triangulations of a convex polygon by DP over the edge (0, sides-1).
/// Throws std::out_of_range unless 3 <= sides <= 16.
BigCount count_polygon_triangulations(std::size_t sides);

/// Like std::frexp: value ~ mantissa * 2^exponent, mantissa in [0.5, 1),
/// correctly rounded from the top 64 bits.
double frexp_big(const BigCount& value, std::int64_t& exponent);

/// ln of a positive big integer from its bit length and top 64 bits.
double ln_big(const BigCount& value);

/// ln C_n from the exact value; no floating-point factorials involved.
double ln_exact(std::size_t n);

/// Immutable table of C_0..C_max_n built with the exact-division recurrence
/// (n + 2) C_{n+1} = 2 (2n + 1) C_n.
class CatalanTable {
 public:
  explicit CatalanTable(std::size_t max_n);

  std::size_t max_n() const { return values_.size() - 1; }
  const BigCount& operator[](std::size_t n) const { return values_.at(n); }
  const std::vector<BigCount>& values() const { return values_; }

 private:
  std::vector<BigCount> values_;
};

}  // namespace catalan
