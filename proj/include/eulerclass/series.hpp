#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "eulerclass/arith.hpp"

namespace eulerclass {

/// Exact Taylor coefficients a_0..a_N of sum a_n x^n. Binary operations
/// truncate to the smaller order of their operands.
class TruncatedSeries {
 public:
  /// Zero series of the given order.
  explicit TruncatedSeries(std::size_t order);
  /// Throws std::invalid_argument on an empty coefficient list.
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  static TruncatedSeries constant(const Rational& c, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  std::span<const Rational> coefficients() const { return coeffs_; }

  const Rational& operator[](std::size_t n) const { return coeffs_[n]; }
  Rational& operator[](std::size_t n) { return coeffs_[n]; }

  bool is_zero() const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// cos(freq * x), a_{2k} = (-1)^k freq^{2k} / (2k)!.
TruncatedSeries cos_series(std::int64_t freq, std::size_t order);
/// sin(freq * x), a_{2k+1} = (-1)^k freq^{2k+1} / (2k+1)!.
TruncatedSeries sin_series(std::int64_t freq, std::size_t order);

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(const TruncatedSeries& a, const Rational& c);
/// Cauchy product truncated at min(order(a), order(b)).
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// 1/a to the order of a. Throws std::domain_error when a_0 == 0.
TruncatedSeries reciprocal(const TruncatedSeries& a);

/// x -> f(t*x): a_n t^n. Throws std::invalid_argument for t < 1.
TruncatedSeries dilate(const TruncatedSeries& a, std::int64_t t);

/// n! * a_n. Throws std::out_of_range when n exceeds the order.
Rational egf_coefficient(const TruncatedSeries& a, std::size_t n);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, scale(b, -1)); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }
inline TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a) { return scale(a, c); }

}  // namespace eulerclass
