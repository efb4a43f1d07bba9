#include "eulerclass/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace eulerclass {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t order) {
  TruncatedSeries s(order);
  s[0] = c;
  return s;
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q == 0; });
}

namespace {

// Shared body of cos_series / sin_series: walks x^n/n! * freq^n and keeps
// the entries of one parity with alternating sign.
TruncatedSeries trig_series(std::int64_t freq, std::size_t order, std::size_t parity) {
  if (freq < 0) throw std::invalid_argument("trig series frequency must be nonnegative");
  TruncatedSeries s(order);
  Rational term(1);
  const Integer f(static_cast<long>(freq));
  for (std::size_t n = 0; n <= order; ++n) {
    if (n > 0) {
      term *= f;
      term /= static_cast<unsigned long>(n);
    }
    if (n % 2 == parity) s[n] = ((n / 2) % 2 == 0) ? term : Rational(-term);
  }
  return s;
}

}  // namespace

TruncatedSeries cos_series(std::int64_t freq, std::size_t order) { return trig_series(freq, order, 0); }

TruncatedSeries sin_series(std::int64_t freq, std::size_t order) { return trig_series(freq, order, 1); }

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order(), b.order()));
  for (std::size_t n = 0; n <= out.order(); ++n) out[n] = a[n] + b[n];
  return out;
}

TruncatedSeries scale(const TruncatedSeries& a, const Rational& c) {
  TruncatedSeries out(a.order());
  for (std::size_t n = 0; n <= a.order(); ++n) out[n] = a[n] * c;
  return out;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order(), b.order()));
  Rational acc;
  for (std::size_t n = 0; n <= out.order(); ++n) {
    acc = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      if (a[k] == 0 || b[n - k] == 0) continue;
      acc += a[k] * b[n - k];
    }
    out[n] = acc;
  }
  return out;
}

TruncatedSeries reciprocal(const TruncatedSeries& a) {
  if (a[0] == 0) throw std::domain_error("reciprocal of a series with zero constant term");
  TruncatedSeries out(a.order());
  const Rational inv0 = 1 / a[0];
  out[0] = inv0;
  Rational acc;
  for (std::size_t n = 1; n <= a.order(); ++n) {
    acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (a[k] == 0 || out[n - k] == 0) continue;
      acc += a[k] * out[n - k];
    }
    out[n] = -inv0 * acc;
  }
  return out;
}

TruncatedSeries dilate(const TruncatedSeries& a, std::int64_t t) {
  if (t < 1) throw std::invalid_argument("dilate: factor must be positive");
  TruncatedSeries out(a.order());
  Integer power(1);
  const Integer factor(static_cast<long>(t));
  for (std::size_t n = 0; n <= a.order(); ++n) {
    out[n] = a[n] * power;
    power *= factor;
  }
  return out;
}

Rational egf_coefficient(const TruncatedSeries& a, std::size_t n) {
  if (n > a.order()) throw std::out_of_range("egf_coefficient: index beyond truncation order");
  return a[n] * factorial(static_cast<unsigned>(n));
}

}  // namespace eulerclass
