#include "eulerclass/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace eulerclass {

namespace {

double inverse_power(double l, int s) {
  const double inv = 1.0 / l;
  double r = inv;
  for (int i = 1; i < s; ++i) r *= inv;
  return r;
}

// chi is evaluated on odd l only; period 4m covers both (m/l) and (-m/l).
LValue block_sum(std::int64_t numerator, std::int64_t m, int s, std::int64_t blocks) {
  if (m < 1) throw std::invalid_argument("dirichlet: m must be positive");
  if (s < 1) throw std::invalid_argument("dirichlet: s must be positive");
  if (blocks < 1) throw std::invalid_argument("dirichlet: blocks must be positive");

  const std::int64_t period = 4 * m;
  std::vector<int> chi(static_cast<std::size_t>(2 * m));
  for (std::int64_t i = 0; i < 2 * m; ++i) chi[static_cast<std::size_t>(i)] = jacobi(numerator, 2 * i + 1);
  const auto mass = std::accumulate(chi.begin(), chi.end(), 0L);
  if (mass != 0 && s == 1) throw std::domain_error("dirichlet: principal character diverges at s = 1");

  double total = 0.0;
  double previous = 0.0;
  for (std::int64_t b = 0; b < blocks; ++b) {
    double block = 0.0;
    const auto base = static_cast<double>(b * period);
    for (std::size_t i = 0; i < chi.size(); ++i) {
      if (chi[i] == 0) continue;
      block += chi[i] * inverse_power(base + static_cast<double>(2 * i + 1), s);
    }
    previous = total;
    total += block;
  }

  const auto p = static_cast<double>(period);
  const auto tail_bound = [&](double x) {
    const double scale = mass == 0 ? 0.5 : 1.0;
    return scale * (p * std::pow(x, -s) + s * p * p * std::pow(x, -s - 1));
  };
  const double end = static_cast<double>(blocks) * p;

  LValue out;
  out.terms_used = blocks * 2 * m;
  if (mass != 0) {
    // density of chi per unit length times the tail integral of t^{-s}
    out.value = total + (static_cast<double>(mass) / p) * std::pow(end, 1 - s) / (s - 1);
    out.error_bound = tail_bound(end);
  } else if (s == 1 && blocks >= 2) {
    out.value = 0.5 * (total + previous);
    out.error_bound = tail_bound(end - p) + 0.5 * std::abs(total - previous);
  } else {
    out.value = total;
    out.error_bound = tail_bound(end);
  }
  return out;
}

// sin or cos of 2 pi r / q on r in [0, q), exact zeros where they belong.
std::vector<double> angle_table(std::int64_t q, bool sine) {
  std::vector<double> table(static_cast<std::size_t>(q));
  for (std::int64_t r = 0; r < q; ++r) {
    double v;
    if (sine)
      v = (2 * r) % q == 0 ? 0.0 : std::sin(2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(q));
    else
      v = (4 * r == q || 4 * r == 3 * q) ? 0.0
                                          : std::cos(2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(q));
    table[static_cast<std::size_t>(r)] = v;
  }
  return table;
}

double fourier_sum(int exponent, const Rational& y, std::int64_t terms, bool sine) {
  if (terms < 1) throw std::invalid_argument("fourier: need at least one term");
  const auto q = y.get_den().get_si();
  auto a = mpz_class(y.get_num() % y.get_den()).get_si();
  if (a < 0) a += q;
  const auto table = angle_table(q, sine);
  double sum = 0.0;
  for (std::int64_t k = 0; k < terms; ++k) {
    const auto odd = 2 * k + 1;
    const auto r = static_cast<std::size_t>((odd % q) * a % q);
    if (table[r] == 0.0) continue;
    sum += table[r] * inverse_power(static_cast<double>(odd), exponent);
  }
  return sum;
}

}  // namespace

LValue l_plus(std::int64_t m, int s, std::int64_t blocks) { return block_sum(-m, m, s, blocks); }

LValue l_minus(std::int64_t m, int s, std::int64_t blocks) {
  if (s < 2) throw std::invalid_argument("l_minus: s must be at least 2");
  return block_sum(m, m, s, blocks);
}

std::int64_t default_blocks(std::int64_t m, int s) {
  if (m < 1 || s < 1) throw std::invalid_argument("default_blocks: m and s must be positive");
  const std::int64_t cap = std::max<std::int64_t>(1, kMaxSummands / (2 * m));
  if (s == 1) return cap;
  const double period = 4.0 * static_cast<double>(m);
  const double end = std::pow(period * 1e12, 1.0 / s);
  const auto needed = static_cast<std::int64_t>(std::ceil(end / period)) + 1;
  return std::clamp<std::int64_t>(needed, 1, cap);
}

double fourier_s(int n, const Rational& y, std::int64_t terms) {
  if (n < 0) throw std::invalid_argument("fourier_s: n must be nonnegative");
  return fourier_sum(2 * n + 1, y, terms, true);
}

double fourier_c(int n, const Rational& y, std::int64_t terms) {
  if (n < 1) throw std::invalid_argument("fourier_c: n must be positive");
  return fourier_sum(2 * n, y, terms, false);
}

FourierCombination lemma_combination(std::int64_t m, FourierKind kind) {
  if (m <= 1 || !is_squarefree(m)) throw std::invalid_argument("lemma_combination: m must be square-free and > 1");
  FourierCombination out{m, kind, {}, {}};
  auto push = [&](int eps, std::int64_t num, std::int64_t den) {
    if (eps == 0) return;
    out.eps.push_back(eps);
    out.y.push_back(make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den))));
  };
  // half range: k = 1..(m-1)/2 with (k/m), y = k/m
  auto half_range = [&] {
    for (std::int64_t k = 1; k <= (m - 1) / 2; ++k) push(jacobi(k, m), k, m);
  };
  // odd k < m with (top/k), y = k/4m
  auto odd_range = [&](std::int64_t top) {
    for (std::int64_t k = 1; k < m; k += 2) push(jacobi(top, k), k, 4 * m);
  };
  const bool sine = kind == FourierKind::Sine;
  switch (m % 4) {
    case 3:
      sine ? half_range() : odd_range(m);
      break;
    case 1:
      sine ? odd_range(-m) : half_range();
      break;
    default:
      odd_range(sine ? -m : m);
      break;
  }
  return out;
}

double evaluate(const FourierCombination& combination, int n, std::int64_t terms) {
  double sum = 0.0;
  for (std::size_t k = 0; k < combination.eps.size(); ++k) {
    const double f = combination.kind == FourierKind::Sine ? fourier_s(n, combination.y[k], terms)
                                                           : fourier_c(n, combination.y[k], terms);
    sum += combination.eps[k] * f;
  }
  return 2.0 / std::sqrt(static_cast<double>(combination.m)) * sum;
}

}  // namespace eulerclass
