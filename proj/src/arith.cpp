#include "eulerclass/arith.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace eulerclass {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size() || !std::all_of(s.begin() + i, s.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
      throw std::invalid_argument("malformed rational: " + std::string(text));
    return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

int jacobi(std::int64_t a, std::int64_t n) {
  if (n <= 0 || n % 2 == 0) throw std::invalid_argument("jacobi: modulus must be odd and positive");
  a %= n;
  if (a < 0) a += n;
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const auto r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

int jacobi(const Integer& a_in, const Integer& n_in) {
  if (n_in <= 0 || mpz_even_p(n_in.get_mpz_t()))
    throw std::invalid_argument("jacobi: modulus must be odd and positive");
  Integer n = n_in;
  Integer a;
  mpz_mod(a.get_mpz_t(), a_in.get_mpz_t(), n.get_mpz_t());
  int result = 1;
  while (a != 0) {
    const auto twos = mpz_scan1(a.get_mpz_t(), 0);
    a >>= twos;
    const auto r = mpz_fdiv_ui(n.get_mpz_t(), 8);
    if ((twos & 1U) && (r == 3 || r == 5)) result = -result;
    std::swap(a, n);
    if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

int kronecker(std::int64_t a, std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("kronecker: modulus must be positive");
  int result = 1;
  while (n % 2 == 0) {
    n /= 2;
    if (a % 2 == 0) return 0;
    const auto r = ((a % 8) + 8) % 8;
    if (r == 3 || r == 5) result = -result;
  }
  return result * jacobi(a, n);
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % mod);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

// Pollard-Brent; n must be an odd composite.
std::uint64_t find_divisor(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
    std::uint64_t y = 2, x = 2, d = 1, q = 1, ys = 2;
    std::uint64_t r = 1;
    constexpr std::uint64_t batch = 128;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(batch, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        d = std::gcd(q, n);
        k += batch;
      } while (k < r && d == 1);
      r *= 2;
    } while (d == 1);
    if (d == n) {
      do {
        ys = f(ys);
        d = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (d == 1);
    }
    if (d != n) return d;
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  const auto d = find_divisor(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

constexpr std::uint64_t kTrialLimit = 1U << 16;

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    auto x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<PrimePower> factor(std::int64_t n_in) {
  if (n_in <= 0) throw std::invalid_argument("factor: n must be positive");
  auto n = static_cast<std::uint64_t>(n_in);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p < kTrialLimit && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  if (n > 1) {
    if (n < kTrialLimit * kTrialLimit)
      primes.push_back(n);
    else
      factor_into(n, primes);
  }
  std::sort(primes.begin(), primes.end());
  std::vector<PrimePower> out;
  for (auto p : primes) {
    if (!out.empty() && out.back().prime == p)
      ++out.back().exponent;
    else
      out.push_back({p, 1});
  }
  return out;
}

bool is_squarefree(std::int64_t n) {
  const auto f = factor(n);
  return std::all_of(f.begin(), f.end(), [](const PrimePower& pp) { return pp.exponent == 1; });
}

SquareFreeDecomposition squarefree_decompose(std::int64_t m) {
  if (m <= 0) throw std::invalid_argument("squarefree_decompose: m must be positive");
  SquareFreeDecomposition dec;
  dec.m = m;
  for (const auto& [p, e] : factor(m)) {
    const auto prime = static_cast<std::int64_t>(p);
    if (e % 2) dec.b *= prime;
    for (int i = 0; i < e / 2; ++i) dec.u *= prime;
    if (e >= 2 && prime != 2) dec.odd_primes.push_back(prime);
  }
  for (auto p : dec.odd_primes) {
    dec.eps_c.push_back(jacobi(-dec.b, p));
    dec.eps_d.push_back(jacobi(dec.b, p));
  }
  dec.k_b = dec.b == 1 ? Rational(1, 2) : Rational(1);
  return dec;
}

bool satisfies_landau_hypotheses(std::int64_t m) {
  if (m == 0) return false;
  const auto mod4 = ((m % 4) + 4) % 4;
  const auto mod16 = ((m % 16) + 16) % 16;
  if (!(mod4 == 1 || mod16 == 8 || mod16 == 12)) return false;
  const std::int64_t abs_m = m < 0 ? -m : m;
  for (const auto& [p, e] : factor(abs_m)) {
    if (p != 2 && e >= 2) return false;
  }
  return true;
}

double landau_residual(std::int64_t m, std::int64_t l) {
  if (!satisfies_landau_hypotheses(m)) throw std::invalid_argument("landau_residual: m violates the hypotheses");
  if (l <= 0 || l % 2 == 0) throw std::invalid_argument("landau_residual: l must be positive and odd");
  const std::int64_t abs_m = m < 0 ? -m : m;
  std::complex<double> sum{0.0, 0.0};
  for (std::int64_t r = 1; r <= abs_m; ++r) {
    const int chi = kronecker(m, r);
    if (chi == 0) continue;
    // reduce l*r first so the angle stays in [0, 2pi)
    const auto phase = static_cast<double>((l % abs_m) * r % abs_m) / static_cast<double>(abs_m);
    sum += static_cast<double>(chi) * std::polar(1.0, 2.0 * std::numbers::pi * phase);
  }
  const auto root = std::sqrt(std::complex<double>(static_cast<double>(m), 0.0));
  const auto lhs = static_cast<double>(jacobi(m, l));
  return std::abs(lhs - sum / root);
}

}  // namespace eulerclass
