#pragma once

// Exact integers/rationals and the number-theoretic primitives used by the
// series and closed-form code: Jacobi/Kronecker symbols, factorization and
// the square-free decomposition m = b*u^2.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace eulerclass {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Inverse of to_string. Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// Jacobi symbol (a/n) for odd n >= 1. Any integer a is accepted; negative a
/// follows from (-1/n) = (-1)^((n-1)/2). (a/1) = 1 for every a, including 0.
/// Throws std::invalid_argument for even or nonpositive n.
int jacobi(std::int64_t a, std::int64_t n);
int jacobi(const Integer& a, const Integer& n);

/// Kronecker extension of the Jacobi symbol to any n >= 1 (needed for the
/// Gauss-sum expansion, whose summation index runs over even values too).
int kronecker(std::int64_t a, std::int64_t n);

struct PrimePower {
  std::uint64_t prime = 0;
  int exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

bool is_prime(std::uint64_t n);

/// Prime factorization in increasing prime order. Trial division, then
/// Miller-Rabin (deterministic for 64-bit) and Pollard-Brent on the cofactor.
/// Throws std::invalid_argument for n <= 0.
std::vector<PrimePower> factor(std::int64_t n);

bool is_squarefree(std::int64_t n);

/// m = b * u^2 with b square-free, plus the character data of the odd primes
/// of u that drive the composite expansion.
struct SquareFreeDecomposition {
  std::int64_t m = 1;
  std::int64_t b = 1;
  std::int64_t u = 1;
  std::vector<std::int64_t> odd_primes;  // distinct odd primes of u, increasing
  std::vector<int> eps_c;                // (-b/u_i)
  std::vector<int> eps_d;                // (b/u_i)
  Rational k_b;                          // 1/2 if b == 1, else 1
};

SquareFreeDecomposition squarefree_decompose(std::int64_t m);

/// True when m is 1 mod 4, or 8 or 12 mod 16, and no odd prime square
/// divides m. Negative m allowed.
bool satisfies_landau_hypotheses(std::int64_t m);

/// |(m/l) - m^{-1/2} * sum_{r=1}^{|m|} (m/r) e^{2 pi i l r/|m|}| in double
/// precision, with the principal square root (i*sqrt|m| for m < 0).
/// Throws std::invalid_argument if m fails satisfies_landau_hypotheses or l
/// is not a positive odd integer.
double landau_residual(std::int64_t m, std::int64_t l);

}  // namespace eulerclass
