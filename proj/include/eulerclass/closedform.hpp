#pragma once

// Closed forms of the exponential generating function
//
//   s_m(x) = c_m(x) + d_m(x) = sum_n s_{m,n} x^n / n!
//
// as finite sums of coeff * cos(a x)/cos(D x) (even part) and
// coeff * sin(a x)/cos(D x) (odd part), for every m >= 1.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eulerclass/arith.hpp"
#include "eulerclass/series.hpp"

namespace eulerclass {

enum class Flavor { Cos, Sin };

/// coeff * flavor(num_freq * x) / cos(den_freq * x)
struct TrigTerm {
  Rational coeff;
  Flavor flavor = Flavor::Cos;
  std::int64_t num_freq = 0;
  std::int64_t den_freq = 1;

  friend bool operator==(const TrigTerm&, const TrigTerm&) = default;
};

struct ClosedForm {
  std::int64_t m = 1;
  std::vector<TrigTerm> c_terms;  // all Cos, sums to c_m(x)
  std::vector<TrigTerm> d_terms;  // all Sin, sums to d_m(x)

  friend bool operator==(const ClosedForm&, const ClosedForm&) = default;
};

/// Sorts by (den_freq, num_freq, flavor), merges like terms, drops zeros.
void canonicalize(std::vector<TrigTerm>& terms);

/// One subset S of the odd primes of u in the composite expansion
///   c_m(x) = sum_S weight * sigma_c * c_b(t x),
///   d_m(x) = sum_S weight * sigma_d * d_b(t x).
struct ExpansionTerm {
  std::vector<std::int64_t> subset;
  std::int64_t t = 1;  // u^2 / prod(S)
  Rational weight;     // (K_b / K_m) * t / u
  int sigma_c = 1;     // prod_{i in S} -(-b/u_i)
  int sigma_d = 1;     // prod_{i in S} -(b/u_i)

  friend bool operator==(const ExpansionTerm&, const ExpansionTerm&) = default;
};

/// coeff * Lambda_{r,p}(x), or coeff * Lambda_{r,p}(-x) when reflected, where
/// Lambda_{r,p}(x) = (cos((r-p)x) + sin(px)) / cos(rx).
struct LambdaTerm {
  Rational coeff;
  std::int64_t r = 1;
  std::int64_t p = 0;
  bool reflected = false;

  friend bool operator==(const LambdaTerm&, const LambdaTerm&) = default;
};

/// Raised when expanded coefficients fail integrality or positivity.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// sec x + tan x.
ClosedForm build_base1();

/// Square-free b > 1, with the c/d split dispatched on b mod 4.
ClosedForm build_squarefree(std::int64_t b);

/// The same s_b(x) assembled as a combination of Lambda_{b,p}, following the
/// three residue-class formulas (b = 1 gives Lambda_{1,1}).
std::vector<LambdaTerm> lambda_combination(std::int64_t b);

ClosedForm from_lambda_terms(std::int64_t m, std::span<const LambdaTerm> terms);

/// Pairs every cos term with the sin term sharing its denominator and
/// complementary numerator. Empty when the form cannot be written that way.
std::optional<std::vector<LambdaTerm>> lambda_decomposition(const ClosedForm& form);

/// Subsets whose character factors are all nonzero, in increasing bitmask
/// order over odd_primes.
std::vector<ExpansionTerm> expansion_terms(const SquareFreeDecomposition& dec);

ClosedForm build(std::int64_t m);

/// Sum of the terms as an exact series, one reciprocal per denominator.
TruncatedSeries expand(std::span<const TrigTerm> terms, std::size_t order);

/// s_{m,0..N}. order 0 selects the default truncation 2N+2; an explicit
/// order below N is rejected. Throws ConsistencyError when a value is not a
/// positive integer.
std::vector<Integer> s_coefficients(const ClosedForm& form, std::size_t max_index, std::size_t order = 0);
std::vector<Integer> s_coefficients(std::int64_t m, std::size_t max_index, std::size_t order = 0);

/// cos(m x) * c_m(x) and cos(m x) * d_m(x) as finite trigonometric sums,
/// frequency -> coefficient.
struct HatPolynomials {
  std::map<std::int64_t, Rational> cos_part;
  std::map<std::int64_t, Rational> sin_part;
};
HatPolynomials hat_polynomials(const ClosedForm& form);

enum class Parity { Even, Odd };

/// Even: sum_{i=0}^{n} (-1)^i m^{2i} C(2n,2i) c_{m,n-i} - (2n)! [x^{2n}] hat_c.
/// Odd:  sum_{i=0}^{n-1} (-1)^i m^{2i} C(2n-1,2i) d_{m,n-i} - (2n-1)! [x^{2n-1}] hat_d.
/// Both vanish identically.
Rational recurrence_residual(std::int64_t m, std::size_t n, Parity parity);
/// Variant reusing a form and s_{m,0..} (at least 2n+1 entries).
Rational recurrence_residual(const ClosedForm& form, std::span<const Integer> s, std::size_t n, Parity parity);

/// L_m(s) for odd s, L_{-m}(s) for even s, predicted from s_{m,s-1}.
double predicted_l(std::int64_t m, int s);
double predicted_l(std::int64_t m, int s, const Integer& s_coefficient);

/// Stable record {"m", "c_terms", "d_terms"}; each term carries
/// {"coeff", "flavor", "num_freq", "den_freq"} in that order.
std::string to_json(const ClosedForm& form);
ClosedForm closed_form_from_json(std::string_view text);

/// "c: + (1) cos(2x)/cos(5x) + ..." and a matching "d:" line.
std::string render_plain(const ClosedForm& form);

}  // namespace eulerclass
