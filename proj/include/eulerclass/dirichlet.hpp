#pragma once

// Floating-point evaluation of
//   L_m(s)  = sum_{odd l > 0} (-m/l) l^{-s}
//   L_-m(s) = sum_{odd l > 0} ( m/l) l^{-s}
// and the Fourier series S_{2n+1}, C_{2n}. These are independent of the
// exact closed forms and serve as their numeric oracle.

#include <cstdint>
#include <vector>

#include "eulerclass/arith.hpp"

namespace eulerclass {

struct LValue {
  double value = 0.0;
  double error_bound = 0.0;
  std::int64_t terms_used = 0;
};

inline constexpr std::int64_t kMaxSummands = 10'000'000;

/// Sums over complete periods of 4m (2m odd l per block). Tail handling:
///  - mean-zero character, s >= 2: tail taken as zero, bounded by
///    (P/2) X^{-s} + (s P^2/2) X^{-s-1} with X the end of the last block;
///  - mean-zero character, s == 1: average of the last two block partial
///    sums, bound as above at the earlier block plus half their gap;
///  - principal character (L_-m with m a square): adds the integral of the
///    mean density over the tail, bound P X^{-s} + s P^2 X^{-s-1}.
/// Throws std::invalid_argument for m < 1, s < 1 or blocks < 1.
LValue l_plus(std::int64_t m, int s, std::int64_t blocks);
/// Same strategy with l -> (m/l). Requires s >= 2.
LValue l_minus(std::int64_t m, int s, std::int64_t blocks);

/// Blocks for a call staying within kMaxSummands; for s >= 2 stops earlier
/// once the tail bound drops below 1e-12.
std::int64_t default_blocks(std::int64_t m, int s);

/// Partial sums over k = 0..terms-1 of
///   sin(2 pi (2k+1) y) / (2k+1)^{2n+1}   and   cos(2 pi (2k+1) y) / (2k+1)^{2n}.
double fourier_s(int n, const Rational& y, std::int64_t terms);
double fourier_c(int n, const Rational& y, std::int64_t terms);

enum class FourierKind { Sine, Cosine };

/// L_m(2n+1) = 2/sqrt(m) sum_k eps_k S_{2n+1}(y_k)   (Sine),
/// L_-m(2n)  = 2/sqrt(m) sum_k eps_k C_{2n}(y_k)     (Cosine).
struct FourierCombination {
  std::int64_t m = 0;
  FourierKind kind = FourierKind::Sine;
  std::vector<int> eps;
  std::vector<Rational> y;
};

/// Residue-class tables for square-free m > 1; zero characters are dropped.
FourierCombination lemma_combination(std::int64_t m, FourierKind kind);

/// 2/sqrt(m) * sum_k eps_k F(y_k) with F = S_{2n+1} or C_{2n}.
double evaluate(const FourierCombination& combination, int n, std::int64_t terms);

}  // namespace eulerclass
