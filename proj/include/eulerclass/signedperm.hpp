#pragma once

// Brute-force counting of Lambda-alternating augmented r-signed permutations:
// words (G, (i_1,j_1), ..., (i_n,j_n)) with signs i_k in [r] and (j_k) a
// permutation of [n], alternating as G < g_1 > g_2 < g_3 > ... in an order
// where (i,j) < G exactly when i <= r - p and pairs compare
// lexicographically.

#include <compare>
#include <cstdint>
#include <vector>

namespace eulerclass {

inline constexpr int kMaxSigns = 4;
inline constexpr int kMaxLength = 8;

struct Label {
  bool special = false;  // the element G
  int sign = 0;          // i in [r]
  int value = 0;         // j in [n]

  static Label g() { return Label{true, 0, 0}; }
  static Label pair(int i, int j) { return Label{false, i, j}; }

  friend bool operator==(const Label&, const Label&) = default;
};

std::strong_ordering compare_labels(int r, int p, const Label& a, const Label& b);

struct AugmentedSignedPermutation {
  int r = 1;
  int p = 1;
  std::vector<int> signs;   // i_1..i_n
  std::vector<int> values;  // j_1..j_n, a permutation of [n]

  int length() const { return static_cast<int>(values.size()); }
  Label label(int k) const;  // g_k; g_0 = G
};

/// Checks the ranges and the bijection on [n]; throws std::invalid_argument.
void validate(const AugmentedSignedPermutation& perm);

/// Descent set {k : g_{k-1} > g_k} equals {2, 4, ...} intersected with [n].
bool is_alternating(const AugmentedSignedPermutation& perm);

/// Lambda_{r,p,n}. Depth-first over the words, pruning at the first position
/// that breaks the up/down pattern. Caps: 1 <= r <= 4, 0 <= p <= r,
/// 0 <= n <= 8; throws std::invalid_argument outside them.
std::uint64_t count(int r, int p, int n);

/// Words alternating under the p2 order whose first sign lies in
/// [r - p2 + 1, r - p1]. Requires 0 <= p1 < p2 <= r and the caps above.
std::uint64_t count_first_sign_band(int r, int p1, int p2, int n);

/// Every word of the given shape, in sign-major then lexicographic
/// permutation order. Meant for small oracles.
std::vector<AugmentedSignedPermutation> all_words(int r, int p, int n);

}  // namespace eulerclass
