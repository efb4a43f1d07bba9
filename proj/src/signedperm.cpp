#include "eulerclass/signedperm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace eulerclass {

namespace {

void check_caps(int r, int p, int n) {
  if (r < 1 || r > kMaxSigns) throw std::invalid_argument("r must lie in [1, 4]");
  if (p < 0 || p > r) throw std::invalid_argument("p must lie in [0, r]");
  if (n < 0 || n > kMaxLength) throw std::invalid_argument("n must lie in [0, 8]");
}

// Integer keys realizing the order: pairs at even keys in lexicographic
// order, G at the odd key between (r-p, *) and (r-p+1, *).
int key(int r, int p, const Label& l) {
  constexpr int stride = 2 * (kMaxLength + 1);
  if (l.special) return stride * (r - p) + 1;
  return stride * (l.sign - 1) + 2 * l.value;
}

struct Search {
  int r;
  int n;
  int g_key;
  // first-sign filter (inclusive)
  int first_lo;
  int first_hi;
  std::uint64_t found = 0;

  void extend(int position, int previous_key, unsigned used) {
    if (position > n) {
      ++found;
      return;
    }
    const bool ascent = position % 2 == 1;
    for (int i = 1; i <= r; ++i) {
      if (position == 1 && (i < first_lo || i > first_hi)) continue;
      for (int j = 1; j <= n; ++j) {
        if (used >> j & 1U) continue;
        const int k = key(r, 0, Label::pair(i, j));
        if (ascent ? k > previous_key : k < previous_key) extend(position + 1, k, used | (1U << j));
      }
    }
  }
};

std::uint64_t run(int r, int p, int n, int first_lo, int first_hi) {
  Search search{r, n, key(r, p, Label::g()), first_lo, first_hi};
  search.extend(1, search.g_key, 0U);
  return search.found;
}

}  // namespace

std::strong_ordering compare_labels(int r, int p, const Label& a, const Label& b) {
  if (p < 0 || p > r) throw std::invalid_argument("p must lie in [0, r]");
  if (a.special && b.special) return std::strong_ordering::equal;
  if (a.special) return b.sign > r - p ? std::strong_ordering::less : std::strong_ordering::greater;
  if (b.special) return a.sign > r - p ? std::strong_ordering::greater : std::strong_ordering::less;
  if (a.sign != b.sign) return a.sign <=> b.sign;
  return a.value <=> b.value;
}

Label AugmentedSignedPermutation::label(int k) const {
  if (k == 0) return Label::g();
  return Label::pair(signs[static_cast<std::size_t>(k - 1)], values[static_cast<std::size_t>(k - 1)]);
}

void validate(const AugmentedSignedPermutation& perm) {
  if (perm.r < 1 || perm.p < 0 || perm.p > perm.r) throw std::invalid_argument("need r >= 1 and 0 <= p <= r");
  if (perm.signs.size() != perm.values.size()) throw std::invalid_argument("signs and values differ in length");
  if (perm.length() > kMaxLength) throw std::invalid_argument("word longer than supported");
  for (int s : perm.signs)
    if (s < 1 || s > perm.r) throw std::invalid_argument("sign outside [r]");
  auto sorted = perm.values;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i + 1)) throw std::invalid_argument("values are not a permutation of [n]");
}

bool is_alternating(const AugmentedSignedPermutation& perm) {
  validate(perm);
  for (int k = 1; k <= perm.length(); ++k) {
    const bool descent = compare_labels(perm.r, perm.p, perm.label(k - 1), perm.label(k)) > 0;
    if (descent != (k % 2 == 0)) return false;
  }
  return true;
}

std::uint64_t count(int r, int p, int n) {
  check_caps(r, p, n);
  return run(r, p, n, 1, r);
}

std::uint64_t count_first_sign_band(int r, int p1, int p2, int n) {
  check_caps(r, p2, n);
  if (p1 < 0 || p1 >= p2) throw std::invalid_argument("need 0 <= p1 < p2");
  if (n == 0) return 0;
  return run(r, p2, n, r - p2 + 1, r - p1);
}

std::vector<AugmentedSignedPermutation> all_words(int r, int p, int n) {
  check_caps(r, p, n);
  std::vector<AugmentedSignedPermutation> out;
  std::vector<int> signs(static_cast<std::size_t>(n), 1);
  while (true) {
    std::vector<int> values(static_cast<std::size_t>(n));
    std::iota(values.begin(), values.end(), 1);
    do {
      out.push_back(AugmentedSignedPermutation{r, p, signs, values});
    } while (std::next_permutation(values.begin(), values.end()));
    int i = n - 1;
    while (i >= 0 && signs[static_cast<std::size_t>(i)] == r) signs[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) break;
    ++signs[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace eulerclass
