// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "eulerclass/closedform.hpp"
#include "eulerclass/dirichlet.hpp"
#include "eulerclass/signedperm.hpp"

using namespace eulerclass;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;

  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
};

std::vector<Integer> ints(std::initializer_list<long> values) {
  std::vector<Integer> out;
  for (auto v : values) out.emplace_back(v);
  return out;
}

ClosedForm over(std::int64_t m, std::int64_t den, std::vector<std::pair<int, std::int64_t>> c,
                std::vector<std::pair<int, std::int64_t>> d) {
  ClosedForm f{m, {}, {}};
  for (auto [coeff, num] : c) f.c_terms.push_back({coeff, Flavor::Cos, num, den});
  for (auto [coeff, num] : d) f.d_terms.push_back({coeff, Flavor::Sin, num, den});
  return f;
}

// sum of w * s_base(t x), written out term by term
ClosedForm dilated(std::int64_t m, std::int64_t base, std::vector<std::tuple<Rational, std::int64_t, int, int>> parts) {
  const auto b = build(base);
  ClosedForm f{m, {}, {}};
  for (const auto& [w, t, sc, sd] : parts) {
    for (auto term : b.c_terms) {
      term.coeff *= w * sc;
      term.num_freq *= t;
      term.den_freq *= t;
      f.c_terms.push_back(term);
    }
    for (auto term : b.d_terms) {
      term.coeff *= w * sd;
      term.num_freq *= t;
      term.den_freq *= t;
      f.d_terms.push_back(term);
    }
  }
  canonicalize(f.c_terms);
  canonicalize(f.d_terms);
  return f;
}

Outcome sequences() {
  Outcome o;
  const std::vector<std::vector<Integer>> expected{ints({1, 1, 1, 2, 5, 16}), ints({1, 1, 3, 11, 57, 361}),
                                                   ints({1, 2, 8, 46, 352, 3362}), ints({1, 4, 16, 128, 1280, 16384})};
  for (std::int64_t m = 1; m <= 4; ++m)
    if (s_coefficients(m, 5) != expected[static_cast<std::size_t>(m - 1)]) o.fail("m=" + std::to_string(m));
  return o;
}

Outcome small_closed_forms() {
  Outcome o;
  const std::vector<ClosedForm> expected{
      over(1, 1, {{1, 0}}, {{1, 1}}),
      over(2, 2, {{1, 1}}, {{1, 1}}),
      over(3, 3, {{1, 1}}, {{1, 2}}),
      over(4, 4, {{1, 0}}, {{1, 4}}),
      over(5, 5, {{1, 2}, {1, 4}}, {{1, 1}, {1, 3}}),
      over(6, 6, {{1, 1}, {1, 5}}, {{1, 1}, {1, 5}}),
      over(7, 7, {{1, 1}, {1, 3}, {-1, 5}}, {{-1, 2}, {1, 4}, {1, 6}}),
  };
  for (const auto& f : expected)
    if (build(f.m) != f) o.fail("m=" + std::to_string(f.m));
  return o;
}

Outcome composite_identities() {
  Outcome o;
  const Rational h(1, 2);
  if (build(12675) != dilated(12675, 3, {{65, 4225, 1, 1}, {-5, 325, 1, 1}, {13, 845, 1, 1}, {-1, 65, 1, 1}}))
    o.fail("m=12675");
  if (build(1350) != dilated(1350, 6, {{15, 225, 1, 1}, {-3, 45, 1, 1}})) o.fail("m=1350");
  if (build(225) != dilated(225, 1, {{15 * h, 225, 1, 1}, {-3 * h, 45, 1, 1}, {5 * h, 75, 1, -1}, {-h, 15, 1, -1}}))
    o.fail("m=225");
  return o;
}

Outcome recurrences() {
  Outcome o;
  for (std::int64_t m = 1; m <= 30; ++m) {
    const auto form = build(m);
    const auto s = s_coefficients(form, 24);
    for (std::size_t n = 0; n <= 12; ++n) {
      if (recurrence_residual(form, s, n, Parity::Even) != 0) o.fail("m=" + std::to_string(m) + " even n=" + std::to_string(n));
      if (n > 0 && recurrence_residual(form, s, n, Parity::Odd) != 0)
        o.fail("m=" + std::to_string(m) + " odd n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome enumeration() {
  Outcome o;
  for (int r = 1; r <= 4; ++r) {
    const int top = r == 4 ? 6 : 7;
    const auto order = static_cast<std::size_t>(top);
    const auto sec = reciprocal(cos_series(r, order));
    for (int p = 0; p <= r; ++p) {
      const auto series = mul(add(cos_series(r - p, order), sin_series(p, order)), sec);
      for (int n = 0; n <= top; ++n) {
        const Rational gf = egf_coefficient(series, static_cast<std::size_t>(n));
        if (gf != Rational(Integer(std::to_string(count(r, p, n)))))
          o.fail("r=" + std::to_string(r) + " p=" + std::to_string(p) + " n=" + std::to_string(n));
      }
    }
  }
  return o;
}

Outcome dirichlet_oracle() {
  Outcome o;
  double worst_s1 = 0, worst = 0;
  for (std::int64_t m = 1; m <= 30; ++m) {
    const auto s = s_coefficients(m, 4);
    auto check = [&](bool plus, int arg, double tol) {
      const auto blocks = default_blocks(m, arg);
      const auto v = plus ? l_plus(m, arg, blocks) : l_minus(m, arg, blocks);
      if (v.terms_used > kMaxSummands) o.fail("budget m=" + std::to_string(m));
      const double dev = std::abs(v.value - predicted_l(m, arg, s[static_cast<std::size_t>(arg - 1)]));
      (arg == 1 ? worst_s1 : worst) = std::max(arg == 1 ? worst_s1 : worst, dev);
      if (dev > tol) o.fail("m=" + std::to_string(m) + " s=" + std::to_string(arg));
    };
    check(true, 1, 1e-4);
    check(true, 3, 1e-6);
    check(true, 5, 1e-6);
    check(false, 2, 1e-6);
    check(false, 4, 1e-6);
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "max dev %.1e (s=1), %.1e (s>1)", worst_s1, worst);
  if (o.pass) o.note = buf;
  return o;
}

Outcome lemma_suites() {
  Outcome o;
  for (std::int64_t m = 2; m <= 30; ++m) {
    if (!is_squarefree(m)) continue;
    const auto sine = lemma_combination(m, FourierKind::Sine);
    const auto cosine = lemma_combination(m, FourierKind::Cosine);
    for (int n = 0; n <= 2; ++n) {
      const double tol = n == 0 ? 1e-4 : 1e-6;
      const std::int64_t terms = n == 0 ? 2'000'000 : 20'000;
      const int s = 2 * n + 1;
      if (std::abs(l_plus(m, s, default_blocks(m, s)).value - evaluate(sine, n, terms)) > tol)
        o.fail("S m=" + std::to_string(m) + " n=" + std::to_string(n));
    }
    for (int n = 1; n <= 2; ++n) {
      const int s = 2 * n;
      if (std::abs(l_minus(m, s, default_blocks(m, s)).value - evaluate(cosine, n, 20'000)) > 1e-6)
        o.fail("C m=" + std::to_string(m) + " n=" + std::to_string(n));
    }
  }
  for (std::int64_t m = -200; m <= 200; ++m) {
    if (!satisfies_landau_hypotheses(m)) continue;
    for (std::int64_t l = 1; l <= 99; l += 2)
      if (landau_residual(m, l) > 1e-9) o.fail("landau m=" + std::to_string(m) + " l=" + std::to_string(l));
  }
  return o;
}

Outcome facto() {
  Outcome o;
  for (std::int64_t m : {12675, 1350, 225, 45, 50}) {
    const auto dec = squarefree_decompose(m);
    for (int s : {2, 3}) {
      double rhs = l_plus(dec.b, s, default_blocks(dec.b, s)).value;
      for (std::size_t i = 0; i < dec.odd_primes.size(); ++i)
        rhs *= 1.0 - dec.eps_c[i] * std::pow(static_cast<double>(dec.odd_primes[i]), -s);
      if (std::abs(l_plus(m, s, default_blocks(m, s)).value - rhs) > 1e-6)
        o.fail("m=" + std::to_string(m) + " s=" + std::to_string(s));
    }
  }
  return o;
}

Outcome integrality() {
  Outcome o;
  for (std::int64_t m = 1; m <= 100; ++m) {
    try {
      for (const auto& v : s_coefficients(m, 24))
        if (v <= 0) o.fail("m=" + std::to_string(m));
    } catch (const ConsistencyError& e) {
      o.fail("m=" + std::to_string(m) + ": " + e.what());
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"sequences m=1..4, n<=5", sequences},
      {"closed forms m=1..7", small_closed_forms},
      {"composite identities 12675, 1350, 225", composite_identities},
      {"recurrences m<=30, n<=12", recurrences},
      {"enumeration vs generating function", enumeration},
      {"L-value oracle m<=30", dirichlet_oracle},
      {"Fourier combinations and Gauss sums", lemma_suites},
      {"Euler-product factorization", facto},
      {"integrality m<=100, n<=24", integrality},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::printf("criterion %zu %s: %s (%.2fs)%s%s\n", i + 1, criteria[i].first.c_str(), o.pass ? "PASS" : "FAIL",
                elapsed.count(), o.note.empty() ? "" : " ", o.note.c_str());
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
