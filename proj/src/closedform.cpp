#include "eulerclass/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace eulerclass {

void canonicalize(std::vector<TrigTerm>& terms) {
  std::sort(terms.begin(), terms.end(), [](const TrigTerm& a, const TrigTerm& b) {
    return std::tie(a.den_freq, a.num_freq, a.flavor) < std::tie(b.den_freq, b.num_freq, b.flavor);
  });
  std::vector<TrigTerm> merged;
  for (auto& term : terms) {
    if (!merged.empty() && merged.back().den_freq == term.den_freq && merged.back().num_freq == term.num_freq &&
        merged.back().flavor == term.flavor) {
      merged.back().coeff += term.coeff;
    } else {
      merged.push_back(std::move(term));
    }
  }
  std::erase_if(merged, [](const TrigTerm& t) { return t.coeff == 0 || (t.flavor == Flavor::Sin && t.num_freq == 0); });
  terms = std::move(merged);
}

namespace {

TrigTerm cos_term(const Rational& coeff, std::int64_t num, std::int64_t den) { return {coeff, Flavor::Cos, num, den}; }
TrigTerm sin_term(const Rational& coeff, std::int64_t num, std::int64_t den) { return {coeff, Flavor::Sin, num, den}; }

ClosedForm finish(std::int64_t m, std::vector<TrigTerm> c_terms, std::vector<TrigTerm> d_terms) {
  canonicalize(c_terms);
  canonicalize(d_terms);
  return ClosedForm{m, std::move(c_terms), std::move(d_terms)};
}

void require_squarefree_above_one(std::int64_t b) {
  if (b <= 1 || !is_squarefree(b)) throw std::invalid_argument("expected a square-free integer greater than 1");
}

}  // namespace

ClosedForm build_base1() { return finish(1, {cos_term(1, 0, 1)}, {sin_term(1, 1, 1)}); }

ClosedForm build_squarefree(std::int64_t b) {
  require_squarefree_above_one(b);
  std::vector<TrigTerm> c, d;
  const auto t = b / 4;
  switch (b % 4) {
    case 3:
      for (std::int64_t k = 1; k <= t; ++k) {
        const int chi = jacobi(k, b);
        c.push_back(cos_term(chi, b - 4 * k, b));
        d.push_back(sin_term(chi, 4 * k, b));
      }
      for (std::int64_t k = t + 1; k <= 2 * t + 1; ++k) {
        const int chi = jacobi(k, b);
        c.push_back(cos_term(chi, 4 * k - b, b));
        d.push_back(sin_term(chi, 2 * b - 4 * k, b));
      }
      break;
    case 1:
      for (std::int64_t k = 1; k <= t; ++k) {
        const int chi = jacobi(k, b);
        c.push_back(cos_term(chi, 4 * k, b));
        d.push_back(sin_term(chi, b - 4 * k, b));
      }
      for (std::int64_t k = t + 1; k <= 2 * t; ++k) {
        const int chi = -jacobi(k, b);
        c.push_back(cos_term(chi, 2 * b - 4 * k, b));
        d.push_back(sin_term(chi, 4 * k - b, b));
      }
      break;
    case 2:
      for (std::int64_t k = 1; k <= 4 * t + 1; k += 2) {
        const int chi = jacobi(-b, k);
        c.push_back(cos_term(chi, b - k, b));
        d.push_back(sin_term(chi, k, b));
      }
      break;
    default:
      throw std::invalid_argument("square-free b cannot be divisible by 4");
  }
  return finish(b, std::move(c), std::move(d));
}

std::vector<LambdaTerm> lambda_combination(std::int64_t b) {
  if (b == 1) return {LambdaTerm{1, 1, 1, false}};
  require_squarefree_above_one(b);
  std::vector<LambdaTerm> out;
  const auto t = b / 4;
  auto emit = [&](int chi, std::int64_t p) {
    if (chi != 0) out.push_back(LambdaTerm{chi, b, p, false});
  };
  switch (b % 4) {
    case 3:
      for (std::int64_t k = 1; k <= t; ++k) emit(jacobi(k, b), 4 * k);
      for (std::int64_t k = t + 1; k <= 2 * t + 1; ++k) emit(jacobi(k, b), 2 * b - 4 * k);
      break;
    case 1:
      for (std::int64_t k = 1; k <= t; ++k) emit(jacobi(k, b), b - 4 * k);
      for (std::int64_t k = t + 1; k <= 2 * t; ++k) emit(-jacobi(k, b), 4 * k - b);
      break;
    default:
      for (std::int64_t k = 1; k <= 4 * t + 1; k += 2) emit(jacobi(-b, k), k);
      break;
  }
  return out;
}

ClosedForm from_lambda_terms(std::int64_t m, std::span<const LambdaTerm> terms) {
  std::vector<TrigTerm> c, d;
  for (const auto& term : terms) {
    if (term.p < 0 || term.p > term.r) throw std::invalid_argument("Lambda_{r,p} needs 0 <= p <= r");
    c.push_back(cos_term(term.coeff, term.r - term.p, term.r));
    d.push_back(sin_term(term.reflected ? Rational(-term.coeff) : term.coeff, term.p, term.r));
  }
  return finish(m, std::move(c), std::move(d));
}

std::optional<std::vector<LambdaTerm>> lambda_decomposition(const ClosedForm& form) {
  std::vector<LambdaTerm> out;
  std::vector<bool> used(form.d_terms.size(), false);
  for (const auto& c : form.c_terms) {
    const auto p = c.den_freq - c.num_freq;
    if (p < 0) return std::nullopt;
    if (p == 0) {
      out.push_back(LambdaTerm{c.coeff, c.den_freq, 0, false});
      continue;
    }
    auto it = std::find_if(form.d_terms.begin(), form.d_terms.end(),
                           [&](const TrigTerm& d) { return d.den_freq == c.den_freq && d.num_freq == p; });
    if (it == form.d_terms.end()) return std::nullopt;
    used[static_cast<std::size_t>(it - form.d_terms.begin())] = true;
    if (it->coeff == c.coeff)
      out.push_back(LambdaTerm{c.coeff, c.den_freq, p, false});
    else if (it->coeff == -c.coeff)
      out.push_back(LambdaTerm{c.coeff, c.den_freq, p, true});
    else
      return std::nullopt;
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) return std::nullopt;
  return out;
}

std::vector<ExpansionTerm> expansion_terms(const SquareFreeDecomposition& dec) {
  const auto k = dec.odd_primes.size();
  const Rational k_ratio = dec.m == 1 ? Rational(1) : dec.k_b;  // K_b / K_m
  const std::int64_t u_squared = dec.u * dec.u;
  std::vector<ExpansionTerm> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    ExpansionTerm term;
    std::int64_t product = 1;
    bool vanishes = false;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(mask >> i & 1U)) continue;
      if (dec.eps_c[i] == 0 || dec.eps_d[i] == 0) {
        vanishes = true;
        break;
      }
      term.subset.push_back(dec.odd_primes[i]);
      product *= dec.odd_primes[i];
      term.sigma_c *= -dec.eps_c[i];
      term.sigma_d *= -dec.eps_d[i];
    }
    if (vanishes) continue;
    term.t = u_squared / product;
    term.weight = k_ratio * make_rational(Integer(static_cast<long>(term.t)), Integer(static_cast<long>(dec.u)));
    out.push_back(std::move(term));
  }
  return out;
}

ClosedForm build(std::int64_t m) {
  if (m <= 0) throw std::invalid_argument("build: m must be positive");
  if (m == 1) return build_base1();
  const auto dec = squarefree_decompose(m);
  const auto base = dec.b == 1 ? build_base1() : build_squarefree(dec.b);
  std::vector<TrigTerm> c, d;
  for (const auto& term : expansion_terms(dec)) {
    for (const auto& bt : base.c_terms)
      c.push_back(cos_term(bt.coeff * term.weight * term.sigma_c, bt.num_freq * term.t, bt.den_freq * term.t));
    for (const auto& bt : base.d_terms)
      d.push_back(sin_term(bt.coeff * term.weight * term.sigma_d, bt.num_freq * term.t, bt.den_freq * term.t));
  }
  return finish(m, std::move(c), std::move(d));
}

TruncatedSeries expand(std::span<const TrigTerm> terms, std::size_t order) {
  TruncatedSeries total(order);
  std::size_t i = 0;
  while (i < terms.size()) {
    const auto den = terms[i].den_freq;
    TruncatedSeries numerator(order);
    for (; i < terms.size() && terms[i].den_freq == den; ++i) {
      const auto& term = terms[i];
      const auto base =
          term.flavor == Flavor::Cos ? cos_series(term.num_freq, order) : sin_series(term.num_freq, order);
      numerator = numerator + scale(base, term.coeff);
    }
    total = total + mul(numerator, reciprocal(cos_series(den, order)));
  }
  return total;
}

std::vector<Integer> s_coefficients(const ClosedForm& form, std::size_t max_index, std::size_t order) {
  if (order == 0) order = 2 * max_index + 2;
  if (order < max_index) throw std::invalid_argument("s_coefficients: truncation order below requested index");
  const auto even = expand(form.c_terms, order);
  const auto odd = expand(form.d_terms, order);
  std::vector<Integer> out;
  out.reserve(max_index + 1);
  for (std::size_t n = 0; n <= max_index; ++n) {
    const auto value = egf_coefficient(n % 2 == 0 ? even : odd, n);
    if (value.get_den() != 1 || value <= 0) {
      throw ConsistencyError("s_{" + std::to_string(form.m) + "," + std::to_string(n) +
                             "} is not a positive integer: " + to_string(value));
    }
    out.push_back(value.get_num());
  }
  return out;
}

std::vector<Integer> s_coefficients(std::int64_t m, std::size_t max_index, std::size_t order) {
  return s_coefficients(build(m), max_index, order);
}

HatPolynomials hat_polynomials(const ClosedForm& form) {
  HatPolynomials out;
  // cos(N y)/cos(y) = (-1)^{(N-1)/2} (1 + 2 sum_{k=1}^{(N-1)/2} (-1)^k cos(2k y)) for odd N
  auto multiplier = [&](std::int64_t den) {
    if (form.m % den != 0 || (form.m / den) % 2 == 0)
      throw std::invalid_argument("denominator frequency must divide m with odd quotient");
    const auto n = form.m / den;
    const int lead = ((n - 1) / 2) % 2 == 0 ? 1 : -1;
    std::vector<std::pair<std::int64_t, Rational>> parts{{0, Rational(lead)}};
    for (std::int64_t k = 1; k <= (n - 1) / 2; ++k) parts.emplace_back(2 * k * den, Rational(2 * lead * (k % 2 ? -1 : 1)));
    return parts;
  };
  for (const auto& term : form.c_terms) {
    for (const auto& [freq, weight] : multiplier(term.den_freq)) {
      const Rational half = term.coeff * weight / 2;
      out.cos_part[std::abs(term.num_freq - freq)] += half;
      out.cos_part[term.num_freq + freq] += half;
    }
  }
  for (const auto& term : form.d_terms) {
    for (const auto& [freq, weight] : multiplier(term.den_freq)) {
      const Rational half = term.coeff * weight / 2;
      out.sin_part[term.num_freq + freq] += half;
      const auto diff = term.num_freq - freq;
      if (diff > 0) out.sin_part[diff] += half;
      if (diff < 0) out.sin_part[-diff] -= half;
    }
  }
  std::erase_if(out.cos_part, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(out.sin_part, [](const auto& kv) { return kv.second == 0 || kv.first == 0; });
  return out;
}

namespace {

Integer pow_int(std::int64_t base, unsigned long exp) {
  Integer r;
  const Integer b(static_cast<long>(base));
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
  return r;
}

}  // namespace

Rational recurrence_residual(const ClosedForm& form, std::span<const Integer> s, std::size_t n, Parity parity) {
  const auto hat = hat_polynomials(form);
  Rational lhs, rhs;
  if (parity == Parity::Even) {
    if (s.size() < 2 * n + 1) throw std::invalid_argument("recurrence_residual: not enough coefficients");
    const auto top = static_cast<unsigned>(2 * n);
    for (std::size_t i = 0; i <= n; ++i) {
      const Integer term = pow_int(form.m, 2 * i) * binomial(top, static_cast<unsigned>(2 * i)) * s[2 * (n - i)];
      lhs += (i % 2 == 0) ? Rational(term) : Rational(-term);
    }
    for (const auto& [freq, coeff] : hat.cos_part) rhs += coeff * pow_int(freq, top);
    if (n % 2) rhs = -rhs;
  } else {
    if (n == 0) throw std::invalid_argument("recurrence_residual: odd parity needs n >= 1");
    if (s.size() < 2 * n) throw std::invalid_argument("recurrence_residual: not enough coefficients");
    const auto top = static_cast<unsigned>(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      const Integer term = pow_int(form.m, 2 * i) * binomial(top, static_cast<unsigned>(2 * i)) * s[2 * (n - i) - 1];
      lhs += (i % 2 == 0) ? Rational(term) : Rational(-term);
    }
    for (const auto& [freq, coeff] : hat.sin_part) rhs += coeff * pow_int(freq, top);
    if ((n - 1) % 2) rhs = -rhs;
  }
  return lhs - rhs;
}

Rational recurrence_residual(std::int64_t m, std::size_t n, Parity parity) {
  const auto form = build(m);
  return recurrence_residual(form, s_coefficients(form, 2 * n), n, parity);
}

double predicted_l(std::int64_t m, int s, const Integer& s_coefficient) {
  if (s <= 0) throw std::invalid_argument("predicted_l: s must be positive");
  if (m <= 0) throw std::invalid_argument("predicted_l: m must be positive");
  // s_{m,s-1} * K_m * sqrt(m) * (pi/2m)^s / (s-1)!
  const auto exact = make_rational(s_coefficient, factorial(static_cast<unsigned>(s - 1)) *
                                                     pow_int(2 * m, static_cast<unsigned long>(s)));
  const double k_m = m == 1 ? 0.5 : 1.0;
  return exact.get_d() * k_m * std::sqrt(static_cast<double>(m)) * std::pow(std::numbers::pi, s);
}

double predicted_l(std::int64_t m, int s) {
  if (s <= 0) throw std::invalid_argument("predicted_l: s must be positive");
  const auto values = s_coefficients(m, static_cast<std::size_t>(s - 1));
  return predicted_l(m, s, values.back());
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json terms_to_json(std::span<const TrigTerm> terms) {
  auto arr = ordered_json::array();
  for (const auto& t : terms) {
    ordered_json item;
    item["coeff"] = to_string(t.coeff);
    item["flavor"] = t.flavor == Flavor::Cos ? "cos" : "sin";
    item["num_freq"] = t.num_freq;
    item["den_freq"] = t.den_freq;
    arr.push_back(std::move(item));
  }
  return arr;
}

std::vector<TrigTerm> terms_from_json(const ordered_json& arr) {
  std::vector<TrigTerm> out;
  for (const auto& item : arr) {
    const auto flavor = item.at("flavor").get<std::string>();
    if (flavor != "cos" && flavor != "sin") throw std::invalid_argument("unknown flavor: " + flavor);
    out.push_back(TrigTerm{parse_rational(item.at("coeff").get<std::string>()),
                           flavor == "cos" ? Flavor::Cos : Flavor::Sin, item.at("num_freq").get<std::int64_t>(),
                           item.at("den_freq").get<std::int64_t>()});
  }
  return out;
}

std::string freq_text(std::int64_t f) { return f == 1 ? "x" : std::to_string(f) + "x"; }

}  // namespace

std::string to_json(const ClosedForm& form) {
  ordered_json j;
  j["m"] = form.m;
  j["c_terms"] = terms_to_json(form.c_terms);
  j["d_terms"] = terms_to_json(form.d_terms);
  return j.dump();
}

ClosedForm closed_form_from_json(std::string_view text) {
  try {
    const auto j = ordered_json::parse(text);
    return ClosedForm{j.at("m").get<std::int64_t>(), terms_from_json(j.at("c_terms")), terms_from_json(j.at("d_terms"))};
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed closed-form record: ") + e.what());
  }
}

std::string render_plain(const ClosedForm& form) {
  std::ostringstream os;
  auto line = [&](const char* label, std::span<const TrigTerm> terms) {
    os << label << ':';
    if (terms.empty()) os << " 0";
    for (const auto& t : terms) {
      os << (t.coeff < 0 ? " - (" : " + (") << to_string(Rational(abs(t.coeff))) << ") "
         << (t.flavor == Flavor::Cos ? "cos(" : "sin(") << freq_text(t.num_freq) << ")/cos(" << freq_text(t.den_freq)
         << ')';
    }
    os << '\n';
  };
  os << "s_" << form.m << "(x) = c + d\n";
  line("c", form.c_terms);
  line("d", form.d_terms);
  return os.str();
}

}  // namespace eulerclass
