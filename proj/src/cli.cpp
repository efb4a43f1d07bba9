#include "eulerclass/cli.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "eulerclass/arith.hpp"
#include "eulerclass/closedform.hpp"
#include "eulerclass/dirichlet.hpp"
#include "eulerclass/signedperm.hpp"

namespace eulerclass::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string fixed(double v) {
  std::ostringstream os;
  os << std::setprecision(15) << v;
  return os.str();
}

std::string sci(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << v;
  return os.str();
}

struct CheckResult {
  std::string name;
  std::string detail;
  std::string tolerance;
  std::string deviation;
  bool pass = false;
};

std::int64_t blocks_for(std::int64_t m, int s, std::int64_t requested) {
  return requested > 0 ? requested : default_blocks(m, s);
}

std::vector<CheckResult> check_recurrence(std::int64_t m, int max_n) {
  const auto form = build(m);
  const auto s = s_coefficients(form, static_cast<std::size_t>(2 * max_n));
  std::vector<CheckResult> out;
  for (int n = 0; n <= max_n; ++n) {
    for (auto parity : {Parity::Even, Parity::Odd}) {
      if (parity == Parity::Odd && n == 0) continue;
      const auto residual = recurrence_residual(form, s, static_cast<std::size_t>(n), parity);
      out.push_back({"recurrence", std::string(parity == Parity::Even ? "even" : "odd") + " n=" + std::to_string(n),
                     "0", to_string(residual), residual == 0});
    }
  }
  return out;
}

std::vector<CheckResult> check_dirichlet(std::int64_t m, std::int64_t blocks) {
  constexpr double tol = 1e-6;
  const auto s_values = s_coefficients(m, 4);
  std::vector<CheckResult> out;
  for (int s = 2; s <= 5; ++s) {
    const auto oracle = s % 2 ? l_plus(m, s, blocks_for(m, s, blocks)) : l_minus(m, s, blocks_for(m, s, blocks));
    const double predicted = predicted_l(m, s, s_values[static_cast<std::size_t>(s - 1)]);
    const double dev = std::abs(oracle.value - predicted);
    out.push_back({"dirichlet", std::string(s % 2 ? "L_m" : "L_-m") + "(" + std::to_string(s) + ")", sci(tol), sci(dev),
                   dev <= tol});
  }
  return out;
}

std::vector<CheckResult> check_facto(std::int64_t m, std::int64_t blocks) {
  constexpr double tol = 1e-6;
  const auto dec = squarefree_decompose(m);
  std::vector<CheckResult> out;
  for (int s = 2; s <= 3; ++s) {
    const double lhs = l_plus(m, s, blocks_for(m, s, blocks)).value;
    double rhs = l_plus(dec.b, s, blocks_for(dec.b, s, blocks)).value;
    for (std::size_t i = 0; i < dec.odd_primes.size(); ++i)
      rhs *= 1.0 - dec.eps_c[i] * std::pow(static_cast<double>(dec.odd_primes[i]), -s);
    const double dev = std::abs(lhs - rhs);
    out.push_back({"facto", "s=" + std::to_string(s), sci(tol), sci(dev), dev <= tol});
  }
  return out;
}

std::optional<std::vector<LambdaTerm>> enumerable_terms(std::int64_t m) {
  auto terms = lambda_decomposition(build(m));
  if (!terms) return std::nullopt;
  for (const auto& t : *terms)
    if (t.r > kMaxSigns) return std::nullopt;
  return terms;
}

std::vector<CheckResult> check_enum(std::int64_t m, int max_n) {
  const auto terms = enumerable_terms(m);
  if (!terms) throw UsageError("enum check needs every Lambda_{r,p} term with r <= 4 (m <= 4)");
  const int top = std::min(max_n, kMaxLength);
  const auto s = s_coefficients(m, static_cast<std::size_t>(top));
  std::vector<CheckResult> out;
  for (int n = 0; n <= top; ++n) {
    Rational total;
    for (const auto& t : *terms) {
      const Rational c = Integer(std::to_string(count(static_cast<int>(t.r), static_cast<int>(t.p), n)));
      total += (t.reflected && n % 2) ? Rational(-t.coeff * c) : Rational(t.coeff * c);
    }
    const Rational dev = abs(total - s[static_cast<std::size_t>(n)]);
    out.push_back({"enum", "n=" + std::to_string(n), "0", to_string(dev), dev == 0});
  }
  return out;
}

std::vector<std::string> split_checks(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item != "enum" && item != "dirichlet" && item != "recurrence" && item != "facto")
      throw UsageError("unknown check: " + item);
    out.push_back(item);
  }
  return out;
}

void require_positive(std::int64_t m, const char* what) {
  if (m < 1) throw UsageError(std::string(what) + " must be positive");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Euler and class numbers: closed forms, coefficients and numeric oracles", "eulerclass"};
  app.require_subcommand(1);

  std::int64_t m = 0;
  bool json = false;

  auto* gf = app.add_subcommand("gf", "Print the closed form of s_m(x)");
  gf->add_option("m", m, "m >= 1")->required();
  gf->add_flag("--json", json, "Emit the JSON record");

  std::int64_t count_n = 0;
  std::size_t order = 0;
  bool bfile = false;
  auto* coeffs = app.add_subcommand("coeffs", "Print s_{m,0..N}");
  coeffs->add_option("m", m, "m >= 1")->required();
  coeffs->add_option("N", count_n, "largest index")->required();
  coeffs->add_option("--order", order, "Series truncation order (default 48, raised to 2N+2 when needed)");
  auto* bfile_flag = coeffs->add_flag("--bfile", bfile, "Emit '<n> <value>' lines");
  coeffs->add_flag("--json", json, "Emit JSON")->excludes(bfile_flag);

  int max_n = 8;
  std::string checks_text;
  std::int64_t blocks = 0;
  auto* verify = app.add_subcommand("verify", "Cross-check the closed form of s_m against independent oracles");
  verify->add_option("m", m, "m >= 1")->required();
  verify->add_option("--max-n", max_n, "Largest n for recurrence/enum checks (default 8)");
  verify->add_option("--checks", checks_text, "Comma list from enum,dirichlet,recurrence,facto (default: all that apply)");
  verify->add_option("--blocks", blocks, "Character periods per L-value (default: at most 1e7 summands)");

  std::string sign;
  int s_arg = 0;
  auto* dirichlet = app.add_subcommand("dirichlet", "Evaluate L_m(s) (plus) or L_-m(s) (minus) by block summation");
  dirichlet->add_option("sign", sign, "plus or minus")->required()->check(CLI::IsMember({"plus", "minus"}));
  dirichlet->add_option("m", m, "m >= 1")->required();
  dirichlet->add_option("s", s_arg, "s >= 1 (plus) or s >= 2 (minus)")->required();
  dirichlet->add_option("--blocks", blocks, "Character periods to sum (default: at most 1e7 summands)");
  dirichlet->add_flag("--json", json, "Emit JSON");

  int r_arg = 0, p_arg = 0, n_arg = 0;
  auto* enumerate = app.add_subcommand("enum", "Count Lambda-alternating augmented r-signed permutations");
  enumerate->add_option("r", r_arg, "1..4")->required();
  enumerate->add_option("p", p_arg, "0..r")->required();
  enumerate->add_option("n", n_arg, "0..8")->required();

  int s_max = 0;
  auto* lhat = app.add_subcommand("lhat", "Tabulate L^_m(s) for s = 0..s_max from the generating function");
  lhat->add_option("m", m, "m >= 1")->required();
  lhat->add_option("s_max", s_max, "largest s")->required();
  lhat->add_flag("--json", json, "Emit JSON");

  std::vector<const char*> argv{"eulerclass"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    if (const auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front())
      err << sub->help();
    return kExitUsage;
  }

  try {
    if (gf->parsed()) {
      require_positive(m, "m");
      const auto form = build(m);
      out << (json ? to_json(form) + "\n" : render_plain(form));
      return kExitOk;
    }

    if (coeffs->parsed()) {
      require_positive(m, "m");
      if (count_n < 0) throw UsageError("N must be nonnegative");
      const auto needed = static_cast<std::size_t>(2 * count_n + 2);
      std::size_t effective = kDefaultOrder;
      if (coeffs->count("--order")) {
        if (order < static_cast<std::size_t>(count_n)) throw UsageError("--order is below N");
        effective = order;
      } else {
        effective = std::max(effective, needed);
      }
      const auto values = s_coefficients(m, static_cast<std::size_t>(count_n), effective);
      if (json) {
        nlohmann::ordered_json j;
        j["m"] = m;
        j["values"] = nlohmann::ordered_json::array();
        for (const auto& v : values) j["values"].push_back(to_string(v));
        out << j.dump() << '\n';
      } else if (bfile) {
        for (std::size_t n = 0; n < values.size(); ++n) out << n << ' ' << to_string(values[n]) << '\n';
      } else {
        for (std::size_t n = 0; n < values.size(); ++n) out << (n ? " " : "") << to_string(values[n]);
        out << '\n';
      }
      return kExitOk;
    }

    if (verify->parsed()) {
      require_positive(m, "m");
      if (max_n < 0) throw UsageError("--max-n must be nonnegative");
      std::vector<std::string> checks;
      if (verify->count("--checks")) {
        checks = split_checks(checks_text);
      } else {
        checks = {"recurrence", "dirichlet", "facto"};
        if (enumerable_terms(m)) checks.insert(checks.begin(), "enum");
      }
      std::vector<CheckResult> results;
      for (const auto& c : checks) {
        std::vector<CheckResult> part;
        if (c == "enum") part = check_enum(m, max_n);
        if (c == "recurrence") part = check_recurrence(m, max_n);
        if (c == "dirichlet") part = check_dirichlet(m, blocks);
        if (c == "facto") part = check_facto(m, blocks);
        results.insert(results.end(), part.begin(), part.end());
      }
      bool all = true;
      for (const auto& r : results) {
        out << std::left << std::setw(11) << r.name << std::setw(14) << r.detail << "tol=" << std::setw(9)
            << r.tolerance << " dev=" << std::setw(9) << r.deviation << ' ' << (r.pass ? "PASS" : "FAIL") << '\n';
        all = all && r.pass;
      }
      out << (all ? "verify m=" + std::to_string(m) + ": PASS" : "verify m=" + std::to_string(m) + ": FAIL") << '\n';
      return all ? kExitOk : kExitFailure;
    }

    if (dirichlet->parsed()) {
      require_positive(m, "m");
      const bool plus = sign == "plus";
      if (s_arg < (plus ? 1 : 2)) throw UsageError(plus ? "s must be >= 1" : "s must be >= 2");
      const auto b = blocks_for(m, s_arg, blocks);
      const auto value = plus ? l_plus(m, s_arg, b) : l_minus(m, s_arg, b);
      if (json) {
        nlohmann::ordered_json j;
        j["sign"] = sign;
        j["m"] = m;
        j["s"] = s_arg;
        j["value"] = value.value;
        j["error_bound"] = value.error_bound;
        j["terms_used"] = value.terms_used;
        out << j.dump() << '\n';
      } else {
        out << fixed(value.value) << " +/- " << sci(value.error_bound) << " (" << value.terms_used << " terms)\n";
      }
      return kExitOk;
    }

    if (enumerate->parsed()) {
      out << count(r_arg, p_arg, n_arg) << '\n';
      return kExitOk;
    }

    if (lhat->parsed()) {
      require_positive(m, "m");
      if (s_max < 0) throw UsageError("s_max must be nonnegative");
      const auto values = s_coefficients(m, static_cast<std::size_t>(s_max));
      nlohmann::ordered_json j = nlohmann::ordered_json::array();
      for (int s = 0; s <= s_max; ++s) {
        const double v = predicted_l(m, s + 1, values[static_cast<std::size_t>(s)]);
        if (json)
          j.push_back(v);
        else
          out << s << ' ' << fixed(v) << '\n';
      }
      if (json) out << j.dump() << '\n';
      return kExitOk;
    }
  } catch (const ConsistencyError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace eulerclass::cli
