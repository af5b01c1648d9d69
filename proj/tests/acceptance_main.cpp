/* Acceptance suite: one check per release criterion, each printed as a
 * single pass/fail line. Every comparison is exact structural equality of
 * canonical values; the per-criterion wall-clock budgets are part of the
 * check. Exits nonzero if any criterion fails.
 *
 * Usage: qboole_acceptance [path-to-qboole-cli]
 * (falls back to the QBOOLE_CLI environment variable). */

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qboole/format.hpp"
#include "qboole/identities.hpp"
#include "qboole/series.hpp"
#include "support/oracles.hpp"

using namespace qboole;
using nlohmann::json;

namespace {

std::string g_cli_path;

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  CliResult r;
  if (g_cli_path.empty()) return r;
  const std::string cmd = g_cli_path + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

int g_failures = 0;

void criterion(int number, const std::string& label, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > budget_seconds) {
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += "time budget exceeded";
  }
  std::ostringstream line;
  line << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << label << " ["
       << std::fixed;
  line.precision(2);
  line << secs << "s, budget " << budget_seconds << "s]";
  if (!ok && !detail.empty()) line << " -- " << detail;
  std::cout << line.str() << "\n" << std::flush;
  if (!ok) ++g_failures;
}

VerifyRanges full_ranges(unsigned n_max, unsigned k_max) {
  VerifyRanges r;
  r.n_max = n_max;
  r.k_max = k_max;
  r.lambdas = default_lambdas();
  r.symbolic_x = true;
  return r;
}

bool check_dual_path(const FamilyContext& ctx, std::string& detail) {
  for (const BigRational& lambda : default_lambdas()) {
    for (unsigned k = 1; k <= 3; ++k) {
      const auto gen = ctx.q_boole_first_upto(12, k, lambda, BuildPath::GenFunc);
      const auto st = ctx.q_boole_first_upto(12, k, lambda, BuildPath::StirlingTransform);
      for (unsigned n = 0; n <= 12; ++n) {
        if (!(gen[n] == st[n])) {
          detail = "mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k) +
                   " lambda=" + lambda.str();
          return false;
        }
      }
    }
  }
  return true;
}

bool check_all_verifiers(const FamilyContext& ctx, std::string& detail) {
  for (IdentityId id : all_identities()) {
    const VerifyRanges r =
        id == IdentityId::Reflection ? full_ranges(10, 3) : full_ranges(12, 3);
    const IdentityReport rep = verify(ctx, id, r);
    if (!rep.pass) {
      detail = std::string(to_string(id)) + " failed at " +
               (rep.first_counterexample ? rep.first_counterexample->params : "?");
      return false;
    }
  }
  return true;
}

bool check_stirling(const FamilyContext& ctx, std::string& detail) {
  const StirlingTable& t = ctx.stirling();
  for (unsigned n = 0; n <= 12; ++n) {
    for (unsigned j = 0; j <= 12; ++j) {
      BigRational acc1 = 0, acc2 = 0;
      for (unsigned m = j; m <= n; ++m) {
        acc1 += t.s1(n, m) * t.s2(m, j);
        acc2 += t.s2(n, m) * t.s1(m, j);
      }
      const BigRational expected = n == j ? 1 : 0;
      if (!(acc1 == expected && acc2 == expected)) {
        detail = "orthogonality fails at n=" + std::to_string(n) + " j=" + std::to_string(j);
        return false;
      }
    }
  }
  const auto log_s = log1p_series<BigRational>(12);
  const auto exp_s = expm1_series<BigRational>(12);
  for (unsigned m = 0; m <= 12; ++m) {
    const auto log_pow = log_s.pow(m);
    const auto exp_pow = exp_s.pow(m);
    for (unsigned l = 0; l <= 12; ++l) {
      const BigRational s1 = m <= l ? t.s1(l, m) : BigRational(0);
      const BigRational s2 = m <= l ? t.s2(l, m) : BigRational(0);
      if (!(log_pow[l] == factorial(m) * s1 / factorial(l)) ||
          !(exp_pow[l] == factorial(m) * s2 / factorial(l))) {
        detail = "series definition fails at l=" + std::to_string(l) +
                 " m=" + std::to_string(m);
        return false;
      }
    }
  }
  return true;
}

bool check_functional_equation(const FamilyContext& ctx, std::string& detail) {
  std::mt19937_64 rng(0x5eed);
  auto rand_rational = [&]() {
    const long num = static_cast<long>(rng() % 19) - 9;
    const long den = static_cast<long>(rng() % 7) + 1;
    return BigRational(num, den);
  };
  auto rand_poly = [&](unsigned max_deg) {
    std::vector<QRatFunc> c;
    const unsigned deg = rng() % (max_deg + 1);
    for (unsigned j = 0; j <= deg; ++j) c.push_back(QRatFunc::from_rational(rand_rational()));
    return Poly<QRatFunc>(std::move(c));
  };

  const Poly<QRatFunc> shift1({QRatFunc::one(), QRatFunc::one()});
  for (int i = 0; i < 100; ++i) {
    const Poly<QRatFunc> f = rand_poly(10);
    const QRatFunc lhs = QRatFunc::q() * ctx.fermionic_integral(f.compose(shift1)) +
                         ctx.fermionic_integral(f);
    if (!(lhs == q_two() * f.constant_term())) {
      detail = "one-step equation fails on sample " + std::to_string(i);
      return false;
    }
  }
  for (unsigned n = 1; n <= 5; ++n) {
    const Poly<QRatFunc> shift_n(
        {QRatFunc::from_rational(BigRational(static_cast<long>(n))), QRatFunc::one()});
    for (int i = 0; i < 20; ++i) {
      const Poly<QRatFunc> f = rand_poly(10);
      const QRatFunc q_pow_n{QPoly::monomial(BigRational::one(), n)};
      const QRatFunc lhs =
          q_pow_n * ctx.fermionic_integral(f.compose(shift_n)) +
          ctx.fermionic_integral(f).scaled_by(pow(BigRational(-1), n - 1));
      QRatFunc rhs;
      for (unsigned l = 0; l < n; ++l) {
        const QRatFunc q_pow_l{QPoly::monomial(BigRational::one(), l)};
        rhs += (q_pow_l * f.eval(QRatFunc::from_rational(BigRational(static_cast<long>(l)))))
                   .scaled_by(pow(BigRational(-1), n - 1 - l));
      }
      rhs *= q_two();
      if (!(lhs == rhs)) {
        detail = "n-step equation fails at n=" + std::to_string(n);
        return false;
      }
    }
  }
  return true;
}

bool check_classical_limits(const FamilyContext& ctx, std::string& detail) {
  const auto euler_oracle = qboole::testing::classical_euler_numbers(11);
  const std::vector<BigRational> frozen = {
      BigRational(1), BigRational(-1, 2), BigRational(0), BigRational(1, 4),
      BigRational(0), BigRational(-1, 2), BigRational(0), BigRational(17, 8)};
  for (unsigned n = 0; n <= 7; ++n) {
    if (!(euler_oracle[n] == frozen[n])) {
      detail = "oracle disagrees with the frozen Euler value at n=" + std::to_string(n);
      return false;
    }
    if (!(classical_limit(ctx.q_euler_number(n)) == frozen[n])) {
      detail = "E_n limit fails at n=" + std::to_string(n);
      return false;
    }
  }
  const auto ch_oracle = qboole::testing::classical_changhee_polys(11);
  const auto bf1 = ctx.q_boole_first_upto(10, 1, BigRational(1));
  for (unsigned n = 0; n <= 10; ++n) {
    if (!(classical_limit(bf1[n].scaled(QRatFunc::from_rational(2))) == ch_oracle[n])) {
      detail = "2 Bl_n(x|1) vs classical Changhee fails at n=" + std::to_string(n);
      return false;
    }
  }
  for (const BigRational& lambda : default_lambdas()) {
    const auto boole_oracle = qboole::testing::classical_boole_polys(11, lambda);
    const auto bf = ctx.q_boole_first_upto(10, 1, lambda);
    for (unsigned n = 0; n <= 10; ++n) {
      if (!(classical_limit(bf[n]) == boole_oracle[n])) {
        detail = "classical Boole fails at n=" + std::to_string(n) +
                 " lambda=" + lambda.str();
        return false;
      }
    }
  }
  return true;
}

bool check_structure(const FamilyContext& ctx, std::string& detail) {
  auto one_plus_q_pow = [](unsigned j) {
    QPoly p = QPoly::one();
    for (unsigned i = 0; i < j; ++i) p *= qpoly_from({1, 1});
    return p;
  };
  for (unsigned k = 1; k <= 3; ++k) {
    const QRatFunc lead = ratfunc_pow(q_two(), k).reciprocal();
    for (const BigRational& lambda : default_lambdas()) {
      const auto bf = ctx.q_boole_first_upto(12, k, lambda);
      const auto numbers = ctx.q_boole_first_at_upto(12, k, lambda, BigRational(0));
      for (unsigned n = 0; n <= 12; ++n) {
        if (bf[n].degree() != static_cast<int>(n) || !(bf[n].leading() == lead)) {
          detail = "degree/leading fails at n=" + std::to_string(n) +
                   " k=" + std::to_string(k) + " lambda=" + lambda.str();
          return false;
        }
        const QPoly& den = numbers[n].den();
        const unsigned j = static_cast<unsigned>(den.degree());
        if (j > n + k || !(den == one_plus_q_pow(j))) {
          detail = "denominator shape fails at n=" + std::to_string(n) +
                   " k=" + std::to_string(k) + " lambda=" + lambda.str();
          return false;
        }
      }
    }
  }
  for (unsigned n = 0; n <= 12; ++n) {
    const QPoly& den = ctx.q_euler_number(n).den();
    const unsigned j = static_cast<unsigned>(den.degree());
    if (j > n || !(den == one_plus_q_pow(j))) {
      detail = "Euler denominator shape fails at n=" + std::to_string(n);
      return false;
    }
  }
  return true;
}

bool check_cli(std::string& detail) {
  if (g_cli_path.empty()) {
    detail = "no CLI path (pass as argv[1] or set QBOOLE_CLI)";
    return false;
  }
  const std::string table_args =
      "table --family boole1 --n-max 8 --order 2 --lambda 1/2 --x sym --q sym --format json";
  const CliResult a = run_cli(table_args);
  const CliResult b = run_cli(table_args);
  if (a.exit_code != 0 || a.out.empty() || a.out != b.out) {
    detail = "table re-runs are not byte-identical";
    return false;
  }
  const std::string verify_det_args =
      "verify --identity thm2.4 --n-max 6 --order-max 2 --no-timing --format json";
  const CliResult v1 = run_cli(verify_det_args);
  const CliResult v2 = run_cli(verify_det_args);
  if (v1.exit_code != 0 || v1.out != v2.out) {
    detail = "verify re-runs are not byte-identical";
    return false;
  }

  /* Re-parse the table and compare against in-memory canonical values. */
  const FamilyContext ctx(8);
  const auto expected = ctx.q_boole_first_upto(8, 2, BigRational(1, 2));
  std::istringstream in(a.out);
  std::string line;
  unsigned n = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const json rec = json::parse(line);
    std::vector<QRatFunc> coeffs(static_cast<std::size_t>(expected[n].degree()) + 1);
    for (const json& entry : rec.at("value")) {
      coeffs.at(entry.at("deg").get<std::size_t>()) =
          QRatFunc(qpoly_from_strings(entry.at("num").get<std::vector<std::string>>()),
                   qpoly_from_strings(entry.at("den").get<std::vector<std::string>>()));
    }
    if (!(XPoly(std::move(coeffs)) == expected[n])) {
      detail = "round-trip mismatch at n=" + std::to_string(n);
      return false;
    }
    ++n;
  }
  if (n != 9) {
    detail = "expected 9 records, saw " + std::to_string(n);
    return false;
  }

  const CliResult full = run_cli("verify --identity all --n-max 8 --order-max 2");
  if (full.exit_code != 0) {
    detail = "verify --identity all --n-max 8 --order-max 2 exited " +
             std::to_string(full.exit_code);
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) {
    g_cli_path = argv[1];
  } else if (const char* env = std::getenv("QBOOLE_CLI")) {
    g_cli_path = env;
  }

  const FamilyContext ctx(12);

  criterion(1, "dual-path q-Boole agreement, n<=12, k<=3, six lambdas, symbolic x", 30.0,
            [&](std::string& d) { return check_dual_path(ctx, d); });
  criterion(2, "all identity verifiers pass (n,m<=12, reflection n<=10, k<=3, symbolic x)",
            60.0, [&](std::string& d) { return check_all_verifiers(ctx, d); });
  criterion(3, "Stirling orthogonality and series definitions through order 12", 1.0,
            [&](std::string& d) { return check_stirling(ctx, d); });
  criterion(4, "fermionic functional equation, 100 random polynomials + n-step form", 5.0,
            [&](std::string& d) { return check_functional_equation(ctx, d); });
  criterion(5, "classical limits at q=1 against independent rational oracles", 30.0,
            [&](std::string& d) { return check_classical_limits(ctx, d); });
  criterion(6, "degree, leading coefficient and denominator shapes, n<=12", 30.0,
            [&](std::string& d) { return check_structure(ctx, d); });
  criterion(7, "CLI determinism, JSON round-trip, full verify run", 60.0,
            [&](std::string& d) { return check_cli(d); });

  if (g_failures > 0) {
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all acceptance criteria pass\n";
  return 0;
}
