/* Command-line front end: emit family tables and run the identity suite
 * with machine-readable output.
 *
 * Exit codes: 0 success / all identities pass, 1 identity counterexample,
 * 2 usage or configuration error. Data goes to stdout, diagnostics to
 * stderr; identical configuration produces byte-identical output (verify
 * timing can be suppressed with --no-timing).
 */

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qboole/families.hpp"
#include "qboole/format.hpp"
#include "qboole/identities.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qboole;

struct TableConfig {
  std::string family;
  unsigned n_max = 8;
  unsigned order = 1;
  std::string lambda = "1";
  std::string x = "0";
  std::string q = "sym";
  std::string format = "json";
};

struct VerifyConfig {
  std::string identity = "all";
  unsigned n_max = 8;
  unsigned order_max = 2;
  std::string lambdas = "1,2,3,-1,-2,1/2";
  std::string x_mode = "sym";
  unsigned samples = 4;
  std::uint64_t seed = 0;
  std::string format = "json";
  bool no_timing = false;
  bool inject_stirling_fault = false;
};

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return 2;
}

bool family_takes_lambda(const std::string& family) {
  return family == "boole1" || family == "boole2";
}

ordered_json ratfunc_json(const QRatFunc& v) {
  return ordered_json{{"num", coefficient_strings(v.num())},
                      {"den", coefficient_strings(v.den())}};
}

/* Symbolic-x value: nonzero coefficients as (degree, value) pairs, ascending. */
ordered_json xpoly_json(const XPoly& p, const std::optional<BigRational>& q0) {
  ordered_json arr = ordered_json::array();
  for (std::size_t d = 0; d < p.coefficients().size(); ++d) {
    const QRatFunc& c = p.coefficients()[d];
    if (c.is_zero()) continue;
    ordered_json entry;
    entry["deg"] = d;
    if (q0) {
      entry["value"] = c.eval(*q0).str();
    } else {
      entry["num"] = coefficient_strings(c.num());
      entry["den"] = coefficient_strings(c.den());
    }
    arr.push_back(std::move(entry));
  }
  return arr;
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

int run_table(const TableConfig& cfg) {
  if (cfg.n_max > 64) return usage_error("--n-max must be at most 64");
  if (cfg.order < 1) return usage_error("--order must be at least 1");
  if (cfg.family == "changhee" && cfg.order != 1)
    return usage_error("the q-Changhee family has no higher order");

  std::optional<BigRational> lambda;
  if (family_takes_lambda(cfg.family)) {
    try {
      lambda = BigRational::from_string(cfg.lambda);
    } catch (const std::exception&) {
      return usage_error("--lambda must be a rational number p/q");
    }
    if (lambda->is_zero()) return usage_error("--lambda must be nonzero");
  }

  std::optional<BigRational> x;
  if (cfg.x != "sym") {
    try {
      x = BigRational::from_string(cfg.x);
    } catch (const std::exception&) {
      return usage_error("--x must be 'sym' or a rational number");
    }
  }
  std::optional<BigRational> q0;
  if (cfg.q != "sym") {
    try {
      q0 = BigRational::from_string(cfg.q);
    } catch (const std::exception&) {
      return usage_error("--q must be 'sym' or a rational number");
    }
  }

  const FamilyContext ctx(cfg.n_max);
  const unsigned k = cfg.order;

  /* Values for n = 0..n_max, either as polynomials in x or specialized. */
  std::vector<XPoly> sym_values;
  std::vector<QRatFunc> num_values;
  try {
    if (cfg.family == "euler") {
      for (unsigned n = 0; n <= cfg.n_max; ++n) {
        if (x)
          num_values.push_back(ctx.q_euler_poly_at(n, k, *x));
        else
          sym_values.push_back(ctx.q_euler_poly(n, k));
      }
    } else if (cfg.family == "boole1") {
      if (x)
        num_values = ctx.q_boole_first_at_upto(cfg.n_max, k, *lambda, *x);
      else
        sym_values = ctx.q_boole_first_upto(cfg.n_max, k, *lambda);
    } else if (cfg.family == "boole2") {
      if (x)
        num_values = ctx.q_boole_second_at_upto(cfg.n_max, k, *lambda, *x);
      else
        sym_values = ctx.q_boole_second_upto(cfg.n_max, k, *lambda);
    } else {  // changhee
      if (x)
        num_values = ctx.q_changhee_at_upto(cfg.n_max, *x);
      else
        sym_values = ctx.q_changhee_upto(cfg.n_max);
    }
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  }

  std::ostringstream out;
  if (cfg.format == "csv") out << "family,n,k,lambda,x,q,xdeg,num,den\n";
  for (unsigned n = 0; n <= cfg.n_max; ++n) {
    const std::string lambda_str = lambda ? lambda->str() : "";
    try {
      if (cfg.format == "json") {
        ordered_json rec;
        rec["family"] = cfg.family;
        rec["n"] = n;
        rec["k"] = k;
        rec["lambda"] = lambda ? ordered_json(lambda_str) : ordered_json(nullptr);
        rec["x"] = x ? x->str() : "sym";
        rec["q"] = q0 ? q0->str() : "sym";
        if (x) {
          rec["value"] = q0 ? ordered_json(num_values[n].eval(*q0).str())
                            : ratfunc_json(num_values[n]);
        } else {
          rec["value"] = xpoly_json(sym_values[n], q0);
        }
        out << rec.dump() << "\n";
      } else if (cfg.format == "csv") {
        const std::string prefix = cfg.family + "," + std::to_string(n) + "," +
                                   std::to_string(k) + "," + lambda_str + "," +
                                   (x ? x->str() : "sym") + "," + (q0 ? q0->str() : "sym");
        if (x) {
          if (q0) {
            out << prefix << ",," << num_values[n].eval(*q0).str() << ",1\n";
          } else {
            out << prefix << ",," << join(coefficient_strings(num_values[n].num()), ';')
                << "," << join(coefficient_strings(num_values[n].den()), ';') << "\n";
          }
        } else {
          for (std::size_t d = 0; d < sym_values[n].coefficients().size(); ++d) {
            const QRatFunc& c = sym_values[n].coefficients()[d];
            if (c.is_zero()) continue;
            if (q0) {
              out << prefix << "," << d << "," << c.eval(*q0).str() << ",1\n";
            } else {
              out << prefix << "," << d << "," << join(coefficient_strings(c.num()), ';')
                  << "," << join(coefficient_strings(c.den()), ';') << "\n";
            }
          }
        }
      } else {  // pretty
        out << cfg.family << " n=" << n << " k=" << k;
        if (lambda) out << " lambda=" << lambda_str;
        out << ": ";
        if (x) {
          out << (q0 ? num_values[n].eval(*q0).str() : to_string(num_values[n]));
        } else if (q0) {
          out << to_string(eval_coefficients_at_q(sym_values[n], *q0), "x");
        } else {
          out << to_string(sym_values[n]);
        }
        out << "\n";
      }
    } catch (const pole_error& e) {
      return usage_error(std::string(e.what()) + " (choose a q where denominators do not vanish)");
    }
  }
  std::cout << out.str();
  return 0;
}

ordered_json report_json(const IdentityReport& rep, double millis, bool with_timing) {
  ordered_json j;
  j["id"] = std::string(to_string(rep.id));
  j["statement"] = std::string(identity_statement(rep.id));
  j["status"] = rep.pass ? "pass" : "fail";
  j["cases"] = rep.cases;
  j["millis"] = with_timing ? millis : 0.0;
  if (rep.first_counterexample) {
    j["counterexample"] = ordered_json{{"params", rep.first_counterexample->params},
                                       {"lhs", rep.first_counterexample->lhs},
                                       {"rhs", rep.first_counterexample->rhs}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

int run_verify(const VerifyConfig& cfg) {
  if (cfg.n_max > 64) return usage_error("--n-max must be at most 64");
  if (cfg.order_max < 1) return usage_error("--order-max must be at least 1");
  if (cfg.x_mode != "sym" && cfg.x_mode != "sampled")
    return usage_error("--x must be 'sym' or 'sampled'");

  std::vector<IdentityId> ids;
  if (cfg.identity == "all") {
    ids = all_identities();
  } else {
    const auto id = identity_from_string(cfg.identity);
    if (!id) return usage_error("unknown identity '" + cfg.identity + "'");
    ids = {*id};
  }

  VerifyRanges ranges;
  ranges.n_max = cfg.n_max;
  ranges.k_max = cfg.order_max;
  ranges.symbolic_x = cfg.x_mode == "sym";
  ranges.sample_count = cfg.samples;
  ranges.seed = cfg.seed;
  ranges.lambdas.clear();
  std::stringstream ss(cfg.lambdas);
  std::string item;
  while (std::getline(ss, item, ',')) {
    BigRational v;
    try {
      v = BigRational::from_string(item);
    } catch (const std::exception&) {
      return usage_error("--lambda entries must be rational numbers");
    }
    if (v.is_zero()) return usage_error("--lambda entries must be nonzero");
    ranges.lambdas.push_back(v);
  }
  if (ranges.lambdas.empty()) return usage_error("--lambda list is empty");

  FamilyContext ctx(cfg.n_max);
  if (cfg.inject_stirling_fault && cfg.n_max >= 2)
    ctx.mutable_stirling_for_testing().corrupt_s1_for_testing(2, 1, BigRational::one());

  bool all_pass = true;
  ordered_json identities = ordered_json::array();
  std::vector<std::string> pretty_lines;
  for (IdentityId id : ids) {
    const auto t0 = std::chrono::steady_clock::now();
    const IdentityReport rep = verify(ctx, id, ranges);
    const double millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    all_pass = all_pass && rep.pass;
    identities.push_back(report_json(rep, millis, !cfg.no_timing));
    std::ostringstream line;
    line << to_string(id) << ": " << (rep.pass ? "pass" : "FAIL") << " (" << rep.cases
         << " cases";
    if (!cfg.no_timing) line << ", " << millis << " ms";
    line << ")";
    if (rep.first_counterexample) {
      line << "\n  at " << rep.first_counterexample->params
           << "\n  lhs = " << rep.first_counterexample->lhs
           << "\n  rhs = " << rep.first_counterexample->rhs;
    }
    pretty_lines.push_back(line.str());
  }

  if (cfg.format == "json") {
    ordered_json out;
    out["config"] = ordered_json{{"identity", cfg.identity},
                                 {"n_max", cfg.n_max},
                                 {"order_max", cfg.order_max},
                                 {"lambda", cfg.lambdas},
                                 {"x", cfg.x_mode},
                                 {"samples", cfg.samples},
                                 {"seed", cfg.seed}};
    out["identities"] = identities;
    out["all_pass"] = all_pass;
    std::cout << out.dump(2) << "\n";
  } else {
    std::ostringstream out;
    for (const std::string& line : pretty_lines) out << line << "\n";
    out << (all_pass ? "all identities pass" : "FAILURES detected") << "\n";
    std::cout << out.str();
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qboole: exact q-Boole / q-Euler / q-Changhee polynomial toolkit"};
  app.require_subcommand(1);

  TableConfig tcfg;
  CLI::App* table = app.add_subcommand("table", "emit a family table for n = 0..n-max");
  table->add_option("--family", tcfg.family, "euler | boole1 | boole2 | changhee")
      ->required()
      ->check(CLI::IsMember({"euler", "boole1", "boole2", "changhee"}));
  table->add_option("--n-max", tcfg.n_max, "largest index n (<= 64)");
  table->add_option("--order,-k", tcfg.order, "order k >= 1 (boole1/boole2/euler)");
  table->add_option("--lambda", tcfg.lambda, "rational lambda != 0 (boole1/boole2)");
  table->add_option("--x", tcfg.x, "'sym' or a rational evaluation point");
  table->add_option("--q", tcfg.q, "'sym' or a rational specialization of q");
  table->add_option("--format", tcfg.format, "json | csv | pretty")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));

  VerifyConfig vcfg;
  CLI::App* ver = app.add_subcommand("verify", "run identity verifiers");
  ver->add_option("--identity", vcfg.identity,
                  "'all' or one of: thm2.1..thm2.9 cor2.3 eq2.13 eq2.35 reflection");
  ver->add_option("--n-max", vcfg.n_max, "largest index/degree (<= 64)");
  ver->add_option("--order-max", vcfg.order_max, "largest order k");
  ver->add_option("--lambda", vcfg.lambdas, "comma-separated nonzero rationals");
  ver->add_option("--x", vcfg.x_mode, "'sym' (polynomial identity) or 'sampled'");
  ver->add_option("--samples", vcfg.samples, "sample count for --x sampled");
  ver->add_option("--seed", vcfg.seed, "seed for --x sampled");
  ver->add_option("--format", vcfg.format, "json | pretty")
      ->check(CLI::IsMember({"json", "pretty"}));
  ver->add_flag("--no-timing", vcfg.no_timing, "zero out timing fields (byte-stable output)");
  ver->add_flag("--inject-stirling-fault", vcfg.inject_stirling_fault,
                "test hook: corrupt S1(2,1) to demonstrate counterexample reporting");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (table->parsed()) return run_table(tcfg);
    return run_verify(vcfg);
  } catch (const std::exception& e) {
    return usage_error(e.what());
  }
}
