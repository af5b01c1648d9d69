#include "qboole/identities.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "qboole/format.hpp"

namespace qboole {

const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> k = {
      IdentityId::Thm2_1, IdentityId::Thm2_2, IdentityId::Cor2_3,  IdentityId::Thm2_4,
      IdentityId::Thm2_5, IdentityId::Thm2_6, IdentityId::Thm2_7,  IdentityId::Thm2_8,
      IdentityId::Thm2_9, IdentityId::Eq2_13, IdentityId::Eq2_35, IdentityId::Reflection,
  };
  return k;
}

std::string_view to_string(IdentityId id) {
  switch (id) {
    case IdentityId::Thm2_1: return "thm2.1";
    case IdentityId::Thm2_2: return "thm2.2";
    case IdentityId::Cor2_3: return "cor2.3";
    case IdentityId::Thm2_4: return "thm2.4";
    case IdentityId::Thm2_5: return "thm2.5";
    case IdentityId::Thm2_6: return "thm2.6";
    case IdentityId::Thm2_7: return "thm2.7";
    case IdentityId::Thm2_8: return "thm2.8";
    case IdentityId::Thm2_9: return "thm2.9";
    case IdentityId::Eq2_13: return "eq2.13";
    case IdentityId::Eq2_35: return "eq2.35";
    case IdentityId::Reflection: return "reflection";
  }
  return "?";
}

std::optional<IdentityId> identity_from_string(std::string_view name) {
  for (IdentityId id : all_identities())
    if (to_string(id) == name) return id;
  return std::nullopt;
}

std::string_view identity_statement(IdentityId id) {
  switch (id) {
    case IdentityId::Thm2_1:
      return "Bl_{n,q}(x|l) = (1/[2]_q) sum_m l^m E_{m,q}(x/l) S1(n,m), and "
             "I(binom(x+l*y, n)) = ([2]_q/n!) Bl_{n,q}(x|l)";
    case IdentityId::Thm2_2:
      return "sum_{n<=m} Bl_{n,q}(x|l) S2(m,n) = (1/[2]_q) E_{m,q}(x/l) l^m";
    case IdentityId::Cor2_3:
      return "Bl^{(k)}_{n,q}(l) = sum_{l1+..+lk=n} multinomial * prod Bl_{li,q}(l)";
    case IdentityId::Thm2_4:
      return "Bl^{(k)}_{n,q}(l) = (1/[2]_q^k) sum_l S1(n,l) l^l E^{(k)}_{l,q}";
    case IdentityId::Thm2_5:
      return "sum_{n<=m} Bl^{(k)}_{n,q}(l) S2(m,n) = (1/[2]_q^k) E^{(k)}_{m,q} l^m";
    case IdentityId::Thm2_6:
      return "Bl^{(k)}_{n,q}(x|l) = sum_m C(n,m) Bl^{(k)}_{n-m,q}(l) (x)_m";
    case IdentityId::Thm2_7:
      return "sum_{n<=m} Bl^{(k)}_{n,q}(x|l) S2(m,n) = (1/[2]_q^k) l^m E^{(k)}_{m,q}(x/l)";
    case IdentityId::Thm2_8:
      return "Bl^{(k)}_{n,q}(x|l) = (1/[2]_q^k) sum_l S1(n,l) l^l E^{(k)}_{l,q}(x/l)";
    case IdentityId::Thm2_9:
      return "((-1)^m l^m/[2]_q) E_{m,q}(-x/l) = sum_{n<=m} Bl2_{n,q}(x|l) S2(m,n), and "
             "Bl2_{m,q}(x|l) = (1/[2]_q) sum_l S1(m,l) (-1)^l l^l E_{l,q}(-x/l)";
    case IdentityId::Eq2_13: return "[2]_q Bl_{n,q}(x|1) = Ch_{n,q}(x)";
    case IdentityId::Eq2_35: return "Bl2^{(k)}_{n,q}(x|l) = Bl^{(k)}_{n,q}(x|-l)";
    case IdentityId::Reflection:
      return "(-1)^n [2]_q Bl_{n,q}(x|l)/n! = [2]_q sum_{m=1..n} C(n-1,m-1) "
             "Bl2_{m,q}(-x|l)/m!  (n >= 1)";
  }
  return "?";
}

std::vector<BigRational> default_lambdas() {
  return {BigRational(1), BigRational(2), BigRational(3),
          BigRational(-1), BigRational(-2), BigRational(1, 2)};
}

namespace {

/* splitmix64; hand-rolled so sampled-x runs are byte-stable across standard
 * libraries. */
struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

std::vector<BigRational> sample_points(std::uint64_t seed, unsigned count) {
  SplitMix64 rng{seed ^ 0x51f15eedc0ffee42ULL};
  std::vector<BigRational> xs;
  xs.reserve(count);
  while (xs.size() < count) {
    const long num = static_cast<long>(rng.next() % 19) - 9;
    const long den = static_cast<long>(rng.next() % 9) + 1;
    xs.emplace_back(num, den);
  }
  return xs;
}

struct Runner {
  IdentityReport rep;

  template <typename V>
  bool check(const V& lhs, const V& rhs, std::string params) {
    ++rep.cases;
    if (lhs == rhs) return true;
    rep.pass = false;
    rep.first_counterexample =
        Counterexample{std::move(params), to_string(lhs), to_string(rhs)};
    return false;
  }
};

std::string params_str(unsigned n, std::optional<unsigned> k, const BigRational* lambda,
                       const char* x_desc) {
  std::ostringstream out;
  out << "n=" << n;
  if (k) out << " k=" << *k;
  if (lambda) out << " lambda=" << lambda->str();
  if (x_desc) out << " x=" << x_desc;
  return out.str();
}

QRatFunc q_two_inv_pow(unsigned k) { return ratfunc_pow(q_two(), k).reciprocal(); }

/* ---- Theorem 2.1: order-1 Stirling transform + the integral form ------- */

void run_thm2_1(const FamilyContext& ctx, const VerifyRanges& r, Runner& run) {
  for (const BigRational& lambda : r.lambdas) {
    if (r.symbolic_x) {
      const auto bf_gen = ctx.q_boole_first_upto(r.n_max, 1, lambda, BuildPath::GenFunc);
      const auto bf_st =
          ctx.q_boole_first_upto(r.n_max, 1, lambda, BuildPath::StirlingTransform);
      for (unsigned n = 0; n <= r.n_max; ++n) {
        if (!run.check(bf_gen[n], bf_st[n], params_str(n, {}, &lambda, "sym"))) return;
        /* I(binom(x + lambda*y, n)) = ([2]_q/n!) Bl_{n,q}(x|lambda), with the
         * falling factorial built by direct product, not via S1. */
        const YPoly u(
            {XPoly::identity(), XPoly::constant(QRatFunc::from_rational(lambda))});
        const BigRational inv_nfact = factorial(n).reciprocal();
        const YPoly f =
            falling_factorial_of(u, n).scaled(XPoly::from_rational(inv_nfact));
        const XPoly lhs = ctx.fermionic_integral<XPoly>(f);
        const XPoly rhs = bf_gen[n].scaled(q_two().scaled_by(inv_nfact));
        if (!run.check(lhs, rhs, params_str(n, {}, &lambda, "sym(integral)"))) return;
      }
    } else {
      for (const BigRational& x0 : sample_points(r.seed, r.sample_count)) {
        const auto bf_gen =
            ctx.q_boole_first_at_upto(r.n_max, 1, lambda, x0, BuildPath::GenFunc);
        const auto bf_st =
            ctx.q_boole_first_at_upto(r.n_max, 1, lambda, x0, BuildPath::StirlingTransform);
        for (unsigned n = 0; n <= r.n_max; ++n) {
          if (!run.check(bf_gen[n], bf_st[n], params_str(n, {}, &lambda, x0.str().c_str())))
            return;
          const Poly<QRatFunc> u(
              {QRatFunc::from_rational(x0), QRatFunc::from_rational(lambda)});
          const BigRational inv_nfact = factorial(n).reciprocal();
          const Poly<QRatFunc> f =
              falling_factorial_of(u, n).scaled(QRatFunc::from_rational(inv_nfact));
          const QRatFunc lhs = ctx.fermionic_integral<QRatFunc>(f);
          const QRatFunc rhs = bf_gen[n] * q_two().scaled_by(inv_nfact);
          if (!run.check(lhs, rhs, params_str(n, {}, &lambda, x0.str().c_str()))) return;
        }
      }
    }
  }
}

/* ---- Theorem 2.2: inverse transform via S2 ------------------------------ */

void run_thm2_2(const FamilyContext& ctx, const VerifyRanges& r, Runner& run) {
  const StirlingTable& st = ctx.stirling();
  for (const BigRational& lambda : r.lambdas) {
    const QRatFunc inv2 = q_two().reciprocal();
    if (r.symbolic_x) {
      const auto bf = ctx.q_boole_first_upto(r.n_max, 1, lambda, BuildPath::GenFunc);
      const QRatFunc arg = QRatFunc::from_rational(lambda.reciprocal());
      for (unsigned m = 0; m <= r.n_max; ++m) {
        XPoly lhs;
        for (unsigned n = 0; n <= m; ++n)
          lhs += bf[n].scaled(QRatFunc::from_rational(st.s2(m, n)));
        const XPoly rhs = ctx.q_euler_poly(m, 1)
                              .with_argument_scaled(arg)
                              .scaled(inv2.scaled_by(pow(lambda, m)));
        if (!run.check(lhs, rhs, params_str(m, {}, &lambda, "sym"))) return;
      }
    } else {
      for (const BigRational& x0 : sample_points(r.seed, r.sample_count)) {
        const auto bf = ctx.q_boole_first_at_upto(r.n_max, 1, lambda, x0, BuildPath::GenFunc);
        for (unsigned m = 0; m <= r.n_max; ++m) {
          QRatFunc lhs;
          for (unsigned n = 0; n <= m; ++n) lhs += bf[n].scaled_by(st.s2(m, n));
          const QRatFunc rhs =
              ctx.q_euler_poly_at(m, 1, x0 / lambda) * inv2.scaled_by(pow(lambda, m));
          if (!run.check(lhs, rhs, params_str(m, {}, &lambda, x0.str().c_str()))) return;
        }
      }
    }
  }
}

/* ---- Corollary 2.3: order-k numbers as multinomial convolution ---------- */

void run_cor2_3(const FamilyContext& ctx, const VerifyRanges& r, Runner& run) {
  for (const BigRational& lambda : r.lambdas) {
    const auto bl1 = ctx.q_boole_first_at_upto(r.n_max, 1, lambda, BigRational::zero(),
                                               BuildPath::GenFunc);
    for (unsigned k = 1; k <= r.k_max; ++k) {
      const auto blk = ctx.q_boole_first_at_upto(r.n_max, k, lambda, BigRational::zero(),
                                                 BuildPath::GenFunc);
      for (unsigned n = 0; n <= r.n_max; ++n) {
        QRatFunc rhs;
        for_each_composition(n, k, [&](std::span<const unsigned> parts) {
          QRatFunc term = QRatFunc::from_rational(multinomial(n, parts));
          for (unsigned p : parts) term *= bl1[p];
          rhs += term;
        });
        if (!run.check(blk[n], rhs, params_str(n, k, &lambda, nullptr))) return;
      }
    }
  }
}

/* ---- Theorem 2.4: order-k numbers via S1 -------------------------------- */

void run_thm2_4(const FamilyContext& ctx, const VerifyRanges& r, Runner& run) {
  const StirlingTable& st = ctx.stirling();
  for (const BigRational& lambda : r.lambdas) {
    for (unsigned k = 1; k <= r.k_max; ++k) {
      const auto blk = ctx.q_boole_first_at_upto(r.n_max, k, lambda, BigRational::zero(),
                                                 BuildPath::GenFunc);
      const QRatFunc norm = q_two_inv_pow(k);
      for (unsigned n = 0; n <= r.n_max; ++n) {
        QRatFunc rhs;
        BigRational lambda_pow = BigRational::one();
        for (unsigned l = 0; l <= n; ++l) {
          rhs += ctx.q_euler_number(l, k).scaled_by(st.s1(n, l) * lambda_pow);
          lambda_pow *= lambda;
        }
        rhs *= norm;
        if (!run.check(blk[n], rhs, params_str(n, k, &lambda, nullptr))) return;
      }
    }
  }
}

/* ---- Theorem 2.5: order-k numbers, inverse transform via S2 ------------- */

void run_thm2_5(const FamilyContext& ctx, const VerifyRanges& r, Runner& run) {
  const StirlingTable& st = ctx.stirling();
  for (const BigRational& lambda : r.lambdas) {
    for (unsigned k = 1; k <= r.k_max; ++k) {
      const auto blk = ctx.q_boole_first_at_upto(r.n_max, k, lambda, BigRational::zero(),
                                                 BuildPath::GenFunc);
      const QRatFunc norm = q_two_inv_pow(k);
      for (unsigned m = 0; m <= r.n_max; ++m) {
        QRatFunc lhs;
        for (unsigned n = 0; n <= m; ++n) lhs += blk[n].scaled_by(st.s2(m, n));
        const QRatFunc rhs = ctx.q_euler_number(m, k) * norm.scaled_by(pow(lambda, m));
        if (!run.check(lhs, rhs, params_str(m, k, &lambda, nullptr))) return;
      }
    }
  }
}

/* ---- Theorem 2.6: polynomials from numbers in the (x)_m basis ----------- */

void run_thm2_6(const FamilyContext& ctx, const VerifyRanges& r, Runner& run) {
  const StirlingTable& st = ctx.stirling();
  for (const BigRational& lambda : r.lambdas) {
    for (unsigned k = 1; k <= r.k_max; ++k) {
      const auto blk0 = ctx.q_boole_first_at_upto(r.n_max, k, lambda, BigRational::zero(),
                                                  BuildPath::GenFunc);
      if (r.symbolic_x) {
        const auto blkx = ctx.q_boole_first_upto(r.n_max, k, lambda, BuildPath::GenFunc);
        for (unsigned n = 0; n <= r.n_max; ++n) {
          XPoly rhs;
          for (unsigned m = 0; m <= n; ++m)
            rhs += falling_factorial_as_powers(st, m).scaled(
                blk0[n - m].scaled_by(binomial(n, m)));
          if (!run.check(blkx[n], rhs, params_str(n, k, &lambda, "sym"))) return;
        }
      } else {
        for (const BigRational& x0 : sample_points(r.seed, r.sample_count)) {
          const auto blkx =
              ctx.q_boole_first_at_upto(r.n_max, k, lambda, x0, BuildPath::GenFunc);
          for (unsigned n = 0; n <= r.n_max; ++n) {
            QRatFunc rhs;
            for (unsigned m = 0; m <= n; ++m)
              rhs += blk0[n - m].scaled_by(binomial(n, m) * falling_factorial_at(x0, m));
            if (!run.check(blkx[n], rhs, params_str(n, k, &lambda, x0.str().c_str())))
              return;
          }
        }
      }
    }
  }
}

/* ---- Theorem 2.7: order-k polynomials, inverse transform via S2 --------- */

void run_thm2_7(const FamilyContext& ctx, const VerifyRanges& r, Runner& run) {
  const StirlingTable& st = ctx.stirling();
  for (const BigRational& lambda : r.lambdas) {
    for (unsigned k = 1; k <= r.k_max; ++k) {
      const QRatFunc norm = q_two_inv_pow(k);
      if (r.symbolic_x) {
        const auto blkx = ctx.q_boole_first_upto(r.n_max, k, lambda, BuildPath::GenFunc);
        const QRatFunc arg = QRatFunc::from_rational(lambda.reciprocal());
        for (unsigned m = 0; m <= r.n_max; ++m) {
          XPoly lhs;
          for (unsigned n = 0; n <= m; ++n)
            lhs += blkx[n].scaled(QRatFunc::from_rational(st.s2(m, n)));
          const XPoly rhs = ctx.q_euler_poly(m, k)
                                .with_argument_scaled(arg)
                                .scaled(norm.scaled_by(pow(lambda, m)));
          if (!run.check(lhs, rhs, params_str(m, k, &lambda, "sym"))) return;
        }
      } else {
        for (const BigRational& x0 : sample_points(r.seed, r.sample_count)) {
          const auto blkx =
              ctx.q_boole_first_at_upto(r.n_max, k, lambda, x0, BuildPath::GenFunc);
          for (unsigned m = 0; m <= r.n_max; ++m) {
            QRatFunc lhs;
            for (unsigned n = 0; n <= m; ++n) lhs += blkx[n].scaled_by(st.s2(m, n));
            const QRatFunc rhs =
                ctx.q_euler_poly_at(m, k, x0 / lambda) * norm.scaled_by(pow(lambda, m));
            if (!run.check(lhs, rhs, params_str(m, k, &lambda, x0.str().c_str()))) return;
          }
        }
      }
    }
  }
}

/* ---- Theorem 2.8: order-k dual path ------------------------------------- */

void run_thm2_8(const FamilyContext& ctx, const VerifyRanges& r, Runner& run) {
  for (const BigRational& lambda : r.lambdas) {
    for (unsigned k = 1; k <= r.k_max; ++k) {
      if (r.symbolic_x) {
        const auto gen = ctx.q_boole_first_upto(r.n_max, k, lambda, BuildPath::GenFunc);
        const auto st =
            ctx.q_boole_first_upto(r.n_max, k, lambda, BuildPath::StirlingTransform);
        for (unsigned n = 0; n <= r.n_max; ++n)
          if (!run.check(gen[n], st[n], params_str(n, k, &lambda, "sym"))) return;
      } else {
        for (const BigRational& x0 : sample_points(r.seed, r.sample_count)) {
          const auto gen =
              ctx.q_boole_first_at_upto(r.n_max, k, lambda, x0, BuildPath::GenFunc);
          const auto st = ctx.q_boole_first_at_upto(r.n_max, k, lambda, x0,
                                                    BuildPath::StirlingTransform);
          for (unsigned n = 0; n <= r.n_max; ++n)
            if (!run.check(gen[n], st[n], params_str(n, k, &lambda, x0.str().c_str())))
              return;
        }
      }
    }
  }
}

/* ---- Theorem 2.9: second kind, both displays (k = 1) --------------------- */

void run_thm2_9(const FamilyContext& ctx, const VerifyRanges& r, Runner& run) {
  const StirlingTable& st = ctx.stirling();
  const QRatFunc inv2 = q_two().reciprocal();
  for (const BigRational& lambda : r.lambdas) {
    if (r.symbolic_x) {
      const auto bs = ctx.q_boole_second_upto(r.n_max, 1, lambda, BuildPath::GenFunc);
      const QRatFunc arg = QRatFunc::from_rational(-(lambda.reciprocal()));
      std::vector<XPoly> euler_neg(r.n_max + 1);
      for (unsigned l = 0; l <= r.n_max; ++l)
        euler_neg[l] = ctx.q_euler_poly(l, 1).with_argument_scaled(arg);
      for (unsigned m = 0; m <= r.n_max; ++m) {
        /* Display 1: ((-1)^m lambda^m/[2]_q) E_{m,q}(-x/lambda). */
        const XPoly lhs1 = euler_neg[m].scaled(inv2.scaled_by(pow(-lambda, m)));
        XPoly rhs1;
        for (unsigned n = 0; n <= m; ++n)
          rhs1 += bs[n].scaled(QRatFunc::from_rational(st.s2(m, n)));
        if (!run.check(lhs1, rhs1, params_str(m, {}, &lambda, "sym(d1)"))) return;
        /* Display 2. */
        XPoly rhs2;
        BigRational neg_lambda_pow = BigRational::one();
        for (unsigned l = 0; l <= m; ++l) {
          const BigRational c = st.s1(m, l) * neg_lambda_pow;
          if (!c.is_zero()) rhs2 += euler_neg[l].scaled(inv2.scaled_by(c));
          neg_lambda_pow *= -lambda;
        }
        if (!run.check(bs[m], rhs2, params_str(m, {}, &lambda, "sym(d2)"))) return;
      }
    } else {
      for (const BigRational& x0 : sample_points(r.seed, r.sample_count)) {
        const auto bs =
            ctx.q_boole_second_at_upto(r.n_max, 1, lambda, x0, BuildPath::GenFunc);
        const BigRational arg = -(x0 / lambda);
        for (unsigned m = 0; m <= r.n_max; ++m) {
          const QRatFunc lhs1 = ctx.q_euler_poly_at(m, 1, arg) * inv2.scaled_by(pow(-lambda, m));
          QRatFunc rhs1;
          for (unsigned n = 0; n <= m; ++n) rhs1 += bs[n].scaled_by(st.s2(m, n));
          if (!run.check(lhs1, rhs1, params_str(m, {}, &lambda, x0.str().c_str()))) return;
          QRatFunc rhs2;
          BigRational neg_lambda_pow = BigRational::one();
          for (unsigned l = 0; l <= m; ++l) {
            rhs2 += ctx.q_euler_poly_at(l, 1, arg) * inv2.scaled_by(st.s1(m, l) * neg_lambda_pow);
            neg_lambda_pow *= -lambda;
          }
          if (!run.check(bs[m], rhs2, params_str(m, {}, &lambda, x0.str().c_str()))) return;
        }
      }
    }
  }
}

/* ---- (2.13): Changhee as the lambda = 1 specialization ------------------- */

void run_eq2_13(const FamilyContext& ctx, const VerifyRanges& r, Runner& run) {
  const BigRational one = BigRational::one();
  if (r.symbolic_x) {
    const auto ch = ctx.q_changhee_upto(r.n_max);
    const auto bf = ctx.q_boole_first_upto(r.n_max, 1, one, BuildPath::GenFunc);
    for (unsigned n = 0; n <= r.n_max; ++n)
      if (!run.check(bf[n].scaled(q_two()), ch[n], params_str(n, {}, nullptr, "sym"))) return;
  } else {
    for (const BigRational& x0 : sample_points(r.seed, r.sample_count)) {
      const auto ch = ctx.q_changhee_at_upto(r.n_max, x0);
      const auto bf = ctx.q_boole_first_at_upto(r.n_max, 1, one, x0, BuildPath::GenFunc);
      for (unsigned n = 0; n <= r.n_max; ++n)
        if (!run.check(bf[n] * q_two(), ch[n], params_str(n, {}, nullptr, x0.str().c_str())))
          return;
    }
  }
}

/* ---- (2.35): second kind is the first kind at -lambda -------------------- */

void run_eq2_35(const FamilyContext& ctx, const VerifyRanges& r, Runner& run) {
  for (const BigRational& lambda : r.lambdas) {
    for (unsigned k = 1; k <= r.k_max; ++k) {
      if (r.symbolic_x) {
        const auto bs = ctx.q_boole_second_upto(r.n_max, k, lambda, BuildPath::GenFunc);
        const auto bf = ctx.q_boole_first_upto(r.n_max, k, -lambda, BuildPath::GenFunc);
        for (unsigned n = 0; n <= r.n_max; ++n)
          if (!run.check(bs[n], bf[n], params_str(n, k, &lambda, "sym"))) return;
      } else {
        for (const BigRational& x0 : sample_points(r.seed, r.sample_count)) {
          const auto bs =
              ctx.q_boole_second_at_upto(r.n_max, k, lambda, x0, BuildPath::GenFunc);
          const auto bf =
              ctx.q_boole_first_at_upto(r.n_max, k, -lambda, x0, BuildPath::GenFunc);
          for (unsigned n = 0; n <= r.n_max; ++n)
            if (!run.check(bs[n], bf[n], params_str(n, k, &lambda, x0.str().c_str())))
              return;
        }
      }
    }
  }
}

/* ---- closing reflection identity (first display, n >= 1) ----------------- */

void run_reflection(const FamilyContext& ctx, const VerifyRanges& r, Runner& run) {
  for (const BigRational& lambda : r.lambdas) {
    if (r.symbolic_x) {
      const auto bf = ctx.q_boole_first_upto(r.n_max, 1, lambda, BuildPath::GenFunc);
      const auto bs = ctx.q_boole_second_upto(r.n_max, 1, lambda, BuildPath::GenFunc);
      const QRatFunc minus_one = QRatFunc::from_rational(-BigRational::one());
      std::vector<XPoly> bs_neg(r.n_max + 1);
      for (unsigned m = 0; m <= r.n_max; ++m)
        bs_neg[m] = bs[m].with_argument_scaled(minus_one);  // Bl2_{m,q}(-x|lambda)
      for (unsigned n = 1; n <= r.n_max; ++n) {
        const BigRational sign = pow(-BigRational::one(), n);
        const XPoly lhs = bf[n].scaled(q_two().scaled_by(sign * factorial(n).reciprocal()));
        XPoly rhs;
        for (unsigned m = 1; m <= n; ++m)
          rhs += bs_neg[m].scaled(
              q_two().scaled_by(binomial(n - 1, m - 1) * factorial(m).reciprocal()));
        if (!run.check(lhs, rhs, params_str(n, {}, &lambda, "sym"))) return;
      }
    } else {
      for (const BigRational& x0 : sample_points(r.seed, r.sample_count)) {
        const auto bf = ctx.q_boole_first_at_upto(r.n_max, 1, lambda, x0, BuildPath::GenFunc);
        const auto bs =
            ctx.q_boole_second_at_upto(r.n_max, 1, lambda, -x0, BuildPath::GenFunc);
        for (unsigned n = 1; n <= r.n_max; ++n) {
          const BigRational sign = pow(-BigRational::one(), n);
          const QRatFunc lhs = bf[n] * q_two().scaled_by(sign * factorial(n).reciprocal());
          QRatFunc rhs;
          for (unsigned m = 1; m <= n; ++m)
            rhs += bs[m] * q_two().scaled_by(binomial(n - 1, m - 1) * factorial(m).reciprocal());
          if (!run.check(lhs, rhs, params_str(n, {}, &lambda, x0.str().c_str()))) return;
        }
      }
    }
  }
}

}  // namespace

IdentityReport verify(const FamilyContext& ctx, IdentityId id, const VerifyRanges& ranges) {
  if (ranges.n_max > ctx.n_max())
    throw std::out_of_range("verify: ranges exceed the context's n_max");
  Runner run;
  run.rep.id = id;
  switch (id) {
    case IdentityId::Thm2_1: run_thm2_1(ctx, ranges, run); break;
    case IdentityId::Thm2_2: run_thm2_2(ctx, ranges, run); break;
    case IdentityId::Cor2_3: run_cor2_3(ctx, ranges, run); break;
    case IdentityId::Thm2_4: run_thm2_4(ctx, ranges, run); break;
    case IdentityId::Thm2_5: run_thm2_5(ctx, ranges, run); break;
    case IdentityId::Thm2_6: run_thm2_6(ctx, ranges, run); break;
    case IdentityId::Thm2_7: run_thm2_7(ctx, ranges, run); break;
    case IdentityId::Thm2_8: run_thm2_8(ctx, ranges, run); break;
    case IdentityId::Thm2_9: run_thm2_9(ctx, ranges, run); break;
    case IdentityId::Eq2_13: run_eq2_13(ctx, ranges, run); break;
    case IdentityId::Eq2_35: run_eq2_35(ctx, ranges, run); break;
    case IdentityId::Reflection: run_reflection(ctx, ranges, run); break;
  }
  return run.rep;
}

}  // namespace qboole
