#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "qboole/series.hpp"
#include "qboole/stirling.hpp"

namespace qboole {

enum class Family { EulerNumber, EulerPoly, BooleFirst, BooleSecond, Changhee };

/* Independent construction routes. Every family value can be produced by at
 * least two of these; the identity verifiers compare them structurally. */
enum class BuildPath { GenFunc, Recurrence, StirlingTransform, Reflection };

/**
 * Computation context for the polynomial families: owns the Stirling table
 * and the memoized q-Euler numbers E^{(k)}_{n,q}.
 *
 * Constructors are exact over Q(q); symbolic-x variants return XPoly values
 * (identities in x), rational-x variants return QRatFunc. Indices are
 * limited by n_max; k >= 1 everywhere; families with a lambda parameter
 * reject lambda = 0.
 *
 * Concurrency: the memo caches make a context single-writer. Share a
 * context across threads only after warming it, or give each task its own;
 * returned values are immutable.
 */
class FamilyContext {
 public:
  explicit FamilyContext(unsigned n_max);

  unsigned n_max() const { return n_max_; }
  const StirlingTable& stirling() const { return table_; }

  /* Fault-injection hook for tests and the verify CLI; breaks table
   * entries so verifiers can demonstrate counterexample reporting. */
  StirlingTable& mutable_stirling_for_testing() { return table_; }

  /* ---- q-Euler numbers E^{(k)}_{n,q} ---------------------------------- */

  /* Recurrence path (cached): E_0 = 1 and
   * q*sum_{l=0}^{n} C(n,l) E_l + E_n = 0 for n >= 1; order k by k-fold
   * Cauchy convolution of order-1 values. */
  const QRatFunc& q_euler_number(unsigned n, unsigned k = 1) const;

  /* Generating-function path: n! [t^n] ([2]_q/(q e^t + 1))^k. */
  QRatFunc q_euler_number_genfunc(unsigned n, unsigned k = 1) const;

  /* ---- q-Euler polynomials E^{(k)}_{n,q}(x) --------------------------- */

  /* Symbolic x: sum_l C(n,l) E^{(k)}_{l,q} x^{n-l}. */
  XPoly q_euler_poly(unsigned n, unsigned k = 1) const;
  QRatFunc q_euler_poly_at(unsigned n, unsigned k, const BigRational& x) const;

  /* ---- the fermionic functional on polynomials ------------------------ */

  /* The unique linear functional with moments I(y^n) = E_{n,q}; satisfies
   * q I(f(y+1)) + I(f(y)) = [2]_q f(0) on every polynomial f. Coefficients
   * may sit in Q(q) or in Q(q)[x]. */
  template <typename R>
  R fermionic_integral(const Poly<R>& f) const {
    R acc = R::zero();
    const auto& cs = f.coefficients();
    for (std::size_t j = 0; j < cs.size(); ++j) {
      if (cs[j].is_zero()) continue;
      acc = acc + cs[j] * embed_ratfunc<R>(q_euler_number(static_cast<unsigned>(j), 1));
    }
    return acc;
  }

  /* ---- q-Boole polynomials, first kind Bl^{(k)}_{n,q}(x|lambda) ------- */

  /* Values for n = 0..n_upto. Paths: GenFunc extracts
   * n! [t^n] (1/(1+q(1+t)^lambda))^k (1+t)^x; StirlingTransform computes
   * (1/[2]_q^k) sum_l S1(n,l) lambda^l E^{(k)}_{l,q}(x/lambda). */
  std::vector<XPoly> q_boole_first_upto(unsigned n_upto, unsigned k, const BigRational& lambda,
                                        BuildPath path = BuildPath::GenFunc) const;
  std::vector<QRatFunc> q_boole_first_at_upto(unsigned n_upto, unsigned k,
                                              const BigRational& lambda, const BigRational& x,
                                              BuildPath path = BuildPath::GenFunc) const;
  XPoly q_boole_first(unsigned n, unsigned k, const BigRational& lambda,
                      BuildPath path = BuildPath::GenFunc) const;
  QRatFunc q_boole_first_at(unsigned n, unsigned k, const BigRational& lambda,
                            const BigRational& x,
                            BuildPath path = BuildPath::GenFunc) const;

  /* ---- q-Changhee polynomials Ch_{n,q}(x) ----------------------------- */

  /* n! [t^n] [2]_q/([2]_q + q t) (1+t)^x; equals [2]_q Bl_{n,q}(x|1). */
  std::vector<XPoly> q_changhee_upto(unsigned n_upto) const;
  std::vector<QRatFunc> q_changhee_at_upto(unsigned n_upto, const BigRational& x) const;
  XPoly q_changhee(unsigned n) const;
  QRatFunc q_changhee_at(unsigned n, const BigRational& x) const;

  /* ---- q-Boole polynomials, second kind ------------------------------- */

  /* Paths: GenFunc extracts n! [t^n] ((1+t)^lambda/(q+(1+t)^lambda))^k
   * (1+t)^x; Reflection uses the first kind at -lambda; StirlingTransform
   * (k = 1 only) computes
   * (1/[2]_q) sum_l S1(n,l) (-1)^l lambda^l E_{l,q}(-x/lambda). */
  std::vector<XPoly> q_boole_second_upto(unsigned n_upto, unsigned k, const BigRational& lambda,
                                         BuildPath path = BuildPath::GenFunc) const;
  std::vector<QRatFunc> q_boole_second_at_upto(unsigned n_upto, unsigned k,
                                               const BigRational& lambda, const BigRational& x,
                                               BuildPath path = BuildPath::GenFunc) const;
  XPoly q_boole_second(unsigned n, unsigned k, const BigRational& lambda,
                       BuildPath path = BuildPath::GenFunc) const;
  QRatFunc q_boole_second_at(unsigned n, unsigned k, const BigRational& lambda,
                             const BigRational& x,
                             BuildPath path = BuildPath::GenFunc) const;

  /* ---- generating-function building blocks (exposed for tests) -------- */

  FormalSeries<QRatFunc> euler_number_gf(unsigned k, std::size_t order) const;
  FormalSeries<QRatFunc> boole_first_gf(unsigned k, const BigRational& lambda,
                                        std::size_t order) const;
  FormalSeries<QRatFunc> boole_second_gf(unsigned k, const BigRational& lambda,
                                         std::size_t order) const;
  FormalSeries<QRatFunc> changhee_gf(std::size_t order) const;

  /* (1+t)^x with symbolic x: coefficient of t^m is (x)_m/m!. */
  FormalSeries<XPoly> symbolic_binomial_series(std::size_t order) const;

 private:
  void ensure_euler_cache(unsigned k) const;
  void check_index(unsigned n) const;
  static void check_order_k(unsigned k);
  static void check_lambda(const BigRational& lambda);

  std::vector<XPoly> extract_all_egf(const FormalSeries<XPoly>& s) const;
  std::vector<QRatFunc> extract_all_egf(const FormalSeries<QRatFunc>& s) const;

  unsigned n_max_;
  StirlingTable table_;
  /* euler_cache_[k-1][n] = E^{(k)}_{n,q}; rows filled lazily per k. */
  mutable std::vector<std::vector<QRatFunc>> euler_cache_;
};

/* Product (u)_n = u(u-1)...(u-n+1) for a polynomial u over any ring; the
 * direct construction, independent of the Stirling expansion. */
template <typename R>
Poly<R> falling_factorial_of(const Poly<R>& u, unsigned n) {
  Poly<R> acc = Poly<R>::one();
  for (unsigned j = 0; j < n; ++j)
    acc = acc * (u - Poly<R>::from_rational(BigRational(static_cast<long>(j))));
  return acc;
}

/* q -> 1 specialization. Denominators of all family values are powers of
 * 1+q, so the limit is plain substitution; a pole here means a bug. */
inline BigRational classical_limit(const QRatFunc& v) { return v.eval(BigRational::one()); }
inline Poly<BigRational> classical_limit(const XPoly& p) {
  return eval_coefficients_at_q(p, BigRational::one());
}

/**
 * One constructed family member with full provenance: which family, the
 * index/order/parameters it was built with, and by which path.
 */
struct FamilyValue {
  Family family = Family::EulerNumber;
  unsigned n = 0;
  unsigned k = 1;
  std::optional<BigRational> lambda;  // present for the Boole families
  std::optional<BigRational> x;       // nullopt = symbolic
  std::variant<QRatFunc, XPoly> value;
  BuildPath path = BuildPath::GenFunc;
};

FamilyValue make_family_value(const FamilyContext& ctx, Family family, unsigned n, unsigned k,
                              const std::optional<BigRational>& lambda,
                              const std::optional<BigRational>& x,
                              BuildPath path = BuildPath::GenFunc);

std::variant<BigRational, Poly<BigRational>> classical_limit(const FamilyValue& v);

}  // namespace qboole
