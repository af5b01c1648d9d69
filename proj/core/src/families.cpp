#include "qboole/families.hpp"

#include <stdexcept>

namespace qboole {

FamilyContext::FamilyContext(unsigned n_max) : n_max_(n_max), table_(n_max) {}

void FamilyContext::check_index(unsigned n) const {
  if (n > n_max_) throw std::out_of_range("FamilyContext: index exceeds n_max");
}

void FamilyContext::check_order_k(unsigned k) {
  if (k == 0) throw std::invalid_argument("FamilyContext: order k must be >= 1");
}

void FamilyContext::check_lambda(const BigRational& lambda) {
  if (lambda.is_zero()) throw std::invalid_argument("FamilyContext: lambda must be nonzero");
}

void FamilyContext::ensure_euler_cache(unsigned k) const {
  while (euler_cache_.size() < k) {
    const unsigned level = static_cast<unsigned>(euler_cache_.size()) + 1;
    std::vector<QRatFunc> row(n_max_ + 1);
    if (level == 1) {
      /* From the functional equation on y^n:
       * (1+q) E_n = -q sum_{l=0}^{n-1} C(n,l) E_l, with E_0 = 1. */
      row[0] = QRatFunc::one();
      const QRatFunc factor = -(QRatFunc::q() / q_two());
      for (unsigned n = 1; n <= n_max_; ++n) {
        QRatFunc acc;
        for (unsigned l = 0; l < n; ++l) acc += row[l].scaled_by(binomial(n, l));
        row[n] = factor * acc;
      }
    } else {
      /* Exponential generating functions multiply, so
       * E^{(k)}_n = sum_i C(n,i) E^{(k-1)}_i E_{n-i}. */
      const auto& prev = euler_cache_[level - 2];
      const auto& first = euler_cache_[0];
      for (unsigned n = 0; n <= n_max_; ++n) {
        QRatFunc acc;
        for (unsigned i = 0; i <= n; ++i)
          acc += (prev[i] * first[n - i]).scaled_by(binomial(n, i));
        row[n] = std::move(acc);
      }
    }
    euler_cache_.push_back(std::move(row));
  }
}

const QRatFunc& FamilyContext::q_euler_number(unsigned n, unsigned k) const {
  check_order_k(k);
  check_index(n);
  ensure_euler_cache(k);
  return euler_cache_[k - 1][n];
}

QRatFunc FamilyContext::q_euler_number_genfunc(unsigned n, unsigned k) const {
  check_order_k(k);
  check_index(n);
  return extract_coefficient(euler_number_gf(k, n), n, true);
}

XPoly FamilyContext::q_euler_poly(unsigned n, unsigned k) const {
  check_order_k(k);
  check_index(n);
  ensure_euler_cache(k);
  const auto& numbers = euler_cache_[k - 1];
  std::vector<QRatFunc> coeffs(n + 1);
  for (unsigned j = 0; j <= n; ++j)
    coeffs[j] = numbers[n - j].scaled_by(binomial(n, j));
  return XPoly(std::move(coeffs));
}

QRatFunc FamilyContext::q_euler_poly_at(unsigned n, unsigned k, const BigRational& x) const {
  return q_euler_poly(n, k).eval(QRatFunc::from_rational(x));
}

/* ---- generating functions ---------------------------------------------- */

FormalSeries<QRatFunc> FamilyContext::euler_number_gf(unsigned k, std::size_t order) const {
  check_order_k(k);
  /* q e^t + 1 has constant term 1+q and coefficient q/n! beyond. */
  std::vector<QRatFunc> den(order + 1);
  den[0] = q_two();
  for (std::size_t n = 1; n <= order; ++n)
    den[n] = QRatFunc::q().scaled_by(factorial(static_cast<unsigned>(n)).reciprocal());
  FormalSeries<QRatFunc> base(order, std::move(den));
  return base.inverse().scaled(q_two()).pow(k);
}

FormalSeries<QRatFunc> FamilyContext::boole_first_gf(unsigned k, const BigRational& lambda,
                                                     std::size_t order) const {
  check_order_k(k);
  check_lambda(lambda);
  /* (1/(1 + q(1+t)^lambda))^k; the [2]_q^k of the definition is already
   * divided out, matching the polynomial normalization. */
  FormalSeries<QRatFunc> s = binomial_power<QRatFunc>(lambda, order).scaled(QRatFunc::q());
  s = s + FormalSeries<QRatFunc>::one(order);
  return s.inverse().pow(k);
}

FormalSeries<QRatFunc> FamilyContext::boole_second_gf(unsigned k, const BigRational& lambda,
                                                      std::size_t order) const {
  check_order_k(k);
  check_lambda(lambda);
  /* ((1+t)^lambda / (q + (1+t)^lambda))^k. */
  const FormalSeries<QRatFunc> pow_lambda = binomial_power<QRatFunc>(lambda, order);
  const FormalSeries<QRatFunc> den =
      pow_lambda + FormalSeries<QRatFunc>::one(order).scaled(QRatFunc::q());
  return (pow_lambda * den.inverse()).pow(k);
}

FormalSeries<QRatFunc> FamilyContext::changhee_gf(std::size_t order) const {
  /* [2]_q / ([2]_q + q t). */
  std::vector<QRatFunc> den;
  den.push_back(q_two());
  if (order >= 1) den.push_back(QRatFunc::q());
  FormalSeries<QRatFunc> base(order, std::move(den));
  return base.inverse().scaled(q_two());
}

FormalSeries<XPoly> FamilyContext::symbolic_binomial_series(std::size_t order) const {
  if (order > n_max_)
    throw std::out_of_range("FamilyContext: series order exceeds the Stirling table");
  std::vector<XPoly> coeffs;
  coeffs.reserve(order + 1);
  for (std::size_t m = 0; m <= order; ++m) {
    const XPoly falling = falling_factorial_as_powers(table_, static_cast<unsigned>(m));
    coeffs.push_back(
        falling.scaled(QRatFunc::from_rational(factorial(static_cast<unsigned>(m)).reciprocal())));
  }
  return FormalSeries<XPoly>(order, std::move(coeffs));
}

namespace {
template <typename R>
std::vector<R> extract_all(const FormalSeries<R>& s) {
  std::vector<R> out;
  out.reserve(s.order() + 1);
  for (std::size_t n = 0; n <= s.order(); ++n)
    out.push_back(extract_coefficient(s, n, /*factorial_normalize=*/true));
  return out;
}
}  // namespace

std::vector<XPoly> FamilyContext::extract_all_egf(const FormalSeries<XPoly>& s) const {
  return extract_all(s);
}
std::vector<QRatFunc> FamilyContext::extract_all_egf(const FormalSeries<QRatFunc>& s) const {
  return extract_all(s);
}

/* ---- q-Boole, first kind ------------------------------------------------ */

std::vector<XPoly> FamilyContext::q_boole_first_upto(unsigned n_upto, unsigned k,
                                                     const BigRational& lambda,
                                                     BuildPath path) const {
  check_order_k(k);
  check_lambda(lambda);
  check_index(n_upto);
  switch (path) {
    case BuildPath::GenFunc: {
      const FormalSeries<XPoly> s =
          lift_to_xpoly(boole_first_gf(k, lambda, n_upto)) * symbolic_binomial_series(n_upto);
      return extract_all_egf(s);
    }
    case BuildPath::StirlingTransform: {
      const QRatFunc norm = ratfunc_pow(q_two(), k).reciprocal();
      const QRatFunc arg_scale = QRatFunc::from_rational(lambda.reciprocal());
      std::vector<XPoly> euler_scaled(n_upto + 1);
      for (unsigned l = 0; l <= n_upto; ++l)
        euler_scaled[l] = q_euler_poly(l, k).with_argument_scaled(arg_scale);
      std::vector<XPoly> out(n_upto + 1);
      for (unsigned n = 0; n <= n_upto; ++n) {
        XPoly acc;
        BigRational lambda_pow = BigRational::one();
        for (unsigned l = 0; l <= n; ++l) {
          const BigRational c = table_.s1(n, l) * lambda_pow;
          if (!c.is_zero()) acc += euler_scaled[l].scaled(norm.scaled_by(c));
          lambda_pow *= lambda;
        }
        out[n] = std::move(acc);
      }
      return out;
    }
    default:
      throw std::invalid_argument("q_boole_first: unsupported build path");
  }
}

std::vector<QRatFunc> FamilyContext::q_boole_first_at_upto(unsigned n_upto, unsigned k,
                                                           const BigRational& lambda,
                                                           const BigRational& x,
                                                           BuildPath path) const {
  check_order_k(k);
  check_lambda(lambda);
  check_index(n_upto);
  switch (path) {
    case BuildPath::GenFunc: {
      FormalSeries<QRatFunc> s = boole_first_gf(k, lambda, n_upto);
      if (!x.is_zero()) s = s * binomial_power<QRatFunc>(x, n_upto);
      return extract_all_egf(s);
    }
    case BuildPath::StirlingTransform: {
      const QRatFunc norm = ratfunc_pow(q_two(), k).reciprocal();
      const BigRational x_over_lambda = x / lambda;
      std::vector<QRatFunc> euler_at(n_upto + 1);
      for (unsigned l = 0; l <= n_upto; ++l)
        euler_at[l] = q_euler_poly_at(l, k, x_over_lambda);
      std::vector<QRatFunc> out(n_upto + 1);
      for (unsigned n = 0; n <= n_upto; ++n) {
        QRatFunc acc;
        BigRational lambda_pow = BigRational::one();
        for (unsigned l = 0; l <= n; ++l) {
          const BigRational c = table_.s1(n, l) * lambda_pow;
          if (!c.is_zero()) acc += euler_at[l] * norm.scaled_by(c);
          lambda_pow *= lambda;
        }
        out[n] = std::move(acc);
      }
      return out;
    }
    default:
      throw std::invalid_argument("q_boole_first: unsupported build path");
  }
}

XPoly FamilyContext::q_boole_first(unsigned n, unsigned k, const BigRational& lambda,
                                   BuildPath path) const {
  return q_boole_first_upto(n, k, lambda, path).back();
}

QRatFunc FamilyContext::q_boole_first_at(unsigned n, unsigned k, const BigRational& lambda,
                                         const BigRational& x, BuildPath path) const {
  return q_boole_first_at_upto(n, k, lambda, x, path).back();
}

/* ---- q-Changhee ---------------------------------------------------------- */

std::vector<XPoly> FamilyContext::q_changhee_upto(unsigned n_upto) const {
  check_index(n_upto);
  const FormalSeries<XPoly> s =
      lift_to_xpoly(changhee_gf(n_upto)) * symbolic_binomial_series(n_upto);
  return extract_all_egf(s);
}

std::vector<QRatFunc> FamilyContext::q_changhee_at_upto(unsigned n_upto,
                                                        const BigRational& x) const {
  check_index(n_upto);
  FormalSeries<QRatFunc> s = changhee_gf(n_upto);
  if (!x.is_zero()) s = s * binomial_power<QRatFunc>(x, n_upto);
  return extract_all_egf(s);
}

XPoly FamilyContext::q_changhee(unsigned n) const { return q_changhee_upto(n).back(); }

QRatFunc FamilyContext::q_changhee_at(unsigned n, const BigRational& x) const {
  return q_changhee_at_upto(n, x).back();
}

/* ---- q-Boole, second kind ------------------------------------------------ */

std::vector<XPoly> FamilyContext::q_boole_second_upto(unsigned n_upto, unsigned k,
                                                      const BigRational& lambda,
                                                      BuildPath path) const {
  check_order_k(k);
  check_lambda(lambda);
  check_index(n_upto);
  switch (path) {
    case BuildPath::GenFunc: {
      const FormalSeries<XPoly> s =
          lift_to_xpoly(boole_second_gf(k, lambda, n_upto)) * symbolic_binomial_series(n_upto);
      return extract_all_egf(s);
    }
    case BuildPath::Reflection:
      /* Second kind at lambda equals first kind at -lambda. */
      return q_boole_first_upto(n_upto, k, -lambda, BuildPath::GenFunc);
    case BuildPath::StirlingTransform: {
      if (k != 1)
        throw std::invalid_argument(
            "q_boole_second: the Stirling-transform path is defined for k = 1");
      const QRatFunc norm = q_two().reciprocal();
      const QRatFunc arg_scale = QRatFunc::from_rational(-(lambda.reciprocal()));
      std::vector<XPoly> euler_scaled(n_upto + 1);
      for (unsigned l = 0; l <= n_upto; ++l)
        euler_scaled[l] = q_euler_poly(l, 1).with_argument_scaled(arg_scale);
      std::vector<XPoly> out(n_upto + 1);
      for (unsigned n = 0; n <= n_upto; ++n) {
        XPoly acc;
        BigRational neg_lambda_pow = BigRational::one();  // (-lambda)^l
        for (unsigned l = 0; l <= n; ++l) {
          const BigRational c = table_.s1(n, l) * neg_lambda_pow;
          if (!c.is_zero()) acc += euler_scaled[l].scaled(norm.scaled_by(c));
          neg_lambda_pow *= -lambda;
        }
        out[n] = std::move(acc);
      }
      return out;
    }
    default:
      throw std::invalid_argument("q_boole_second: unsupported build path");
  }
}

std::vector<QRatFunc> FamilyContext::q_boole_second_at_upto(unsigned n_upto, unsigned k,
                                                            const BigRational& lambda,
                                                            const BigRational& x,
                                                            BuildPath path) const {
  check_order_k(k);
  check_lambda(lambda);
  check_index(n_upto);
  switch (path) {
    case BuildPath::GenFunc: {
      FormalSeries<QRatFunc> s = boole_second_gf(k, lambda, n_upto);
      if (!x.is_zero()) s = s * binomial_power<QRatFunc>(x, n_upto);
      return extract_all_egf(s);
    }
    case BuildPath::Reflection:
      return q_boole_first_at_upto(n_upto, k, -lambda, x, BuildPath::GenFunc);
    case BuildPath::StirlingTransform: {
      if (k != 1)
        throw std::invalid_argument(
            "q_boole_second: the Stirling-transform path is defined for k = 1");
      const QRatFunc norm = q_two().reciprocal();
      const BigRational arg = -(x / lambda);
      std::vector<QRatFunc> euler_at(n_upto + 1);
      for (unsigned l = 0; l <= n_upto; ++l) euler_at[l] = q_euler_poly_at(l, 1, arg);
      std::vector<QRatFunc> out(n_upto + 1);
      for (unsigned n = 0; n <= n_upto; ++n) {
        QRatFunc acc;
        BigRational neg_lambda_pow = BigRational::one();
        for (unsigned l = 0; l <= n; ++l) {
          const BigRational c = table_.s1(n, l) * neg_lambda_pow;
          if (!c.is_zero()) acc += euler_at[l] * norm.scaled_by(c);
          neg_lambda_pow *= -lambda;
        }
        out[n] = std::move(acc);
      }
      return out;
    }
    default:
      throw std::invalid_argument("q_boole_second: unsupported build path");
  }
}

XPoly FamilyContext::q_boole_second(unsigned n, unsigned k, const BigRational& lambda,
                                    BuildPath path) const {
  return q_boole_second_upto(n, k, lambda, path).back();
}

QRatFunc FamilyContext::q_boole_second_at(unsigned n, unsigned k, const BigRational& lambda,
                                          const BigRational& x, BuildPath path) const {
  return q_boole_second_at_upto(n, k, lambda, x, path).back();
}

/* ---- FamilyValue ---------------------------------------------------------- */

FamilyValue make_family_value(const FamilyContext& ctx, Family family, unsigned n, unsigned k,
                              const std::optional<BigRational>& lambda,
                              const std::optional<BigRational>& x, BuildPath path) {
  FamilyValue v;
  v.family = family;
  v.n = n;
  v.k = k;
  v.lambda = lambda;
  v.x = x;
  v.path = path;
  switch (family) {
    case Family::EulerNumber:
      v.value = path == BuildPath::GenFunc ? ctx.q_euler_number_genfunc(n, k)
                                           : ctx.q_euler_number(n, k);
      break;
    case Family::EulerPoly:
      if (x)
        v.value = ctx.q_euler_poly_at(n, k, *x);
      else
        v.value = ctx.q_euler_poly(n, k);
      break;
    case Family::BooleFirst:
      if (!lambda) throw std::invalid_argument("q-Boole families require lambda");
      if (x)
        v.value = ctx.q_boole_first_at(n, k, *lambda, *x, path);
      else
        v.value = ctx.q_boole_first(n, k, *lambda, path);
      break;
    case Family::BooleSecond:
      if (!lambda) throw std::invalid_argument("q-Boole families require lambda");
      if (x)
        v.value = ctx.q_boole_second_at(n, k, *lambda, *x, path);
      else
        v.value = ctx.q_boole_second(n, k, *lambda, path);
      break;
    case Family::Changhee:
      if (k != 1) throw std::invalid_argument("q-Changhee polynomials have no higher order");
      if (x)
        v.value = ctx.q_changhee_at(n, *x);
      else
        v.value = ctx.q_changhee(n);
      break;
  }
  return v;
}

std::variant<BigRational, Poly<BigRational>> classical_limit(const FamilyValue& v) {
  if (std::holds_alternative<QRatFunc>(v.value))
    return classical_limit(std::get<QRatFunc>(v.value));
  return classical_limit(std::get<XPoly>(v.value));
}

}  // namespace qboole
