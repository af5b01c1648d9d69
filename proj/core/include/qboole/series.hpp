#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qboole/combinatorics.hpp"
#include "qboole/ratfunc.hpp"

namespace qboole {

/**
 * Truncated formal power series in t over a coefficient ring R, the
 * generating-function engine behind every family definition.
 *
 * A series of order N carries exactly the coefficients of t^0 ... t^N.
 * Binary operations truncate to the smaller order; there is no adaptive
 * extension, so the caller owns the order bookkeeping: to read off the
 * coefficient of t^n, build the series with order >= n.
 */
template <RingElement R>
class FormalSeries {
 public:
  /* Pads with zeros up to order+1 coefficients; rejects longer inputs. */
  FormalSeries(std::size_t order, std::vector<R> coeffs)
      : order_(order), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() > order_ + 1)
      throw std::invalid_argument("FormalSeries: more coefficients than order allows");
    coeffs_.resize(order_ + 1, R::zero());
  }

  static FormalSeries zero(std::size_t order) { return FormalSeries(order, {}); }
  static FormalSeries one(std::size_t order) { return FormalSeries(order, {R::one()}); }
  /* The series t (truncates to 0 at order 0). */
  static FormalSeries t(std::size_t order) {
    FormalSeries s = zero(order);
    if (order >= 1) s.coeffs_[1] = R::one();
    return s;
  }

  std::size_t order() const { return order_; }
  const std::vector<R>& coefficients() const { return coeffs_; }

  const R& operator[](std::size_t n) const {
    if (n > order_) throw std::out_of_range("FormalSeries: coefficient index beyond order");
    return coeffs_[n];
  }

  bool is_zero() const {
    for (const R& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  FormalSeries truncated(std::size_t new_order) const {
    if (new_order > order_)
      throw std::invalid_argument("FormalSeries: cannot truncate to a larger order");
    return FormalSeries(new_order,
                        std::vector<R>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
  }

  friend FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) {
    const std::size_t n = std::min(a.order_, b.order_);
    std::vector<R> c;
    c.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) c.push_back(a.coeffs_[i] + b.coeffs_[i]);
    return FormalSeries(n, std::move(c));
  }
  friend FormalSeries operator-(const FormalSeries& a, const FormalSeries& b) {
    const std::size_t n = std::min(a.order_, b.order_);
    std::vector<R> c;
    c.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) c.push_back(a.coeffs_[i] - b.coeffs_[i]);
    return FormalSeries(n, std::move(c));
  }

  /* Cauchy product: c_n = sum_{i+j=n} a_i b_j, truncated to min order. */
  friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
    const std::size_t n = std::min(a.order_, b.order_);
    std::vector<R> c(n + 1, R::zero());
    for (std::size_t i = 0; i <= n; ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j <= n; ++j) {
        if (b.coeffs_[j].is_zero()) continue;
        c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return FormalSeries(n, std::move(c));
  }

  FormalSeries scaled(const R& s) const {
    std::vector<R> c;
    c.reserve(order_ + 1);
    for (const R& a : coeffs_) c.push_back(a * s);
    return FormalSeries(order_, std::move(c));
  }

  FormalSeries operator-() const {
    std::vector<R> c;
    c.reserve(order_ + 1);
    for (const R& a : coeffs_) c.push_back(-a);
    return FormalSeries(order_, std::move(c));
  }

  /* Multiplicative inverse through the truncation order. If
   * 1/(sum a_n t^n) = sum b_n t^n then b_0 = a_0^{-1} and
   * b_n = -b_0 sum_{k=1}^{n} a_k b_{n-k}. */
  FormalSeries inverse() const {
    auto a0_inv = try_invert(coeffs_[0]);
    if (!a0_inv)
      throw std::invalid_argument("FormalSeries: constant term is not invertible");
    std::vector<R> b(order_ + 1, R::zero());
    b[0] = *a0_inv;
    for (std::size_t n = 1; n <= order_; ++n) {
      R acc = R::zero();
      for (std::size_t k = 1; k <= n; ++k) {
        if (coeffs_[k].is_zero()) continue;
        acc = acc + coeffs_[k] * b[n - k];
      }
      b[n] = -(*a0_inv * acc);
    }
    return FormalSeries(order_, std::move(b));
  }

  FormalSeries pow(unsigned k) const {
    FormalSeries r = one(order_);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  /* this(inner(t)) by Horner on truncated series. Requires the inner
   * constant term to vanish, otherwise the composition would need
   * infinitely many coefficients of this series. */
  FormalSeries compose(const FormalSeries& inner) const {
    if (!inner.coeffs_[0].is_zero())
      throw std::invalid_argument("FormalSeries: composition needs inner constant term 0");
    const std::size_t n = std::min(order_, inner.order_);
    FormalSeries in = inner.truncated(n);
    FormalSeries acc = zero(n);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      acc = acc * in;
      acc.coeffs_[0] = acc.coeffs_[0] + coeffs_[i];
    }
    return acc;
  }

  friend bool operator==(const FormalSeries& a, const FormalSeries& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

 private:
  std::size_t order_;
  std::vector<R> coeffs_;
};

/* log(1+t): coefficients (-1)^{n+1}/n for n >= 1. */
template <RingElement R>
FormalSeries<R> log1p_series(std::size_t order) {
  std::vector<R> c(order + 1, R::zero());
  for (std::size_t n = 1; n <= order; ++n) {
    BigRational r = BigRational::one() / BigRational(static_cast<long>(n));
    if (n % 2 == 0) r = -r;
    c[n] = R::from_rational(r);
  }
  return FormalSeries<R>(order, std::move(c));
}

/* e^t - 1: coefficients 1/n! for n >= 1. */
template <RingElement R>
FormalSeries<R> expm1_series(std::size_t order) {
  std::vector<R> c(order + 1, R::zero());
  for (std::size_t n = 1; n <= order; ++n)
    c[n] = R::from_rational(factorial(static_cast<unsigned>(n)).reciprocal());
  return FormalSeries<R>(order, std::move(c));
}

template <RingElement R>
FormalSeries<R> exp_series(std::size_t order) {
  FormalSeries<R> s = expm1_series<R>(order);
  return s + FormalSeries<R>::one(order);
}

/* (1+t)^alpha = sum_n C(alpha, n) t^n for a rational exponent. */
template <RingElement R>
FormalSeries<R> binomial_power(const BigRational& alpha, std::size_t order) {
  std::vector<R> c;
  c.reserve(order + 1);
  BigRational coeff = BigRational::one();
  for (std::size_t n = 0; n <= order; ++n) {
    c.push_back(R::from_rational(coeff));
    /* C(alpha, n+1) = C(alpha, n) * (alpha - n)/(n + 1). */
    coeff *= (alpha - BigRational(static_cast<long>(n))) /
             BigRational(static_cast<long>(n) + 1);
  }
  return FormalSeries<R>(order, std::move(c));
}

/* Reads off s_n, or n! * s_n under the exponential generating function
 * convention ("... = sum a_n t^n/n!" displays). */
template <RingElement R>
R extract_coefficient(const FormalSeries<R>& s, std::size_t n, bool factorial_normalize) {
  const R& c = s[n];
  if (!factorial_normalize) return c;
  return c * R::from_rational(factorial(static_cast<unsigned>(n)));
}

/* Lifts a Q(q)-coefficient series into the ring of x-polynomials, so it can
 * be multiplied against symbolic-x factors. */
inline FormalSeries<XPoly> lift_to_xpoly(const FormalSeries<QRatFunc>& s) {
  std::vector<XPoly> c;
  c.reserve(s.order() + 1);
  for (const QRatFunc& v : s.coefficients()) c.push_back(XPoly::constant(v));
  return FormalSeries<XPoly>(s.order(), std::move(c));
}

}  // namespace qboole
