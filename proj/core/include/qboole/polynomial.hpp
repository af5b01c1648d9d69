#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "qboole/rational.hpp"

namespace qboole {

/* The coefficient protocol shared by every ring in the library: rationals,
 * rational functions in q, and polynomials over either. from_rational embeds
 * the ground field Q, which is all the series engine ever needs to inject. */
template <typename T>
concept RingElement = requires(const T& a, const T& b, const BigRational& r) {
  { T::zero() } -> std::convertible_to<T>;
  { T::one() } -> std::convertible_to<T>;
  { T::from_rational(r) } -> std::convertible_to<T>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { a == b } -> std::convertible_to<bool>;
};

/**
 * Dense univariate polynomial over a ring T, coefficients stored ascending.
 *
 * Invariant: no trailing zero coefficient, so degree() is well defined and
 * equality of values is structural equality of the coefficient vectors. The
 * zero polynomial is the empty vector (degree -1).
 */
template <RingElement T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static const Poly& zero() {
    static const Poly k;
    return k;
  }
  static Poly one() { return constant(T::one()); }
  static Poly constant(T c) {
    Poly p;
    if (!c.is_zero()) p.coeffs_.push_back(std::move(c));
    return p;
  }
  static Poly from_rational(const BigRational& r) { return constant(T::from_rational(r)); }
  static Poly monomial(T c, std::size_t deg) {
    Poly p;
    if (!c.is_zero()) {
      p.coeffs_.assign(deg, T::zero());
      p.coeffs_.push_back(std::move(c));
    }
    return p;
  }
  /* The indeterminate itself. */
  static Poly identity() { return monomial(T::one(), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<T>& coefficients() const { return coeffs_; }

  /* Coefficient of degree i; zero beyond the degree. */
  const T& coeff(std::size_t i) const {
    static const T k = T::zero();
    return i < coeffs_.size() ? coeffs_[i] : k;
  }
  const T& leading() const {
    if (is_zero()) throw std::invalid_argument("Poly: leading coefficient of zero");
    return coeffs_.back();
  }
  const T& constant_term() const { return coeff(0); }

  Poly operator-() const {
    Poly r;
    r.coeffs_.reserve(coeffs_.size());
    for (const T& c : coeffs_) r.coeffs_.push_back(-c);
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    r.coeffs_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) r.coeffs_.push_back(a.coeff(i) + b.coeff(i));
    r.trim();
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    r.coeffs_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) r.coeffs_.push_back(a.coeff(i) - b.coeff(i));
    r.trim();
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, T::zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    r.trim();
    return r;
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  /* c * p, for a ring scalar c. */
  Poly scaled(const T& c) const {
    if (c.is_zero()) return Poly();
    Poly r;
    r.coeffs_.reserve(coeffs_.size());
    for (const T& a : coeffs_) r.coeffs_.push_back(a * c);
    r.trim();
    return r;
  }

  T eval(const T& at) const {
    T acc = T::zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  /* p(inner), by Horner. */
  Poly compose(const Poly& inner) const {
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * inner + constant(*it);
    return acc;
  }

  /* p(c*x): coefficient of x^i picks up c^i. */
  Poly with_argument_scaled(const T& c) const {
    Poly r;
    r.coeffs_.reserve(coeffs_.size());
    T p = T::one();
    for (const T& a : coeffs_) {
      r.coeffs_.push_back(a * p);
      p = p * c;
    }
    r.trim();
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

/* Polynomial in the indeterminate q over Q. */
using QPoly = Poly<BigRational>;

inline QPoly qpoly_from(std::initializer_list<long> coeffs) {
  std::vector<BigRational> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return QPoly(std::move(v));
}

/* Euclidean division in Q[q]: a = q*b + r with deg r < deg b. */
inline std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw division_by_zero("QPoly: division by zero polynomial");
  if (a.degree() < b.degree()) return {QPoly(), a};
  std::vector<BigRational> rem(a.coefficients().begin(), a.coefficients().end());
  std::vector<BigRational> quot(a.degree() - b.degree() + 1, BigRational::zero());
  const BigRational lead_inv = b.leading().reciprocal();
  for (int i = a.degree(); i >= b.degree(); --i) {
    if (rem[i].is_zero()) continue;
    const BigRational f = rem[i] * lead_inv;
    quot[i - b.degree()] = f;
    for (int j = 0; j <= b.degree(); ++j)
      rem[i - b.degree() + j] -= f * b.coefficients()[j];
  }
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

/* Monic gcd in Q[q]; gcd(0,0) = 0. */
inline QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(a.leading().reciprocal());
}

}  // namespace qboole
