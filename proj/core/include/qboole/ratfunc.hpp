#pragma once

#include <optional>
#include <type_traits>
#include <utility>

#include "qboole/polynomial.hpp"

namespace qboole {

/**
 * Element of the field Q(q), kept in canonical form at all times:
 *
 *   - den != 0
 *   - gcd(num, den) = 1 in Q[q]
 *   - den is monic
 *   - zero is 0/1
 *
 * Two equal values therefore have identical field contents, and every
 * identity check in the library reduces to operator==. The q-numbers
 * [x]_q = (1-q^x)/(1-q) and all family values live here.
 */
class QRatFunc {
 public:
  QRatFunc() : num_(), den_(QPoly::one()) {}
  explicit QRatFunc(QPoly num) : num_(std::move(num)), den_(QPoly::one()) {}
  QRatFunc(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw division_by_zero("QRatFunc: zero denominator");
    reduce();
  }

  static const QRatFunc& zero() {
    static const QRatFunc k;
    return k;
  }
  static const QRatFunc& one() {
    static const QRatFunc k{QPoly::one()};
    return k;
  }
  /* The indeterminate q itself. */
  static const QRatFunc& q() {
    static const QRatFunc k{QPoly::identity()};
    return k;
  }
  static QRatFunc from_rational(const BigRational& r) { return QRatFunc(QPoly::constant(r)); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == QPoly::one() && den_ == QPoly::one(); }
  bool is_polynomial() const { return den_ == QPoly::one(); }
  bool is_constant() const { return num_.is_constant() && den_ == QPoly::one(); }

  QRatFunc operator-() const {
    QRatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend QRatFunc operator+(const QRatFunc& a, const QRatFunc& b) {
    if (a.den_ == b.den_) return QRatFunc(a.num_ + b.num_, a.den_);
    return QRatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend QRatFunc operator-(const QRatFunc& a, const QRatFunc& b) {
    if (a.den_ == b.den_) return QRatFunc(a.num_ - b.num_, a.den_);
    return QRatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend QRatFunc operator*(const QRatFunc& a, const QRatFunc& b) {
    /* Scaling by a rational constant preserves canonical form as-is; skip
     * the gcd pass. This is the dominant multiply in symbolic-x series. */
    if (b.is_constant()) return a.scaled_by(b.num_.constant_term());
    if (a.is_constant()) return b.scaled_by(a.num_.constant_term());
    return QRatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend QRatFunc operator/(const QRatFunc& a, const QRatFunc& b) {
    if (b.is_zero()) throw division_by_zero("QRatFunc: division by zero");
    return QRatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  QRatFunc& operator+=(const QRatFunc& o) { return *this = *this + o; }
  QRatFunc& operator-=(const QRatFunc& o) { return *this = *this - o; }
  QRatFunc& operator*=(const QRatFunc& o) { return *this = *this * o; }
  QRatFunc& operator/=(const QRatFunc& o) { return *this = *this / o; }

  QRatFunc reciprocal() const {
    if (is_zero()) throw division_by_zero("QRatFunc: reciprocal of zero");
    return QRatFunc(den_, num_);
  }

  QRatFunc scaled_by(const BigRational& c) const {
    if (c.is_zero() || is_zero()) return zero();
    QRatFunc r;
    r.num_ = num_.scaled(c);
    r.den_ = den_;
    return r;
  }

  /* Exact evaluation at a rational point; throws pole_error where the
   * denominator vanishes. Canonical form guarantees num and den share no
   * root, so a vanishing denominator really is a pole. */
  BigRational eval(const BigRational& q0) const {
    const BigRational d = den_.eval(q0);
    if (d.is_zero()) throw pole_error("QRatFunc: pole at q = " + q0.str());
    return num_.eval(q0) / d;
  }

  friend bool operator==(const QRatFunc& a, const QRatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  /* (1+q)^j for j <= 64, built once. Family denominators are powers of 1+q,
   * so reduce() can cancel by root multiplicity instead of running Euclid. */
  static const std::vector<QPoly>& one_plus_q_powers() {
    static const std::vector<QPoly> table = [] {
      std::vector<QPoly> t;
      t.reserve(65);
      t.push_back(QPoly::one());
      const QPoly base = qpoly_from({1, 1});
      for (int i = 1; i <= 64; ++i) t.push_back(t.back() * base);
      return t;
    }();
    return table;
  }

  /* p = (1+q) h + r by synthetic division; returns {h, r}. */
  static std::pair<QPoly, BigRational> div_by_one_plus_q(const QPoly& p) {
    const auto& c = p.coefficients();
    const int d = p.degree();
    std::vector<BigRational> h(static_cast<std::size_t>(d), BigRational::zero());
    BigRational carry = c[static_cast<std::size_t>(d)];
    for (int i = d - 1; i >= 1; --i) {
      h[static_cast<std::size_t>(i)] = carry;
      carry = c[static_cast<std::size_t>(i)] - carry;
    }
    if (d >= 1) h[0] = carry;
    const BigRational rem = c[0] - (d >= 1 ? h[0] : BigRational::zero());
    return {QPoly(std::move(h)), rem};
  }

  void reduce() {
    if (num_.is_zero()) {
      den_ = QPoly::one();
      return;
    }
    /* Pure rational values never need a gcd pass. */
    if (!(num_.is_constant() && den_.is_constant())) {
      const int j = den_.degree();
      if (j > 0 && j <= 64 && den_ == one_plus_q_powers()[static_cast<std::size_t>(j)]) {
        int cancelled = 0;
        QPoly n = num_;
        while (cancelled < j && n.degree() >= 1) {
          auto [quo, rem] = div_by_one_plus_q(n);
          if (!rem.is_zero()) break;
          n = std::move(quo);
          ++cancelled;
        }
        if (cancelled > 0) {
          num_ = std::move(n);
          den_ = one_plus_q_powers()[static_cast<std::size_t>(j - cancelled)];
        }
      } else {
        const QPoly g = gcd(num_, den_);
        if (g.degree() > 0) {
          num_ = divmod(num_, g).first;
          den_ = divmod(den_, g).first;
        }
      }
    }
    if (!(den_.leading() == BigRational::one())) {
      const BigRational inv = den_.leading().reciprocal();
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  QPoly num_;
  QPoly den_;
};

inline std::optional<BigRational> try_invert(const BigRational& r) {
  if (r.is_zero()) return std::nullopt;
  return r.reciprocal();
}

inline std::optional<QRatFunc> try_invert(const QRatFunc& v) {
  if (v.is_zero()) return std::nullopt;
  return v.reciprocal();
}

/* A polynomial over a ring is invertible iff it is an invertible constant. */
template <RingElement T>
std::optional<Poly<T>> try_invert(const Poly<T>& p) {
  if (p.degree() != 0) return std::nullopt;
  auto inv = try_invert(p.constant_term());
  if (!inv) return std::nullopt;
  return Poly<T>::constant(*inv);
}

/* Polynomial in x with coefficients in Q(q); the value domain for the
 * symbolic-x identities. */
using XPoly = Poly<QRatFunc>;

/* Polynomial in the integration variable y with XPoly coefficients, used by
 * the fermionic functional on symbolic-x integrands. */
using YPoly = Poly<XPoly>;

/* The q-number [x]_q = (1-q^x)/(1-q) as a canonical element of Q(q).
 * For x >= 0 this reduces to the polynomial 1 + q + ... + q^{x-1}. */
inline QRatFunc q_number(long x) {
  if (x >= 0) {
    std::vector<BigRational> ones(static_cast<std::size_t>(x), BigRational::one());
    return QRatFunc(QPoly(std::move(ones)));
  }
  /* (1 - q^{-m})/(1 - q) = -(1 + q + ... + q^{m-1})/q^m for x = -m. */
  const std::size_t m = static_cast<std::size_t>(-x);
  std::vector<BigRational> num(m, BigRational(-1L));
  return QRatFunc(QPoly(std::move(num)), QPoly::monomial(BigRational::one(), m));
}

/* [2]_q = 1 + q, the normalizer that appears in every family. */
inline const QRatFunc& q_two() {
  static const QRatFunc k{qpoly_from({1, 1})};
  return k;
}

inline BigRational eval_at_q(const QRatFunc& v, const BigRational& q0) { return v.eval(q0); }

inline QRatFunc ratfunc_pow(const QRatFunc& v, unsigned k) {
  QRatFunc r = QRatFunc::one();
  for (unsigned i = 0; i < k; ++i) r *= v;
  return r;
}

/* Coefficient-wise evaluation of an XPoly at a rational q, e.g. the q -> 1
 * classical limits. */
inline Poly<BigRational> eval_coefficients_at_q(const XPoly& p, const BigRational& q0) {
  std::vector<BigRational> out;
  out.reserve(p.coefficients().size());
  for (const QRatFunc& c : p.coefficients()) out.push_back(c.eval(q0));
  return Poly<BigRational>(std::move(out));
}

/* Embeds a Q(q) scalar into a coefficient ring R (QRatFunc or XPoly). */
template <typename R>
R embed_ratfunc(const QRatFunc& v) {
  if constexpr (std::is_same_v<R, QRatFunc>) {
    return v;
  } else {
    return R::constant(v);
  }
}

}  // namespace qboole
