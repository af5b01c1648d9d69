#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <utility>

#include "qboole/errors.hpp"

namespace qboole {

/**
 * Arbitrary-precision rational number, the scalar ground field for every
 * coefficient in the library.
 *
 * Invariants (maintained by GMP's canonical form):
 *   - gcd(|numerator|, denominator) = 1
 *   - denominator > 0
 *   - zero is 0/1
 *
 * Equality of values is therefore structural equality. Values are immutable
 * in spirit: all operations return fresh objects.
 */
class BigRational {
 public:
  BigRational() : v_(0) {}
  BigRational(long n) : v_(n) {}  // NOLINT: implicit so 0, 1, -3 read naturally
  BigRational(long num, long den) {
    if (den == 0) throw division_by_zero("BigRational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit BigRational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  explicit BigRational(const mpz_class& z) : v_(z) {}

  /* Accepts "p" or "p/q" in base 10, optionally signed. */
  static BigRational from_string(std::string_view s);

  static const BigRational& zero();
  static const BigRational& one();
  static BigRational from_rational(const BigRational& r) { return r; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  BigRational numerator() const { return BigRational(mpz_class(v_.get_num())); }
  BigRational denominator() const { return BigRational(mpz_class(v_.get_den())); }

  BigRational operator-() const { return BigRational(mpq_class(-v_)); }
  BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
  BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
  BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
  BigRational& operator/=(const BigRational& o) {
    if (o.is_zero()) throw division_by_zero("BigRational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  BigRational reciprocal() const {
    if (is_zero()) throw division_by_zero("BigRational: reciprocal of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return BigRational(std::move(r));
  }

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.v_, b.v_);
    return c <=> 0;
  }

  /* "p" when the denominator is 1, "p/q" otherwise. */
  std::string str() const { return v_.get_str(); }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

inline const BigRational& BigRational::zero() {
  static const BigRational k(0L);
  return k;
}

inline const BigRational& BigRational::one() {
  static const BigRational k(1L);
  return k;
}

inline BigRational BigRational::from_string(std::string_view s) {
  mpq_class v;
  if (s.empty() || v.set_str(std::string(s), 10) != 0)
    throw std::invalid_argument("BigRational: cannot parse '" + std::string(s) + "'");
  if (v.get_den() == 0) throw division_by_zero("BigRational: zero denominator");
  v.canonicalize();
  return BigRational(std::move(v));
}

inline BigRational pow(const BigRational& base, unsigned e) {
  BigRational r = BigRational::one();
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace qboole
