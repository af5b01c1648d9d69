#pragma once

#include <random>
#include <vector>

#include "qboole/ratfunc.hpp"

namespace qboole::testing {

/* Seeded generators for property-style tests. */
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
  }

  BigRational rational(long max_abs_num = 9, long max_den = 9) {
    return BigRational(integer(-max_abs_num, max_abs_num), integer(1, max_den));
  }

  BigRational nonzero_rational(long max_abs_num = 9, long max_den = 9) {
    for (;;) {
      BigRational r = rational(max_abs_num, max_den);
      if (!r.is_zero()) return r;
    }
  }

  QPoly qpoly(int max_degree, long max_abs_num = 5, long max_den = 4) {
    const int deg = static_cast<int>(integer(0, max_degree));
    std::vector<BigRational> c;
    c.reserve(static_cast<std::size_t>(deg) + 1);
    for (int i = 0; i <= deg; ++i) c.push_back(rational(max_abs_num, max_den));
    return QPoly(std::move(c));
  }

  QPoly nonzero_qpoly(int max_degree, long max_abs_num = 5, long max_den = 4) {
    for (;;) {
      QPoly p = qpoly(max_degree, max_abs_num, max_den);
      if (!p.is_zero()) return p;
    }
  }

  QRatFunc ratfunc(int max_degree = 3) {
    return QRatFunc(qpoly(max_degree), nonzero_qpoly(max_degree));
  }

  QRatFunc nonzero_ratfunc(int max_degree = 3) {
    for (;;) {
      QRatFunc v = ratfunc(max_degree);
      if (!v.is_zero()) return v;
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace qboole::testing
