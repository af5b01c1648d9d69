#pragma once

#include <vector>

#include "qboole/ratfunc.hpp"

namespace qboole {

/**
 * Triangular tables of Stirling numbers, 0 <= m <= n <= n_max, built once by
 * recurrence and immutable afterwards (concurrent reads are safe).
 *
 * The first kind is SIGNED, fixed by the series definition
 * (log(1+t))^m = m! sum_{l>=m} S1(l,m) t^l/l!, so S1(2,1) = -1. Many
 * references tabulate the unsigned variant instead; everything in this
 * library (falling-factorial expansions, the Boole<->Euler transforms)
 * requires the signed one.
 *
 * The second kind comes from (e^t-1)^m = m! sum_{l>=m} S2(l,m) t^l/l!.
 */
class StirlingTable {
 public:
  explicit StirlingTable(unsigned n_max);

  unsigned n_max() const { return n_max_; }

  /* Signed first kind. Out-of-range indices throw std::out_of_range. */
  const BigRational& s1(unsigned n, unsigned m) const;
  /* Second kind. */
  const BigRational& s2(unsigned n, unsigned m) const;

  /* Test hook: adds delta to a stored S1 entry so fault-injection tests can
   * watch a verifier produce a counterexample. Never call outside tests. */
  void corrupt_s1_for_testing(unsigned n, unsigned m, const BigRational& delta);

 private:
  unsigned n_max_;
  std::vector<std::vector<BigRational>> s1_;
  std::vector<std::vector<BigRational>> s2_;
};

/* (x)_n = x(x-1)...(x-n+1) expanded in the power basis:
 * (x)_n = sum_l S1(n,l) x^l. */
XPoly falling_factorial_as_powers(const StirlingTable& table, unsigned n);

/* Inverse conversion: x^n = sum_l S2(n,l) (x)_l; returns the coefficient
 * list indexed by l. */
std::vector<BigRational> powers_as_falling_factorials(const StirlingTable& table, unsigned n);

/* (x0)_n at a rational point, by the direct product. */
BigRational falling_factorial_at(const BigRational& x0, unsigned n);

}  // namespace qboole
