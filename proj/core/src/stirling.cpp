#include "qboole/stirling.hpp"

#include <stdexcept>

namespace qboole {

StirlingTable::StirlingTable(unsigned n_max) : n_max_(n_max) {
  s1_.resize(n_max + 1);
  s2_.resize(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    s1_[n].assign(n + 1, BigRational::zero());
    s2_[n].assign(n + 1, BigRational::zero());
  }
  s1_[0][0] = BigRational::one();
  s2_[0][0] = BigRational::one();
  /* S1(n+1,m) = S1(n,m-1) - n*S1(n,m);  S2(n+1,m) = S2(n,m-1) + m*S2(n,m). */
  for (unsigned n = 0; n < n_max; ++n) {
    for (unsigned m = 1; m <= n + 1; ++m) {
      const BigRational& a1 = s1_[n][m - 1];
      const BigRational b1 = m <= n ? s1_[n][m] : BigRational::zero();
      s1_[n + 1][m] = a1 - BigRational(static_cast<long>(n)) * b1;
      const BigRational& a2 = s2_[n][m - 1];
      const BigRational b2 = m <= n ? s2_[n][m] : BigRational::zero();
      s2_[n + 1][m] = a2 + BigRational(static_cast<long>(m)) * b2;
    }
  }
}

const BigRational& StirlingTable::s1(unsigned n, unsigned m) const {
  if (n > n_max_ || m > n) throw std::out_of_range("StirlingTable: s1 index out of range");
  return s1_[n][m];
}

const BigRational& StirlingTable::s2(unsigned n, unsigned m) const {
  if (n > n_max_ || m > n) throw std::out_of_range("StirlingTable: s2 index out of range");
  return s2_[n][m];
}

void StirlingTable::corrupt_s1_for_testing(unsigned n, unsigned m, const BigRational& delta) {
  if (n > n_max_ || m > n) throw std::out_of_range("StirlingTable: s1 index out of range");
  s1_[n][m] += delta;
}

XPoly falling_factorial_as_powers(const StirlingTable& table, unsigned n) {
  std::vector<QRatFunc> coeffs;
  coeffs.reserve(n + 1);
  for (unsigned l = 0; l <= n; ++l)
    coeffs.push_back(QRatFunc::from_rational(table.s1(n, l)));
  return XPoly(std::move(coeffs));
}

std::vector<BigRational> powers_as_falling_factorials(const StirlingTable& table, unsigned n) {
  std::vector<BigRational> coeffs;
  coeffs.reserve(n + 1);
  for (unsigned l = 0; l <= n; ++l) coeffs.push_back(table.s2(n, l));
  return coeffs;
}

BigRational falling_factorial_at(const BigRational& x0, unsigned n) {
  BigRational p = BigRational::one();
  for (unsigned j = 0; j < n; ++j) p *= x0 - BigRational(static_cast<long>(j));
  return p;
}

}  // namespace qboole
