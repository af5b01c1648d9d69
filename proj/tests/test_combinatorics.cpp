#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qboole/combinatorics.hpp"
#include "qboole/series.hpp"
#include "qboole/stirling.hpp"

using namespace qboole;

namespace {
const StirlingTable& table() {
  static const StirlingTable t(14);
  return t;
}
}  // namespace

TEST_CASE("Stirling boundary values and the signed convention") {
  const auto& t = table();
  CHECK(t.s1(0, 0) == BigRational(1));
  CHECK(t.s2(0, 0) == BigRational(1));
  for (unsigned n = 1; n <= 10; ++n) {
    CHECK(t.s1(n, 0) == BigRational(0));
    CHECK(t.s2(n, 0) == BigRational(0));
    CHECK(t.s1(n, n) == BigRational(1));
    CHECK(t.s2(n, n) == BigRational(1));
  }
  /* signed first kind */
  CHECK(t.s1(2, 1) == BigRational(-1));
  CHECK(t.s1(3, 2) == BigRational(-3));
  CHECK(t.s1(3, 1) == BigRational(2));
  CHECK(t.s2(3, 2) == BigRational(3));
  CHECK(t.s2(4, 2) == BigRational(7));
  CHECK_THROWS_AS(t.s1(15, 0), std::out_of_range);
  CHECK_THROWS_AS(t.s2(3, 4), std::out_of_range);
}

TEST_CASE("Stirling recurrences hold across the whole table") {
  const auto& t = table();
  for (unsigned n = 0; n < 14; ++n) {
    for (unsigned m = 1; m <= n + 1; ++m) {
      const BigRational s1_nm = m <= n ? t.s1(n, m) : BigRational(0);
      const BigRational s2_nm = m <= n ? t.s2(n, m) : BigRational(0);
      CHECK(t.s1(n + 1, m) ==
            t.s1(n, m - 1) - BigRational(static_cast<long>(n)) * s1_nm);
      CHECK(t.s2(n + 1, m) ==
            t.s2(n, m - 1) + BigRational(static_cast<long>(m)) * s2_nm);
    }
  }
}

TEST_CASE("Stirling numbers match their series definitions through order 12") {
  /* m! sum_{l>=m} S1(l,m) t^l/l! = (log(1+t))^m, and the S2 analogue with
   * (e^t-1)^m. */
  const auto& t = table();
  const auto log_s = log1p_series<BigRational>(12);
  const auto exp_s = expm1_series<BigRational>(12);
  for (unsigned m = 0; m <= 12; ++m) {
    const auto log_pow = log_s.pow(m);
    const auto exp_pow = exp_s.pow(m);
    BigRational lfact = 1;
    for (unsigned l = 0; l <= 12; ++l) {
      if (l > 0) lfact *= BigRational(static_cast<long>(l));
      const BigRational s1 = m <= l ? t.s1(l, m) : BigRational(0);
      const BigRational s2 = m <= l ? t.s2(l, m) : BigRational(0);
      CHECK(log_pow[l] == factorial(m) * s1 / lfact);
      CHECK(exp_pow[l] == factorial(m) * s2 / lfact);
    }
  }
}

TEST_CASE("Stirling orthogonality up to 12") {
  const auto& t = table();
  for (unsigned n = 0; n <= 12; ++n) {
    for (unsigned j = 0; j <= 12; ++j) {
      BigRational acc1 = 0, acc2 = 0;
      for (unsigned m = 0; m <= 12; ++m) {
        if (m <= n && j <= m) acc1 += t.s1(n, m) * t.s2(m, j);
        if (m <= n && j <= m) acc2 += t.s2(n, m) * t.s1(m, j);
      }
      const BigRational expected = n == j ? 1 : 0;
      CHECK(acc1 == expected);
      CHECK(acc2 == expected);
    }
  }
}

TEST_CASE("generalized binomial coefficients") {
  CHECK(gen_binomial(BigRational(-1), 3) == BigRational(-1));
  CHECK(gen_binomial(BigRational(1, 2), 2) == BigRational(-1, 8));
  CHECK(gen_binomial(BigRational(5), 2) == BigRational(10));
  CHECK(gen_binomial(BigRational(3), 7) == BigRational(0));
  CHECK(gen_binomial(BigRational(7, 3), 0) == BigRational(1));
  CHECK(binomial(6, 2) == BigRational(15));
  CHECK(binomial(3, 5) == BigRational(0));
  CHECK(factorial(6) == BigRational(720));
}

TEST_CASE("multinomial coefficients") {
  const unsigned parts_a[] = {2, 1, 1};
  CHECK(multinomial(4, parts_a) == BigRational(12));
  const unsigned parts_b[] = {3};
  CHECK(multinomial(3, parts_b) == BigRational(1));
  const unsigned parts_c[] = {1, 1};
  CHECK_THROWS_AS(multinomial(4, parts_c), std::invalid_argument);
}

TEST_CASE("compositions are exhaustive, exact and ordered") {
  std::vector<std::vector<unsigned>> seen;
  for_each_composition(4, 3, [&](std::span<const unsigned> parts) {
    CHECK(parts.size() == 3);
    unsigned sum = 0;
    for (unsigned p : parts) sum += p;
    CHECK(sum == 4);
    seen.emplace_back(parts.begin(), parts.end());
  });
  CHECK(seen.size() == 15);  // C(4+2, 2)
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  CHECK(seen.front() == std::vector<unsigned>{0, 0, 4});
  CHECK(seen.back() == std::vector<unsigned>{4, 0, 0});
}

TEST_CASE("falling factorial expansions") {
  const auto& t = table();
  const XPoly x = XPoly::identity();
  CHECK(falling_factorial_as_powers(t, 0) == XPoly::one());
  /* x(x-1) = x^2 - x */
  CHECK(falling_factorial_as_powers(t, 2) == x * x - x);
  /* x(x-1)(x-2) = x^3 - 3x^2 + 2x */
  CHECK(falling_factorial_as_powers(t, 3) == x * x * x - (x * x).scaled(QRatFunc::from_rational(3)) +
                                                 x.scaled(QRatFunc::from_rational(2)));
}

TEST_CASE("falling factorial equals the direct product and round-trips") {
  const auto& t = table();
  const XPoly x = XPoly::identity();
  for (unsigned n = 0; n <= 10; ++n) {
    /* direct product oracle */
    XPoly direct = XPoly::one();
    for (unsigned j = 0; j < n; ++j)
      direct = direct * (x - XPoly::from_rational(BigRational(static_cast<long>(j))));
    CHECK(falling_factorial_as_powers(t, n) == direct);

    /* x^n = sum_l S2(n,l) (x)_l */
    const auto coeffs = powers_as_falling_factorials(t, n);
    XPoly back;
    for (unsigned l = 0; l <= n; ++l)
      back += falling_factorial_as_powers(t, l).scaled(QRatFunc::from_rational(coeffs[l]));
    CHECK(back == XPoly::monomial(QRatFunc::one(), n));
  }
}

TEST_CASE("gen_binomial times n! matches the falling factorial at points") {
  const auto& t = table();
  for (unsigned n = 0; n <= 8; ++n) {
    for (long num = -6; num <= 6; ++num) {
      const BigRational x0(num, 3);
      CHECK(gen_binomial(x0, n) * factorial(n) == falling_factorial_at(x0, n));
      CHECK(falling_factorial_as_powers(t, n).eval(QRatFunc::from_rational(x0)) ==
            QRatFunc::from_rational(falling_factorial_at(x0, n)));
    }
  }
}
