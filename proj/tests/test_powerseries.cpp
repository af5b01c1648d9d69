#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qboole/series.hpp"
#include "support/helpers.hpp"

using namespace qboole;
using qboole::testing::Gen;

namespace {

using QSeries = FormalSeries<BigRational>;

QSeries qs(std::size_t order, std::initializer_list<long> coeffs) {
  std::vector<BigRational> v;
  for (long c : coeffs) v.emplace_back(c);
  return QSeries(order, std::move(v));
}

QSeries random_series(Gen& gen, std::size_t order, bool invertible) {
  std::vector<BigRational> c;
  c.reserve(order + 1);
  for (std::size_t i = 0; i <= order; ++i) c.push_back(gen.rational(6, 4));
  if (invertible)
    while (c[0].is_zero()) c[0] = gen.rational(6, 4);
  return QSeries(order, std::move(c));
}

}  // namespace

TEST_CASE("series invariants: explicit order, padded coefficients") {
  const QSeries s = qs(3, {1, 2});
  CHECK(s.order() == 3);
  CHECK(s.coefficients().size() == 4);
  CHECK(s[2] == BigRational::zero());
  CHECK_THROWS_AS(s[4], std::out_of_range);
  CHECK_THROWS_AS(QSeries(1, {BigRational(1), BigRational(2), BigRational(3)}),
                  std::invalid_argument);
  CHECK(QSeries::t(0) == QSeries::zero(0));
}

TEST_CASE("series multiplication examples") {
  CHECK(qs(2, {1, 1}) * qs(2, {1, -1}) == qs(2, {1, 0, -1}));
  CHECK(qs(2, {1, 1}) * qs(2, {1, 1}) == qs(2, {1, 2, 1}));
  /* truncation to the smaller order */
  CHECK((qs(5, {1, 1}) * qs(2, {1, 1})).order() == 2);

  /* constant series over Q(q): 1/(1+q) times (1+q) is 1 */
  using VSeries = FormalSeries<QRatFunc>;
  const QRatFunc two_inv = q_two().reciprocal();
  const VSeries a = VSeries::one(2).scaled(two_inv);
  const VSeries b = VSeries::one(2).scaled(q_two());
  CHECK(a * b == VSeries::one(2));
}

TEST_CASE("series inverse examples") {
  /* 1/((1+q) + q t) to first order: 1/(1+q) - q/(1+q)^2 t. Oracle: the
   * product with the input must be 1 through the order. */
  using VSeries = FormalSeries<QRatFunc>;
  const VSeries a(1, {q_two(), QRatFunc::q()});
  const VSeries inv = a.inverse();
  CHECK(a * inv == VSeries::one(1));
  CHECK(inv[0] == q_two().reciprocal());
  CHECK(inv[1] == -(QRatFunc::q() / (q_two() * q_two())));

  CHECK(qs(3, {1, 1}).inverse() == qs(3, {1, -1, 1, -1}));
  CHECK_THROWS_AS(qs(3, {0, 1}).inverse(), std::invalid_argument);
}

TEST_CASE("log1p, expm1, exp coefficients") {
  CHECK(log1p_series<BigRational>(3) ==
        QSeries(3, {BigRational(0), BigRational(1), BigRational(-1, 2), BigRational(1, 3)}));
  CHECK(expm1_series<BigRational>(3) ==
        QSeries(3, {BigRational(0), BigRational(1), BigRational(1, 2), BigRational(1, 6)}));
  CHECK(exp_series<BigRational>(2) ==
        QSeries(2, {BigRational(1), BigRational(1), BigRational(1, 2)}));
}

TEST_CASE("composition examples") {
  /* expm1(log1p(t)) = t = log1p(expm1(t)) */
  CHECK(expm1_series<BigRational>(5).compose(log1p_series<BigRational>(5)) == QSeries::t(5));
  CHECK(log1p_series<BigRational>(5).compose(expm1_series<BigRational>(5)) == QSeries::t(5));

  /* (1 + t) o (e^t - 1) = e^t */
  CHECK(qs(2, {1, 1}).compose(expm1_series<BigRational>(2)) ==
        QSeries(2, {BigRational(1), BigRational(1), BigRational(1, 2)}));

  /* t o s = s whenever s has no constant term */
  Gen gen(4242);
  for (int i = 0; i < 20; ++i) {
    QSeries s = random_series(gen, 6, false);
    s = s - QSeries::one(6).scaled(s[0]);
    CHECK(QSeries::t(6).compose(s) == s);
  }

  CHECK_THROWS_AS(qs(2, {1, 1}).compose(qs(2, {1, 1})), std::invalid_argument);
}

TEST_CASE("binomial power examples") {
  CHECK(binomial_power<BigRational>(BigRational(2), 3) == qs(3, {1, 2, 1, 0}));
  CHECK(binomial_power<BigRational>(BigRational(1, 2), 2) ==
        QSeries(2, {BigRational(1), BigRational(1, 2), BigRational(-1, 8)}));
  CHECK(binomial_power<BigRational>(BigRational(0), 4) == QSeries::one(4));
  /* equals exp(alpha log(1+t)) */
  const BigRational alpha(-3, 2);
  CHECK(binomial_power<BigRational>(alpha, 8) ==
        exp_series<BigRational>(8).compose(log1p_series<BigRational>(8).scaled(alpha)));
}

TEST_CASE("coefficient extraction with factorial normalization") {
  /* 1/(1+q(1+t)) read off as an exponential generating function */
  using VSeries = FormalSeries<QRatFunc>;
  const VSeries a =
      (binomial_power<QRatFunc>(BigRational::one(), 2).scaled(QRatFunc::q()) +
       VSeries::one(2))
          .inverse();
  CHECK(extract_coefficient(a, 0, true) == q_two().reciprocal());
  CHECK(extract_coefficient(a, 1, true) == -(QRatFunc::q() / (q_two() * q_two())));
  CHECK_THROWS_AS(extract_coefficient(a, 3, true), std::out_of_range);
  /* without normalization this is the raw coefficient */
  CHECK(extract_coefficient(qs(2, {3, 5, 7}), 2, false) == BigRational(7));
  CHECK(extract_coefficient(qs(2, {3, 5, 7}), 2, true) == BigRational(14));
}

TEST_CASE("property: a * inverse(a) = 1 for random invertible series") {
  Gen gen(77001);
  for (int i = 0; i < 50; ++i) {
    const std::size_t order = static_cast<std::size_t>(gen.integer(0, 12));
    const QSeries a = random_series(gen, order, true);
    CHECK(a * a.inverse() == QSeries::one(order));
  }
  /* and over Q(q), where coefficients carry their own denominators */
  Gen gen2(77002);
  for (int i = 0; i < 10; ++i) {
    using VSeries = FormalSeries<QRatFunc>;
    std::vector<QRatFunc> c;
    for (int j = 0; j <= 4; ++j) c.push_back(gen2.ratfunc(1));
    while (c[0].is_zero()) c[0] = gen2.ratfunc(1);
    const VSeries a(4, std::move(c));
    CHECK(a * a.inverse() == VSeries::one(4));
  }
}

TEST_CASE("property: binomial powers compose additively (Vandermonde)") {
  Gen gen(31337);
  for (int i = 0; i < 25; ++i) {
    const BigRational alpha = gen.rational(6, 4);
    const BigRational beta = gen.rational(6, 4);
    CHECK(binomial_power<BigRational>(alpha, 12) * binomial_power<BigRational>(beta, 12) ==
          binomial_power<BigRational>(alpha + beta, 12));
  }
}

TEST_CASE("property: truncation soundness") {
  Gen gen(90210);
  for (int i = 0; i < 25; ++i) {
    const QSeries a = random_series(gen, 12, true);
    const QSeries b = random_series(gen, 12, false);
    const QSeries a8 = a.truncated(8), b8 = b.truncated(8);
    CHECK((a * b).truncated(8) == a8 * b8);
    CHECK((a + b).truncated(8) == a8 + b8);
    CHECK(a.inverse().truncated(8) == a8.inverse());
    QSeries inner = b;
    inner = inner - QSeries::one(12).scaled(inner[0]);
    CHECK(a.compose(inner).truncated(8) == a8.compose(inner.truncated(8)));
  }
  const BigRational alpha(5, 3);
  CHECK(binomial_power<BigRational>(alpha, 12).truncated(7) ==
        binomial_power<BigRational>(alpha, 7));
}
