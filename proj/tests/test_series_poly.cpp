#include <doctest.h>

#include <random>

#include "idforge/field.hpp"
#include "idforge/sampling.hpp"
#include "idforge/series.hpp"

using namespace idforge;

namespace {

using Q = Rational;
using QS = TruncSeries<Q>;
using QP = Poly<Q>;
const RationalField kQ;

QS series(std::vector<Q> c) { return QS(std::move(c)); }
QP poly(std::vector<Q> c) { return QP(std::move(c)); }

// X^3 - X - t^2 with coefficients to precision n
std::vector<QS> cubic(std::size_t n) {
  QS c0(n);
  if (n >= 2) c0[2] = Q(-1);
  return {c0, QS::constant(Q(-1), n), QS::constant(Q(0), n), QS::constant(Q(1), n)};
}

}  // namespace

TEST_CASE("polynomials trim and report degree") {
  CHECK(QP().degree() == QP::kMinusInfinity);
  CHECK(poly({1, 2, 0, 0}).degree() == 1);
  CHECK(poly({0, 0}).is_zero());
  CHECK(poly({1, -1}) * poly({1, 1}) == poly({1, 0, -1}));
  CHECK(poly({0, 0, 3}).derivative() == poly({0, 6}));
  CHECK(poly({1, -2, 1}).to_string() == "1 - 2*t + t^2");
  CHECK(poly({0, 0, 1, 4}).divisible_by_t_power(2));
  CHECK(!poly({0, 1}).divisible_by_t_power(2));
  CHECK(poly({2, 0, 1}).eval(Q(3)) == Q(11));
}

TEST_CASE("series arithmetic examples") {
  auto inv = invert(series({1, -1, 0, 0, 0}));
  CHECK(inv == series({1, 1, 1, 1, 1}));
  CHECK(series({1, 1, 0, 0, 0}) * series({1, -1, 0, 0, 0}) == series({1, 0, -1, 0, 0}));
  try {
    invert(series({0, 1, 1}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonUnitConstantTerm);
  }
}

TEST_CASE("binary operations keep the smaller precision") {
  QS a = series({1, 2, 3, 4, 5}), b = series({1, 1});
  CHECK((a + b).prec() == 1);
  CHECK((a * b).prec() == 1);
  CHECK((a - b) == series({0, 1}));
  CHECK(agree(a, series({1, 2, 3})));
  CHECK(!agree(a, series({1, 2, 4})));
}

TEST_CASE("series ring axioms and inverse on samples") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 40; ++i) {
    QS f = random_series(rng, 10, kQ), g = random_series(rng, 10, kQ), h = random_series(rng, 10, kQ);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * g == g * f);
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(mul(f, g, Exec::serial) == mul(f, g, Exec::parallel));
    f[0] = Q(draw_int(rng, 1, 5));
    CHECK(f * invert(f) == QS::constant(Q(1), 10));
  }
}

TEST_CASE("shift_substitute examples") {
  auto s = shift_substitute(poly({0, 0, 1}), 4, kQ);
  CHECK(s[0] == poly({0, 0, 1}));
  CHECK(s[1] == poly({0, 2}));
  CHECK(s[2] == poly({1}));
  CHECK(s[3].is_zero());
  auto c = shift_substitute(poly({7}), 3, kQ);
  CHECK(c[0] == poly({7}));
  CHECK(c[1].is_zero());
  auto t3 = shift_substitute(poly({0, 0, 0, 1}), 2, kQ);
  CHECK(t3.prec() == 2);
  CHECK(t3[0] == poly({0, 0, 0, 1}));
  CHECK(t3[1] == poly({0, 0, 3}));
  CHECK(t3[2] == poly({0, 3}));
}

TEST_CASE("shift_substitute is a ring homomorphism") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 40; ++i) {
    QP f = random_poly(rng, 5, kQ), g = random_poly(rng, 5, kQ);
    auto sf = shift_substitute(f, 8, kQ), sg = shift_substitute(g, 8, kQ);
    CHECK(shift_substitute(f * g, 8, kQ) == sf * sg);
    CHECK(shift_substitute(f + g, 8, kQ) == sf + sg);
  }
}

TEST_CASE("shift_series tracks t-precision") {
  QS f = series({1, 1, 1, 1});  // 1 + t + t^2 + t^3
  auto comps = shift_series(f, 2, kQ);
  CHECK(comps[0] == f);
  CHECK(comps[1] == series({1, 2, 3}));
  CHECK(comps[2] == series({1, 3}));
  CHECK_THROWS_AS(shift_series(f, 4, kQ), Error);
}

TEST_CASE("sqrt_unit examples") {
  CHECK(sqrt_unit(QS::constant(Q(1), 5), kQ) == QS::constant(Q(1), 5));
  CHECK(sqrt_unit(series({1, 2, 1, 0, 0}), kQ) == series({1, 1, 0, 0, 0}));
  // sigma to t^5; c4 from squaring back (1 + t^2/4 + c4 t^4)^2: 2 c4 + 1/16 = -3/8
  QS sigma = series({1, 0, Q(1, 2), 0, Q(-3, 8), 0});
  QS r = sqrt_unit(sigma, kQ);
  CHECK(r[2] == Q(1, 4));
  CHECK(r[4] == Q(-7, 32));
  CHECK(r * r == sigma);
  try {
    sqrt_unit(series({2, 1}), kQ);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConstantTermNotOne);
  }
  try {
    PrimeField f2(2);
    sqrt_unit(TruncSeries<Fp>::constant(f2.one(), 3), f2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CharTwo);
  }
}

TEST_CASE("sqrt_unit squares back on samples") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 20; ++i) {
    QS g = random_series(rng, 12, kQ);
    g[0] = Q(1);
    QS f = g * g;
    CHECK(sqrt_unit(f, kQ) == g);
  }
}

TEST_CASE("newton_solve on the curve") {
  QS sigma = newton_solve(cubic(16), Q(1), 16, kQ);
  CHECK(sigma[0] == Q(1));
  CHECK(sigma[1] == Q(0));
  CHECK(sigma[2] == Q(1, 2));
  CHECK(sigma[4] == Q(-3, 8));
  CHECK(eval_series_poly(cubic(16), sigma).is_zero());

  QS minus = newton_solve(cubic(16), Q(-1), 16, kQ);
  CHECK(minus[0] == Q(-1));
  CHECK(eval_series_poly(cubic(16), minus).is_zero());

  QS z(4);
  z[2] = Q(-1);
  std::vector<QS> sq{z, QS::constant(Q(0), 4), QS::constant(Q(1), 4)};
  try {
    newton_solve(sq, Q(0), 4, kQ);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotASimpleRoot);
  }
  CHECK_THROWS_AS(newton_solve(cubic(4), Q(2), 4, kQ), Error);
}

TEST_CASE("integrate_series and derivative") {
  CHECK(integrate_series(QS::constant(Q(1), 3), kQ) == series({0, 1, 0, 0, 0}));
  CHECK(integrate_series(series({0, 0, 1}), kQ) == series({0, 0, 0, Q(1, 3)}));
  CHECK(integrate_series(QS(2), kQ).is_zero());
  CHECK(integrate_series(QS(2), kQ).prec() == 3);
  std::mt19937_64 rng(37);
  for (int i = 0; i < 20; ++i) {
    QS f = random_series(rng, 9, kQ);
    CHECK(derivative(integrate_series(f, kQ)) == f);
  }
  try {
    PrimeField f5(5);
    integrate_series(TruncSeries<Fp>::constant(f5.one(), 3), f5);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PositiveCharacteristic);
  }
}

TEST_CASE("bivariate series product") {
  BiTruncSeries<Q> a(2, 2), b(2, 2);
  a(0, 0) = Q(1);
  a(1, 0) = Q(1);  // 1 + U
  b(0, 0) = Q(1);
  b(0, 1) = Q(1);  // 1 + T
  auto p = a * b;
  CHECK(p(0, 0) == Q(1));
  CHECK(p(1, 0) == Q(1));
  CHECK(p(0, 1) == Q(1));
  CHECK(p(1, 1) == Q(1));
  CHECK(p(2, 2).is_zero());
  CHECK(mul(a, b, Exec::serial) == mul(a, b, Exec::parallel));
  CHECK_THROWS_AS(a + BiTruncSeries<Q>(1, 2), Error);
}
