#include <doctest.h>

#include "idforge/field.hpp"
#include "idforge/galois.hpp"

using namespace idforge;

namespace {

using Q = Rational;
using S = SElem<Q>;
using QS = TruncSeries<Q>;
const RationalField kQ;
const S s = S::s(kQ), t = S::t(kQ);
const S b_star = (s * t * -3LL).times_dinv();

QS exp_t(std::size_t n) {
  std::vector<Q> c(n + 1);
  Q f(1);
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) f = f / Q(static_cast<long long>(k));
    c[k] = f;
  }
  return QS(std::move(c));
}

const Embedding<Q>& plus64() {
  static const Embedding<Q> e = build_embedding(point_plus(kQ), 64, kQ);
  return e;
}

}  // namespace

TEST_CASE("series_in_S") {
  const auto& e = plus64();
  auto w = series_in_S(e.sigma, e, 8, 2, 64, kQ);
  REQUIRE(w);
  CHECK(*w == s);
  auto d_inv = series_in_S(invert(embed_elem(e, S::d(kQ))), e, 8, 2, 64, kQ);
  REQUIRE(d_inv);
  CHECK(*d_inv * S::d(kQ) == S::one(kQ));
  auto y = solve_y(e, b_star, 64, kQ);
  CHECK(!series_in_S(y, e, 8, 2, 64, kQ));
  auto y2 = series_in_S(y * y, e, 8, 2, 64, kQ);
  REQUIRE(y2);
  CHECK(*y2 == s);
  CHECK(!series_in_S(exp_t(64), e, 8, 2, 64, kQ));
}

TEST_CASE("classify b* at both points") {
  SearchBounds b;
  const auto& ep = plus64();
  auto vp = classify(b_star, ep, b, kQ);
  CHECK(vp.is_mu);
  CHECK(vp.n == 2);
  REQUIRE(vp.witness);
  CHECK(*vp.witness == s);

  auto em = build_embedding(point_minus(kQ), 64, kQ);
  auto vm = classify(b_star, em, b, kQ);
  CHECK(vm.is_mu);
  CHECK(vm.n == 2);
  REQUIRE(vm.witness);
  CHECK(*vm.witness == -s);
}

TEST_CASE("b = 0 has no relation up to bounds") {
  const auto& e = plus64();
  auto v = classify(S(), e, SearchBounds{}, kQ);
  CHECK(!v.is_mu);
  CHECK(!v.witness);
}

TEST_CASE("least n is reported") {
  const auto& e = plus64();
  SearchBounds b;
  // sigma is already in S
  auto v1 = classify_series(e.sigma, e, b, kQ);
  CHECK(v1.n == 1);
  // a cube root of sigma from Newton iteration: y^3 = s but y, y^2 not in S
  std::vector<QS> p{-e.sigma, QS::constant(Q(0), 64), QS::constant(Q(0), 64), QS::constant(Q(1), 64)};
  auto cube_root = newton_solve(p, Q(1), 64, kQ);
  auto v3 = classify_series(cube_root, e, b, kQ);
  CHECK(v3.is_mu);
  CHECK(v3.n == 3);
  REQUIRE(v3.witness);
  CHECK(*v3.witness == s);
  // the transcendental exp(t)
  CHECK(!classify_series(exp_t(64), e, b, kQ).is_mu);
}

TEST_CASE("scaling the solution scales the witness") {
  const auto& e = plus64();
  auto y = solve_y(e, b_star, 64, kQ);
  for (long long c : {2LL, -3LL, 5LL}) {
    auto v = classify_series(y * c, e, SearchBounds{}, kQ);
    CHECK(v.n == 2);
    REQUIRE(v.witness);
    CHECK(*v.witness == s * (c * c));
  }
}

TEST_CASE("serial and parallel verdicts agree") {
  const auto& e = plus64();
  for (const S& b : {b_star, S(), s}) {
    auto a = classify(b, e, SearchBounds{}, kQ, Exec::serial);
    auto c = classify(b, e, SearchBounds{}, kQ, Exec::parallel);
    CHECK(a.is_mu == c.is_mu);
    CHECK(a.n == c.n);
    CHECK(a.witness.has_value() == c.witness.has_value());
    if (a.witness && c.witness) CHECK(*a.witness == *c.witness);
  }
}

TEST_CASE("insufficient precision") {
  const auto& e = plus64();
  SearchBounds b;
  b.prec = b.margin() - 1;
  try {
    classify(b_star, e, b, kQ);
    FAIL("expected an error");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::InsufficientPrecision);
  }
  auto short_e = build_embedding(point_plus(kQ), 40, kQ);
  CHECK_THROWS_AS(series_in_S(short_e.sigma, short_e, 8, 2, 64, kQ), Error);
}
