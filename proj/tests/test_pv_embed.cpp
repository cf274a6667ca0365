#include <doctest.h>

#include <random>

#include "idforge/field.hpp"
#include "idforge/pv_embed.hpp"
#include "idforge/sampling.hpp"

using namespace idforge;

namespace {

using Q = Rational;
using S = SElem<Q>;
using QS = TruncSeries<Q>;
const RationalField kQ;
const S s = S::s(kQ), t = S::t(kQ), one = S::one(kQ);
const S b_star = (s * t * -3LL).times_dinv();

QS t_series(std::size_t n) {
  QS r(n);
  r[1] = Q(1);
  return r;
}

}  // namespace

TEST_CASE("points") {
  CHECK_THROWS_AS(make_point("bad", Q(0), Q(1), kQ), Error);
  auto p = point_plus(kQ);
  CHECK(p.a == Q(1));
  CHECK(point_minus(kQ).a == Q(-1));
}

TEST_CASE("embedding at P+") {
  auto e = build_embedding(point_plus(kQ), 32, kQ);
  CHECK(e.sigma[0] == Q(1));
  CHECK(e.sigma[1] == Q(0));
  CHECK(e.sigma[2] == Q(1, 2));
  CHECK(e.sigma[3] == Q(0));
  CHECK(e.sigma[4] == Q(-3, 8));
  // independent oracle: Newton root of X^3 - X - t^2 from seed 1
  std::vector<QS> p{-(t_series(32) * t_series(32)), QS::constant(Q(-1), 32), QS::constant(Q(0), 32),
                    QS::constant(Q(1), 32)};
  CHECK(e.sigma == newton_solve(p, Q(1), 32, kQ));
  CHECK((e.sigma * e.sigma * e.sigma - e.sigma - t_series(32) * t_series(32)).is_zero());
  CHECK(embed_elem(e, t) == t_series(32));
}

TEST_CASE("embedding at P-") {
  auto e = build_embedding(point_minus(kQ), 32, kQ);
  CHECK(e.sigma[0] == Q(-1));
  CHECK((e.sigma * e.sigma * e.sigma - e.sigma - t_series(32) * t_series(32)).is_zero());
}

TEST_CASE("embed_elem") {
  auto e = build_embedding(point_plus(kQ), 16, kQ);
  CHECK(embed_elem(e, s * s * s - s - t * t).is_zero());
  CHECK(embed_elem(e, S::d(kQ))[0] == Q(2));
  CHECK(embed_elem(e, FracSElem<Q>(t, 1)) * e.sigma == t_series(16));
  std::mt19937_64 rng(83);
  for (int i = 0; i < 20; ++i) {
    S x = random_selem(rng, kQ), y = random_selem(rng, kQ);
    CHECK(embed_elem(e, x * y) == embed_elem(e, x) * embed_elem(e, y));
    CHECK(embed_elem(e, x + y) == embed_elem(e, x) + embed_elem(e, y));
  }
}

TEST_CASE("embedding commutes with the derivations") {
  auto table = solve_theta_s(16, kQ);
  ThetaSTable<Q> small{{table.a.begin(), table.a.begin() + 7}};
  ThetaS<RationalField> theta(small, kQ);
  for (auto point : {point_plus(kQ), point_minus(kQ)}) {
    auto e = build_embedding(point, table, 16, kQ);
    CHECK(check_embed_commutes(e, theta, 8, 6, 5, kQ).passed());
  }
}

TEST_CASE("s is not a unit at the origin") {
  auto e = build_embedding(make_point("origin", Q(0), Q(0), kQ), 8, kQ);
  try {
    embed_elem(e, FracSElem<Q>(one, 1));
    FAIL("expected an error");
  } catch (const Error& e2) {
    CHECK(e2.code() == ErrorCode::NonUnitDenominator);
  }
}

TEST_CASE("solve_y for b* gives square roots of +-sigma") {
  auto ep = build_embedding(point_plus(kQ), 64, kQ);
  auto y = solve_y(ep, b_star, 64, kQ);
  CHECK(y[0] == Q(1));
  CHECK(y * y == ep.sigma);
  CHECK(ode_residual(ep, b_star, y, kQ).is_zero());

  auto em = build_embedding(point_minus(kQ), 64, kQ);
  auto ym = solve_y(em, b_star, 64, kQ);
  CHECK(ym * ym == -em.sigma);
  CHECK(!(ym * ym == em.sigma));
}

TEST_CASE("solve_y for b = 0") {
  auto e = build_embedding(point_plus(kQ), 24, kQ);
  auto y = solve_y(e, S(), 24, kQ);
  CHECK(y[0] == Q(1));
  CHECK(y[1] == Q(0));  // g(0) = 0 since t/s vanishes at t = 0
  CHECK(ode_residual(e, S(), y, kQ).is_zero());
  // independent route: y = exp(integral g) via the derivative identity y'/y = g
  auto g = embed_elem(e, ode_coefficient(S(), kQ), 23);
  CHECK(derivative(y) * invert(y.truncated(23)) == g);
}

TEST_CASE("constant basis") {
  auto e = build_embedding(point_plus(kQ), 32, kQ);
  CHECK(constant_basis_check(e, b_star, 16, 6, kQ).passed());
  CHECK(constant_basis_check(e, S(), 16, 6, kQ).passed());
  auto y = solve_y(e, b_star, 32, kQ);
  auto bad = constant_basis_check(e, b_star, 16, 6, kQ, std::optional<QS>(y + t_series(32)));
  REQUIRE(bad.counterexample);
  CHECK(bad.counterexample->coefficient == "(ii) constancy at T^1");
}

TEST_CASE("Picard-Vessiot generators") {
  auto e = build_embedding(point_plus(kQ), 32, kQ);
  auto g = pv_generators(e, b_star, 32, kQ);
  CHECK(g.y * g.s_over_y == e.sigma);
  CHECK(g.yt_over_s * g.s_over_y == t_series(32));
  CHECK(g.s_over_y == g.y);  // y = sqrt(sigma)
  auto g0 = pv_generators(e, S(), 32, kQ);
  CHECK(g0.y * g0.t_over_y == t_series(32));
}
