#include <doctest.h>

#include "idforge/char_p.hpp"
#include "idforge/field.hpp"

using namespace idforge;

namespace {

using Q = Rational;
using S = SElem<Q>;
using FS = FracSElem<Q>;
const RationalField kQ;
const S s = S::s(kQ), t = S::t(kQ), one = S::one(kQ);

const USeries<Q>& u12() {
  static const USeries<Q> u = compute_u(12);
  return u;
}

}  // namespace

TEST_CASE("first coefficients of u") {
  const auto& u = u12();
  CHECK(u[0] == FS(one));
  CHECK(u[1] == FS(t.times_dinv(), 1));
}

TEST_CASE("u squares to theta(s)/s") {
  const auto& u = u12();
  auto table = solve_theta_s(12, kQ);
  for (std::size_t n = 0; n <= 12; ++n) {
    FS acc;
    for (std::size_t i = 0; i <= n; ++i) acc = acc + u[i] * u[n - i];
    CHECK(acc == FS(table.a[n], 1));
  }
}

TEST_CASE("2-power certificate") {
  CHECK(certify_2_power(u12()).passed());
  CHECK(certify_2_power(compute_u(0)).passed());
  auto bad = u12();
  bad[3] = bad[3] * Q(1, 3);
  auto rep = certify_2_power(bad);
  REQUIRE(rep.counterexample);
  CHECK(rep.counterexample->coefficient.find("u_3") != std::string::npos);
}

TEST_CASE("invalid primes") {
  try {
    reduce_module_mod_p(2, 4);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PEqualsTwo);
  }
  try {
    reduce_module_mod_p(9, 4);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPrime);
  }
}

TEST_CASE("reduced table equals the table solved over F_p") {
  auto table = solve_theta_s(10, kQ);
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL}) {
    PrimeField fp(p);
    auto direct = solve_theta_s(10, fp);
    auto reduced = reduce_table(table, fp);
    REQUIRE(direct.a.size() == reduced.a.size());
    for (std::size_t n = 0; n < direct.a.size(); ++n) CHECK(direct.a[n] == reduced.a[n]);
  }
}

TEST_CASE("mod-p module laws") {
  auto table = solve_theta_s(10, kQ);
  auto u = compute_u(10, table);
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL}) {
    CAPTURE(p);
    auto mp = reduce_module_mod_p(p, 10, table, u);
    CHECK(check_iteration_mod_p(mp).passed());
    auto st = check_stability(mp);
    CHECK(st.report.passed());
    CHECK(st.entries.size() == 11);
    for (const auto& e : st.entries) {
      CHECK(e.f1_in_module);
      CHECK(e.f2_in_module);
    }
    CHECK(check_leibniz_mod_p(mp, 8, 6, 17).passed());
    CHECK(check_nilpotence_mod_p(mp).passed());
  }
}

TEST_CASE("first component mod p") {
  auto mp = reduce_module_mod_p(5, 6);
  // theta_M^(a)(f1) is the ideal image u_a; f1 is fixed by order 0
  auto f1 = mp.apply(FracSElem<Fp>(SElem<Fp>::one(mp.field)), 6);
  REQUIRE(f1.size() == 7);
  for (std::size_t n = 0; n <= 6; ++n) CHECK(f1[n] == mp.u[n]);
  CHECK(mp.u[1] == reduce_frac(FS(t.times_dinv(), 1), mp.field));
}
