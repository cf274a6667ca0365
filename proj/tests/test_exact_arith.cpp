#include <doctest.h>

#include <random>

#include "idforge/field.hpp"
#include "idforge/matrix.hpp"
#include "idforge/sampling.hpp"

using namespace idforge;

namespace {

Rational rand_q(std::mt19937_64& rng) {
  long long n = draw_int(rng, -50, 50), d = draw_int(rng, 1, 40);
  return Rational(n, d);
}

}  // namespace

TEST_CASE("rationals stay in lowest terms") {
  Rational q(6, -4);
  CHECK(q.to_string() == "-3/2");
  CHECK(q.num() == -3);
  CHECK(q.den() == 2);
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK_THROWS_AS(Rational::parse("10/-4"), Error);
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("x"), Error);
}

TEST_CASE("field axioms over Q on samples") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Rational a = rand_q(rng), b = rand_q(rng), c = rand_q(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Rational(0));
    if (!a.is_zero()) CHECK(a * a.inv() == Rational(1));
  }
}

TEST_CASE("field axioms over F_p on samples") {
  for (std::uint64_t p : {3ULL, 5ULL, 101ULL, 1000000007ULL, 18446744073709551557ULL}) {
    PrimeField f(p);
    std::mt19937_64 rng(p);
    for (int i = 0; i < 200; ++i) {
      Fp a = Fp::from_u64(rng(), p), b = Fp::from_u64(rng(), p), c = Fp::from_u64(rng(), p);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - b) + b == a);
      if (!a.is_zero()) CHECK(a * a.inv() == f.one());
    }
  }
}

TEST_CASE("prime field construction and rendering") {
  CHECK_THROWS_AS(PrimeField(9), Error);
  CHECK_THROWS_AS(PrimeField(1), Error);
  try {
    PrimeField bad(15);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPrime);
  }
  PrimeField f7(7);
  CHECK(f7.from_int(-1).to_string() == "6 mod 7");
  CHECK(f7.from_int(10).value() == 3);
  CHECK(is_prime_u64(2));
  CHECK(!is_prime_u64(561));  // Carmichael
  CHECK(is_prime_u64(18446744073709551557ULL));
}

TEST_CASE("gen_binomial examples") {
  CHECK(gen_binomial(Rational(1, 2), 1) == Rational(1, 2));
  CHECK(gen_binomial(Rational(1, 2), 2) == Rational(-1, 8));
  CHECK(gen_binomial(Rational(3), 5) == Rational(0));
  CHECK(gen_binomial(Rational(1, 2), 0) == Rational(1));
}

TEST_CASE("gen_binomial satisfies Pascal's rule") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    Rational a = rand_q(rng);
    unsigned k = static_cast<unsigned>(draw_int(rng, 1, 12));
    CHECK(gen_binomial(a, k) == gen_binomial(a - Rational(1), k) + gen_binomial(a - Rational(1), k - 1));
  }
}

TEST_CASE("denominators of binom(1/2, k) are powers of 2 for k <= 50") {
  CHECK(denom_is_2_power(Rational(-1, 8)));
  CHECK(!denom_is_2_power(Rational(1, 3)));
  CHECK(denom_is_2_power(Rational(5)));
  for (unsigned k = 0; k <= 50; ++k) CHECK(denom_is_2_power(gen_binomial(Rational(1, 2), k)));
  // oracle for k = 5: (1/2)(-1/2)(-3/2)(-5/2)(-7/2)/120 = 7/256
  CHECK(gen_binomial(Rational(1, 2), 5) == Rational(7, 256));
}

TEST_CASE("reduce_mod_p") {
  CHECK(reduce_mod_p(Rational(1, 2), 5).value() == 3);
  CHECK(reduce_mod_p(Rational(7), 7).value() == 0);
  CHECK(reduce_mod_p(Rational(-1, 3), 7).value() == 2);
  try {
    reduce_mod_p(Rational(1, 5), 5);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DenominatorDivisibleByP);
  }
  // reduction is a ring map
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    Rational a = rand_q(rng), b = rand_q(rng);
    for (std::uint64_t p : {41ULL, 43ULL}) {
      CHECK(reduce_mod_p(a * b, p) == reduce_mod_p(a, p) * reduce_mod_p(b, p));
      CHECK(reduce_mod_p(a + b, p) == reduce_mod_p(a, p) + reduce_mod_p(b, p));
    }
  }
}

TEST_CASE("solve_linear examples") {
  using M = ExactMatrix<Rational>;
  auto x = solve_linear(M{{1, 0}, {0, 1}}, {Rational(3), Rational(5)});
  REQUIRE(x);
  CHECK(*x == std::vector<Rational>{3, 5});
  CHECK(!solve_linear(M{{1, 1}, {2, 2}}, {Rational(1), Rational(3)}));
  auto h = solve_linear(M{{2}}, {Rational(1)});
  REQUIRE(h);
  CHECK((*h)[0] == Rational(1, 2));
  CHECK_THROWS_AS(solve_linear(M{{1, 2}}, {Rational(1), Rational(2)}), Error);
}

TEST_CASE("solve_linear solutions satisfy the system") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = static_cast<std::size_t>(draw_int(rng, 1, 7)), c = static_cast<std::size_t>(draw_int(rng, 1, 7));
    ExactMatrix<Rational> a(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = draw_int(rng, 0, 3) == 0 ? Rational(0) : rand_q(rng);
    // consistent right-hand side from a known vector
    std::vector<Rational> x0(c);
    for (auto& v : x0) v = rand_q(rng);
    auto rhs = a.apply(x0);
    for (Exec e : {Exec::serial, Exec::parallel}) {
      auto x = solve_linear(a, rhs, e);
      REQUIRE(x);
      CHECK(a.apply(*x) == rhs);
    }
    CHECK(solve_linear(a, rhs, Exec::serial) == solve_linear(a, rhs, Exec::parallel));
  }
}

TEST_CASE("solve_linear over F_p") {
  PrimeField f(7);
  ExactMatrix<Fp> a(2, 2);
  a(0, 0) = f.from_int(2);
  a(0, 1) = f.from_int(1);
  a(1, 0) = f.from_int(1);
  a(1, 1) = f.from_int(3);
  std::vector<Fp> v{f.from_int(1), f.from_int(2)};
  auto x = solve_linear(a, v);
  REQUIRE(x);
  CHECK(a.apply(*x) == v);
  // det 2*4 - 1 = 7 = 0 mod 7, and (1, 2) is not a multiple of the rows' ratio
  a(1, 1) = f.from_int(4);
  CHECK(!solve_linear(a, v));
}
