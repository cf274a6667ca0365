#pragma once

#include <cstdint>
#include <string>

#include "idforge/prime_field.hpp"
#include "idforge/rational.hpp"

namespace idforge {

// Field handles. Scalars know how to do arithmetic with each other; the
// handle is what creates nonzero constants.

struct RationalField {
  using scalar_type = Rational;

  Rational zero() const { return Rational(); }
  Rational one() const { return Rational(1); }
  Rational from_int(long long n) const { return Rational(n); }
  Rational from_rational(const Rational& q) const { return q; }
  std::uint64_t characteristic() const { return 0; }
  std::string name() const { return "Q"; }
};

class PrimeField {
 public:
  using scalar_type = Fp;

  /// Throws Error(NotPrime) unless `p` is prime.
  explicit PrimeField(std::uint64_t p);

  Fp zero() const { return Fp(0, p_); }
  Fp one() const { return Fp(1, p_); }
  Fp from_int(long long n) const { return Fp(n, p_); }
  /// Throws Error(DenominatorDivisibleByP) when p divides the denominator.
  Fp from_rational(const Rational& q) const;
  std::uint64_t characteristic() const { return p_; }
  std::string name() const { return "F_" + std::to_string(p_); }

 private:
  std::uint64_t p_;
};

template <class F>
struct field_of;
template <>
struct field_of<Rational> {
  using type = RationalField;
};
template <>
struct field_of<Fp> {
  using type = PrimeField;
};
template <class F>
using field_of_t = typename field_of<F>::type;

/// a(a-1)...(a-k+1) / k!
Rational gen_binomial(const Rational& a, unsigned k);

bool denom_is_2_power(const Rational& q);

Fp reduce_mod_p(const Rational& q, std::uint64_t p);

}  // namespace idforge
