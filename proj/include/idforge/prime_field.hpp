#pragma once

#include <cstdint>
#include <string>

#include "idforge/error.hpp"

namespace idforge {

bool is_prime_u64(std::uint64_t n);

// Element of F_p. The modulus travels with the value; a default-constructed
// element is an "unbound" zero (modulus 0) that adopts the modulus of the
// other operand, so containers can zero-initialise without a field handle.
class Fp {
 public:
  Fp() = default;
  /// Reduces `v` modulo `p`; `p` is assumed prime (PrimeField checks it).
  Fp(std::int64_t v, std::uint64_t p);
  /// `v` is reduced as an unsigned residue.
  static Fp from_u64(std::uint64_t v, std::uint64_t p);

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp inv() const;
  Fp pow(std::uint64_t e) const;

  Fp& operator+=(const Fp& o);
  Fp& operator-=(const Fp& o);
  Fp& operator*=(const Fp& o);
  Fp& operator*=(long long n);
  Fp& operator/=(const Fp& o) { return *this *= o.inv(); }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator*(Fp a, long long n) { return a *= n; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  Fp operator-() const;

  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }

  /// "v mod p".
  std::string to_string() const;

 private:
  static std::uint64_t join(std::uint64_t a, std::uint64_t b);

  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
};

inline std::string to_string(const Fp& x) { return x.to_string(); }

}  // namespace idforge
