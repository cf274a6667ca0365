#include <string>

#include "idforge/error.hpp"
#include "idforge/field.hpp"
#include "idforge/prime_field.hpp"
#include "idforge/rational.hpp"

namespace idforge {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DenominatorDivisibleByP: return "DenominatorDivisibleByP";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorCode::CharTwo: return "CharTwo";
    case ErrorCode::ConstantTermNotOne: return "ConstantTermNotOne";
    case ErrorCode::NotASimpleRoot: return "NotASimpleRoot";
    case ErrorCode::PositiveCharacteristic: return "PositiveCharacteristic";
    case ErrorCode::PrecisionExceeded: return "PrecisionExceeded";
    case ErrorCode::NotOnCurve: return "NotOnCurve";
    case ErrorCode::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorCode::CrossCheckMismatch: return "CrossCheckMismatch";
    case ErrorCode::NonUnitDenominator: return "NonUnitDenominator";
    case ErrorCode::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorCode::PEqualsTwo: return "PEqualsTwo";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- Rational

Rational::Rational(long long n, long long d) {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  v_ = mpq_class(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d)));
  v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
  if (sgn(d) == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto valid_int = [](const std::string& part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < part.size() && (part[i] == '-' || part[i] == '+')) ++i;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string n = s.substr(0, slash);
  std::string d = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(n, true) || !valid_int(d, false))
    throw Error(ErrorCode::InvalidArgument, "not a rational: '" + s + "'");
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  return Rational(mpz_class(n), mpz_class(d));
}

Rational Rational::inv() const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::to_string() const {
  if (den() == 1) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

// ---------------------------------------------------------------------- Fp

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  // This witness set is deterministic for all 64-bit n.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

Fp::Fp(std::int64_t v, std::uint64_t p) : p_(p) {
  if (p == 0) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
  if (v >= 0) {
    v_ = static_cast<std::uint64_t>(v) % p;
  } else {
    std::uint64_t m = (0 - static_cast<std::uint64_t>(v)) % p;
    v_ = m == 0 ? 0 : p - m;
  }
}

Fp Fp::from_u64(std::uint64_t v, std::uint64_t p) {
  if (p == 0) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
  Fp r;
  r.p_ = p;
  r.v_ = v % p;
  return r;
}

std::uint64_t Fp::join(std::uint64_t a, std::uint64_t b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  throw Error(ErrorCode::InvalidArgument, "mixing different prime fields");
}

Fp& Fp::operator+=(const Fp& o) {
  p_ = join(p_, o.p_);
  if (p_ == 0) return *this;
  v_ = v_ + o.v_;
  if (v_ >= p_ || v_ < o.v_) v_ -= p_;
  return *this;
}

Fp& Fp::operator-=(const Fp& o) {
  p_ = join(p_, o.p_);
  if (p_ == 0) return *this;
  v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + (p_ - o.v_);
  return *this;
}

Fp& Fp::operator*=(const Fp& o) {
  p_ = join(p_, o.p_);
  if (p_ == 0) return *this;
  v_ = static_cast<std::uint64_t>(static_cast<unsigned __int128>(v_) * o.v_ % p_);
  return *this;
}

Fp& Fp::operator*=(long long n) {
  if (p_ == 0) return *this;
  return *this *= Fp(n, p_);
}

Fp Fp::operator-() const {
  Fp r = *this;
  if (v_ != 0) r.v_ = p_ - v_;
  return r;
}

Fp Fp::pow(std::uint64_t e) const {
  Fp base = *this, r(1, p_);
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

Fp Fp::inv() const {
  if (v_ == 0) throw Error(ErrorCode::InvalidArgument, "inverse of zero in F_p");
  return pow(p_ - 2);
}

std::string Fp::to_string() const {
  return std::to_string(v_) + " mod " + std::to_string(p_);
}

// ------------------------------------------------------------------ fields

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (!is_prime_u64(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
}

Fp PrimeField::from_rational(const Rational& q) const { return reduce_mod_p(q, p_); }

Rational gen_binomial(const Rational& a, unsigned k) {
  Rational r(1);
  for (unsigned i = 0; i < k; ++i) {
    r *= a - Rational(static_cast<long long>(i));
    r /= Rational(static_cast<long long>(i + 1));
  }
  return r;
}

bool denom_is_2_power(const Rational& q) {
  const mpz_class& d = q.den();
  // d > 0; a power of two has exactly one set bit.
  return mpz_popcount(d.get_mpz_t()) == 1;
}

Fp reduce_mod_p(const Rational& q, std::uint64_t p) {
  if (!is_prime_u64(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  mpz_class pz;
  mpz_import(pz.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  mpz_class n = q.num() % pz;
  mpz_class d = q.den() % pz;
  if (d == 0)
    throw Error(ErrorCode::DenominatorDivisibleByP,
                "denominator of " + q.to_string() + " is divisible by " + std::to_string(p));
  if (n < 0) n += pz;
  auto to_u64 = [](const mpz_class& z) {
    std::uint64_t v = 0;
    mpz_export(&v, nullptr, -1, sizeof(v), 0, 0, z.get_mpz_t());
    return v;
  };
  return Fp::from_u64(to_u64(n), p) / Fp::from_u64(to_u64(d), p);
}

}  // namespace idforge
