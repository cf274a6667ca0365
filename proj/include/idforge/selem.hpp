#pragma once

#include <array>
#include <algorithm>
#include <optional>
#include <string>
#include <utility>

#include "idforge/error.hpp"
#include "idforge/poly.hpp"

namespace idforge {

// Element (c0 + c1 s + c2 s^2) / d^k of S = k[s, t, 1/d] / (s^3 - s - t^2),
// with d = 3s^2 - 1 and c_i in k[t]. The numerator is kept reduced by
// s^3 = s + t^2, so it is unique for a fixed k; k itself is not minimised
// and equality goes through cross-multiplication by powers of d.
template <class F>
class SElem {
 public:
  using Num = std::array<Poly<F>, 3>;

  SElem() = default;
  SElem(Num num, unsigned dpow) : num_(std::move(num)), k_(dpow) {}
  explicit SElem(Poly<F> c0) : num_{std::move(c0), Poly<F>(), Poly<F>()}, k_(0) {}

  template <class K>
  static SElem constant(const K& field, long long c) {
    return SElem(Poly<F>::constant(field.from_int(c)));
  }
  template <class K>
  static SElem one(const K& field) { return constant(field, 1); }
  template <class K>
  static SElem s(const K& field) { return SElem(Num{Poly<F>(), Poly<F>::constant(field.one()), Poly<F>()}, 0); }
  template <class K>
  static SElem t(const K& field) { return SElem(Poly<F>::monomial(field.one(), 1)); }
  /// d = 3s^2 - 1.
  template <class K>
  static SElem d(const K& field) {
    return SElem(Num{Poly<F>::constant(field.from_int(-1)), Poly<F>(), Poly<F>::constant(field.from_int(3))}, 0);
  }
  template <class K>
  static SElem dinv(const K& field) { return one(field).times_dinv(); }

  const Num& num() const { return num_; }
  const Poly<F>& coord(std::size_t i) const { return num_[i]; }
  unsigned dpow() const { return k_; }

  bool is_zero() const { return num_[0].is_zero() && num_[1].is_zero() && num_[2].is_zero(); }

  SElem times_dinv(unsigned e = 1) const { return SElem(num_, k_ + e); }
  SElem times_s() const { return SElem(mul_s(num_), k_); }

  /// Same element written over d^k, k >= dpow().
  SElem with_dpow(unsigned k) const {
    Num n = num_;
    for (unsigned i = k_; i < k; ++i) n = mul_d(n);
    return SElem(std::move(n), k);
  }

  SElem& operator+=(const SElem& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    unsigned k = std::max(k_, o.k_);
    Num a = with_dpow(k).num_;
    const Num b = o.with_dpow(k).num_;
    for (std::size_t i = 0; i < 3; ++i) a[i] += b[i];
    num_ = std::move(a);
    k_ = k;
    return *this;
  }
  SElem& operator-=(const SElem& o) { return *this += -o; }
  friend SElem operator+(SElem a, const SElem& b) { return a += b; }
  friend SElem operator-(SElem a, const SElem& b) { return a -= b; }
  SElem operator-() const { return SElem(Num{-num_[0], -num_[1], -num_[2]}, k_); }

  friend SElem operator*(const SElem& a, const SElem& b) {
    if (a.is_zero() || b.is_zero()) return SElem();
    std::array<Poly<F>, 5> e;
    for (std::size_t i = 0; i < 3; ++i) {
      if (a.num_[i].is_zero()) continue;
      for (std::size_t j = 0; j < 3; ++j) {
        if (b.num_[j].is_zero()) continue;
        e[i + j] += a.num_[i] * b.num_[j];
      }
    }
    // s^3 = s + t^2, s^4 = s^2 + s t^2
    Num r{e[0] + e[3].shifted_up(2), e[1] + e[3] + e[4].shifted_up(2), e[2] + e[4]};
    return SElem(std::move(r), a.k_ + b.k_);
  }
  SElem& operator*=(const SElem& o) { return *this = *this * o; }
  friend SElem operator*(SElem a, const F& c) {
    for (auto& p : a.num_) p *= c;
    return a;
  }
  friend SElem operator*(SElem a, long long n) {
    for (auto& p : a.num_) p *= n;
    return a;
  }

  /// Equality in S: x == y iff num(x) d^k(y) == num(y) d^k(x).
  friend bool operator==(const SElem& a, const SElem& b) {
    unsigned k = std::max(a.k_, b.k_);
    return a.with_dpow(k).num_ == b.with_dpow(k).num_;
  }

  template <class Fn>
  auto map(Fn&& fn) const {
    using G = typename std::decay_t<decltype(num_[0].map(fn))>::value_type;
    return SElem<G>(typename SElem<G>::Num{num_[0].map(fn), num_[1].map(fn), num_[2].map(fn)}, k_);
  }

  std::string to_string() const {
    std::string n;
    std::size_t terms = 0;
    const char* basis[] = {"", "s", "s^2"};
    for (std::size_t i = 0; i < 3; ++i) {
      if (num_[i].is_zero()) continue;
      std::string c = num_[i].to_string();
      const bool compound = c.find(' ', 1) != std::string::npos;
      std::string term;
      if (i == 0) term = c;
      else if (c == "1") term = basis[i];
      else if (c == "-1") term = std::string("-") + basis[i];
      else term = (compound ? "(" + c + ")" : c) + "*" + basis[i];
      if (!n.empty()) n += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
      else n = term;
      terms += compound ? 2 : 1;
    }
    if (n.empty()) return "0";
    if (k_ == 0) return n;
    if (terms > 1) n = "(" + n + ")";
    return n + "/(3s^2-1)" + (k_ > 1 ? "^" + std::to_string(k_) : "");
  }

 private:
  static Num mul_s(const Num& n) {
    return Num{n[2].shifted_up(2), n[0] + n[2], n[1]};
  }
  static Num mul_d(const Num& n) {
    Num s2 = mul_s(mul_s(n));
    return Num{s2[0] * 3LL - n[0], s2[1] * 3LL - n[1], s2[2] * 3LL - n[2]};
  }

  Num num_{};
  unsigned k_ = 0;
};

template <class F>
bool selem_equal(const SElem<F>& x, const SElem<F>& y) {
  return x == y;
}

/// q with q*s = x, if s divides x in S. Since S/(s) = k[t]/(t^2) and d is a
/// unit mod s, this happens exactly when t^2 divides c0.
template <class F>
std::optional<SElem<F>> divide_by_s(const SElem<F>& x) {
  const auto& n = x.num();
  if (!n[0].divisible_by_t_power(2)) return std::nullopt;
  Poly<F> q2 = n[0].shifted_down(2);
  typename SElem<F>::Num q{n[1] - q2, n[2], q2};
  return SElem<F>(std::move(q), x.dpow());
}

/// Value of x under s -> a, t -> b. Requires a^3 - a = b^2 and 3a^2 - 1 != 0.
template <class K>
typename K::scalar_type residue_at_point(const SElem<typename K::scalar_type>& x,
                                         const typename K::scalar_type& a,
                                         const typename K::scalar_type& b, const K& field);

// x / s^m with x in S.
template <class F>
class FracSElem {
 public:
  FracSElem() = default;
  FracSElem(SElem<F> num, unsigned spow) : num_(std::move(num)), m_(spow) {}
  explicit FracSElem(SElem<F> num) : num_(std::move(num)), m_(0) {}

  template <class K>
  static FracSElem sinv(const K& field) { return FracSElem(SElem<F>::one(field), 1); }

  const SElem<F>& num() const { return num_; }
  unsigned spow() const { return m_; }
  bool is_zero() const { return num_.is_zero(); }

  FracSElem with_spow(unsigned m) const {
    SElem<F> n = num_;
    for (unsigned i = m_; i < m; ++i) n = n.times_s();
    return FracSElem(std::move(n), m);
  }

  /// Cancels powers of s from the denominator while s divides the numerator.
  FracSElem normalized() const {
    FracSElem r = *this;
    while (r.m_ > 0) {
      auto q = divide_by_s(r.num_);
      if (!q) break;
      r.num_ = std::move(*q);
      --r.m_;
    }
    if (r.num_.is_zero()) r.m_ = 0;
    return r;
  }

  FracSElem& operator+=(const FracSElem& o) {
    unsigned m = std::max(m_, o.m_);
    num_ = with_spow(m).num_ + o.with_spow(m).num_;
    m_ = m;
    return *this;
  }
  FracSElem& operator-=(const FracSElem& o) { return *this += -o; }
  friend FracSElem operator+(FracSElem a, const FracSElem& b) { return a += b; }
  friend FracSElem operator-(FracSElem a, const FracSElem& b) { return a -= b; }
  FracSElem operator-() const { return FracSElem(-num_, m_); }
  friend FracSElem operator*(const FracSElem& a, const FracSElem& b) {
    return FracSElem(a.num_ * b.num_, a.m_ + b.m_);
  }
  friend FracSElem operator*(FracSElem a, const F& c) {
    a.num_ = a.num_ * c;
    return a;
  }
  friend FracSElem operator*(FracSElem a, long long n) {
    a.num_ = a.num_ * n;
    return a;
  }

  friend bool operator==(const FracSElem& a, const FracSElem& b) {
    unsigned m = std::max(a.m_, b.m_);
    return a.with_spow(m).num_ == b.with_spow(m).num_;
  }

  std::string to_string() const {
    if (m_ == 0) return num_.to_string();
    return "(" + num_.to_string() + ")/s^" + std::to_string(m_);
  }

 private:
  SElem<F> num_;
  unsigned m_ = 0;
};

template <class K>
typename K::scalar_type residue_at_point(const SElem<typename K::scalar_type>& x,
                                         const typename K::scalar_type& a,
                                         const typename K::scalar_type& b, const K& field) {
  if (!(a * a * a - a == b * b))
    throw Error(ErrorCode::NotOnCurve, "(" + a.to_string() + ", " + b.to_string() + ") is not on s^3 - s = t^2");
  auto den = a * a * 3LL - field.one();
  if (den.is_zero()) throw Error(ErrorCode::DenominatorVanishes, "3s^2 - 1 vanishes at the point");
  auto v = x.coord(0).eval(b) + x.coord(1).eval(b) * a + x.coord(2).eval(b) * a * a;
  auto inv = den.inv();
  for (unsigned i = 0; i < x.dpow(); ++i) v *= inv;
  return v;
}

}  // namespace idforge
