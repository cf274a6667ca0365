#pragma once

#include <climits>
#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace idforge {

// Dense univariate polynomial in t; coefficient i multiplies t^i.
template <class F>
class Poly {
 public:
  using value_type = F;
  static constexpr int kMinusInfinity = INT_MIN;

  Poly() = default;
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(F c) { return Poly(std::vector<F>{std::move(c)}); }
  static Poly monomial(F c, std::size_t degree) {
    std::vector<F> v(degree + 1);
    v[degree] = std::move(c);
    return Poly(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? kMinusInfinity : static_cast<int>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F{}; }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const F& a) {
    for (auto& x : c_) x *= a;
    trim();
    return *this;
  }
  Poly& operator*=(long long n) {
    for (auto& x : c_) x *= n;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const F& b) { return a *= b; }
  friend Poly operator*(Poly a, long long n) { return a *= n; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<F> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Multiplies by t^k.
  Poly shifted_up(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<F> v(k);
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(std::move(v));
  }

  F eval(const F& x) const {
    F r{};
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<F> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long long>(i);
    return Poly(std::move(v));
  }

  /// True when t^k divides the polynomial.
  bool divisible_by_t_power(std::size_t k) const {
    for (std::size_t i = 0; i < k && i < c_.size(); ++i)
      if (!c_[i].is_zero()) return false;
    return true;
  }
  Poly shifted_down(std::size_t k) const {
    if (k >= c_.size()) return Poly();
    return Poly(std::vector<F>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
  }

  /// Coefficient-wise image under a scalar map, possibly into another field.
  template <class Fn>
  auto map(Fn&& fn) const {
    using G = std::decay_t<decltype(fn(std::declval<const F&>()))>;
    std::vector<G> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.push_back(fn(x));
    return Poly<G>(std::move(v));
  }

  /// Human-readable form, e.g. "3 + 2*t - t^2".
  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      std::string c = c_[i].to_string();
      if (!out.empty()) {
        if (c[0] == '-') {
          out += " - ";
          c.erase(0, 1);
        } else {
          out += " + ";
        }
      }
      if (i == 0)
        out += c;
      else {
        if (c == "-1")
          out += "-";
        else if (c != "1")
          out += c + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<F> c_;
};

}  // namespace idforge
