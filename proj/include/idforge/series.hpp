#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "idforge/error.hpp"
#include "idforge/parallel.hpp"
#include "idforge/poly.hpp"

namespace idforge {

// Truncated power series sum_{n <= prec} c_n X^n over a coefficient ring R.
// Coefficients past prec are unknown, never zero; every binary operation
// returns the smaller of the two precisions.
template <class R>
class TruncSeries {
 public:
  TruncSeries() : c_(1) {}
  explicit TruncSeries(std::size_t prec) : c_(prec + 1) {}
  explicit TruncSeries(std::vector<R> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw Error(ErrorCode::InvalidArgument, "series needs at least one coefficient");
  }

  static TruncSeries constant(R c, std::size_t prec) {
    TruncSeries s(prec);
    s.c_[0] = std::move(c);
    return s;
  }

  std::size_t prec() const { return c_.size() - 1; }
  R& operator[](std::size_t i) { return c_[i]; }
  const R& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<R>& coeffs() const { return c_; }

  TruncSeries truncated(std::size_t p) const {
    if (p >= prec()) return *this;
    return TruncSeries(std::vector<R>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(p + 1)));
  }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const R& x) { return x.is_zero(); });
  }
  /// Index of the first nonzero coefficient, or prec()+1 if none is known.
  std::size_t order() const {
    std::size_t i = 0;
    while (i < c_.size() && c_[i].is_zero()) ++i;
    return i;
  }

  TruncSeries& operator+=(const TruncSeries& o) {
    c_.resize(std::min(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  TruncSeries& operator-=(const TruncSeries& o) {
    c_.resize(std::min(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  TruncSeries operator-() const {
    TruncSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  /// Coefficient-wise scaling by a ring element on the right.
  template <class S>
  TruncSeries scaled(const S& a) const {
    TruncSeries r = *this;
    for (auto& x : r.c_) x = x * a;
    return r;
  }
  TruncSeries operator*(long long n) const {
    TruncSeries r = *this;
    for (auto& x : r.c_) x = x * n;
    return r;
  }

  /// Same precision and equal coefficients.
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

  template <class Fn>
  auto map(Fn&& fn) const {
    using G = std::decay_t<decltype(fn(std::declval<const R&>()))>;
    std::vector<G> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.push_back(fn(x));
    return TruncSeries<G>(std::move(v));
  }

 private:
  std::vector<R> c_;
};

/// True iff the coefficients agree up to the smaller precision (and up to
/// `limit` when given).
template <class R>
bool agree(const TruncSeries<R>& a, const TruncSeries<R>& b,
           std::size_t limit = static_cast<std::size_t>(-1)) {
  std::size_t p = std::min({a.prec(), b.prec(), limit});
  for (std::size_t i = 0; i <= p; ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

/// Cauchy product. Each output coefficient is an independent dot product;
/// the parallel kernel splits over output indices.
template <class R>
TruncSeries<R> mul(const TruncSeries<R>& f, const TruncSeries<R>& g, Exec exec = Exec::parallel) {
  const std::size_t p = std::min(f.prec(), g.prec());
  std::vector<R> r(p + 1);
  for_each_index(
      p + 1,
      [&](std::size_t n) {
        R acc = f[0] * g[n];
        for (std::size_t i = 1; i <= n; ++i) acc += f[i] * g[n - i];
        r[n] = std::move(acc);
      },
      exec, 8);
  return TruncSeries<R>(std::move(r));
}

template <class R>
TruncSeries<R> operator*(const TruncSeries<R>& f, const TruncSeries<R>& g) {
  return mul(f, g);
}

/// Inverse of a unit series given the inverse of its constant term.
template <class R>
TruncSeries<R> invert_with(const TruncSeries<R>& f, const R& inv0) {
  std::vector<R> g(f.prec() + 1);
  g[0] = inv0;
  for (std::size_t n = 1; n <= f.prec(); ++n) {
    R acc = f[1] * g[n - 1];
    for (std::size_t i = 2; i <= n; ++i) acc += f[i] * g[n - i];
    g[n] = -(acc * inv0);
  }
  return TruncSeries<R>(std::move(g));
}

/// Inverse over a field; throws NonUnitConstantTerm when f(0) = 0.
template <class F>
TruncSeries<F> invert(const TruncSeries<F>& f) {
  if (f[0].is_zero())
    throw Error(ErrorCode::NonUnitConstantTerm, "series with zero constant term is not invertible");
  return invert_with(f, f[0].inv());
}

template <class R>
TruncSeries<R> pow(TruncSeries<R> base, unsigned e, const R& one) {
  TruncSeries<R> r = TruncSeries<R>::constant(one, base.prec());
  while (e) {
    if (e & 1u) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

template <class F>
TruncSeries<F> derivative(const TruncSeries<F>& f) {
  if (f.prec() == 0)
    throw Error(ErrorCode::PrecisionExceeded, "derivative of a precision-0 series carries no coefficients");
  std::vector<F> v(f.prec());
  for (std::size_t i = 1; i <= f.prec(); ++i) v[i - 1] = f[i] * static_cast<long long>(i);
  return TruncSeries<F>(std::move(v));
}

/// Antiderivative with zero constant term; precision goes up by one.
template <class K>
TruncSeries<typename K::scalar_type> integrate_series(const TruncSeries<typename K::scalar_type>& f,
                                                      const K& field) {
  if (field.characteristic() != 0)
    throw Error(ErrorCode::PositiveCharacteristic, "integration needs characteristic 0");
  using F = typename K::scalar_type;
  std::vector<F> v(f.prec() + 2);
  for (std::size_t i = 0; i <= f.prec(); ++i)
    v[i + 1] = f[i] * field.from_int(static_cast<long long>(i + 1)).inv();
  return TruncSeries<F>(std::move(v));
}

/// binom(i, n) for 0 <= i <= max_i, 0 <= n <= max_n, built with additions only.
template <class K>
std::vector<std::vector<typename K::scalar_type>> binomial_table(std::size_t max_i, std::size_t max_n,
                                                                 const K& field) {
  using F = typename K::scalar_type;
  std::vector<std::vector<F>> b(max_i + 1, std::vector<F>(max_n + 1));
  for (std::size_t i = 0; i <= max_i; ++i) {
    b[i][0] = field.one();
    for (std::size_t n = 1; n <= std::min(i, max_n); ++n) b[i][n] = b[i - 1][n - 1] + b[i - 1][n];
  }
  return b;
}

/// f(t + T) as a series in T (to T-order `order`) with polynomial coefficients.
template <class K>
TruncSeries<Poly<typename K::scalar_type>> shift_substitute(const Poly<typename K::scalar_type>& f,
                                                             std::size_t order, const K& field) {
  using F = typename K::scalar_type;
  TruncSeries<Poly<F>> out(order);
  if (f.is_zero()) return out;
  const std::size_t deg = f.size() - 1;
  auto binom = binomial_table(deg, order, field);
  for (std::size_t n = 0; n <= std::min(order, deg); ++n) {
    std::vector<F> c(deg - n + 1);
    for (std::size_t i = n; i <= deg; ++i) c[i - n] = f.coeffs()[i] * binom[i][n];
    out[n] = Poly<F>(std::move(c));
  }
  return out;
}

/// Components of f(t + T) for a truncated series f in t: the T^n component is
/// sum_i f_i binom(i, n) t^(i-n), known to t-precision prec(f) - n.
template <class K>
std::vector<TruncSeries<typename K::scalar_type>> shift_series(const TruncSeries<typename K::scalar_type>& f,
                                                               std::size_t order, const K& field) {
  using F = typename K::scalar_type;
  if (order > f.prec())
    throw Error(ErrorCode::PrecisionExceeded,
                "T-order " + std::to_string(order) + " exceeds series precision " + std::to_string(f.prec()));
  auto binom = binomial_table(f.prec(), order, field);
  std::vector<TruncSeries<F>> out;
  out.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    std::vector<F> c(f.prec() - n + 1);
    for (std::size_t i = n; i <= f.prec(); ++i) c[i - n] = f[i] * binom[i][n];
    out.emplace_back(std::move(c));
  }
  return out;
}

/// Polynomial with series coefficients, evaluated by Horner's rule.
template <class F>
TruncSeries<F> eval_series_poly(const std::vector<TruncSeries<F>>& p, const TruncSeries<F>& x) {
  TruncSeries<F> r = p.back();
  for (std::size_t i = p.size() - 1; i-- > 0;) r = r * x + p[i];
  return r;
}

/// Series root of P(X) = sum_i p[i] X^i with root(0) = seed, lifted by
/// Newton iteration with doubling precision.
template <class K>
TruncSeries<typename K::scalar_type> newton_solve(const std::vector<TruncSeries<typename K::scalar_type>>& p,
                                                  const typename K::scalar_type& seed, std::size_t prec,
                                                  const K& field) {
  using F = typename K::scalar_type;
  if (p.empty()) throw Error(ErrorCode::InvalidArgument, "empty polynomial");
  std::vector<TruncSeries<F>> dp;
  for (std::size_t i = 1; i < p.size(); ++i) dp.push_back(p[i] * static_cast<long long>(i));
  if (dp.empty()) dp.push_back(TruncSeries<F>::constant(field.zero(), prec));

  auto at = [&](const std::vector<TruncSeries<F>>& q, const TruncSeries<F>& x, std::size_t pr) {
    std::vector<TruncSeries<F>> qt;
    for (const auto& c : q) {
      if (c.prec() < pr)
        throw Error(ErrorCode::InsufficientPrecision, "polynomial coefficients are known only to precision " +
                                                          std::to_string(c.prec()));
      qt.push_back(c.truncated(pr));
    }
    return eval_series_poly(qt, x);
  };

  TruncSeries<F> x = TruncSeries<F>::constant(seed, 0);
  if (!at(p, x, 0)[0].is_zero())
    throw Error(ErrorCode::InvalidArgument, "seed is not a root at order 0");
  if (at(dp, x, 0)[0].is_zero())
    throw Error(ErrorCode::NotASimpleRoot, "P'(seed) vanishes at order 0");

  std::size_t cur = 0;
  while (cur < prec) {
    std::size_t next = std::min(2 * cur + 1, prec);
    std::vector<F> padded(x.coeffs());
    padded.resize(next + 1);
    TruncSeries<F> xs(std::move(padded));
    TruncSeries<F> correction = at(p, xs, next) * invert(at(dp, xs, next));
    x = xs - correction;
    cur = next;
  }
  return x;
}

/// The square root g of f with g(0) = 1, via Newton on g^2 - f.
template <class K>
TruncSeries<typename K::scalar_type> sqrt_unit(const TruncSeries<typename K::scalar_type>& f, const K& field) {
  using F = typename K::scalar_type;
  if (field.characteristic() == 2) throw Error(ErrorCode::CharTwo, "square roots need characteristic != 2");
  if (!(f[0] == field.one())) throw Error(ErrorCode::ConstantTermNotOne, "constant term must be 1");
  std::vector<TruncSeries<F>> p{-f, TruncSeries<F>::constant(field.zero(), f.prec()),
                                TruncSeries<F>::constant(field.one(), f.prec())};
  return newton_solve(p, field.one(), f.prec(), field);
}

// Bivariate truncated series sum c(i, j) U^i T^j, i <= nu, j <= nt.
template <class R>
class BiTruncSeries {
 public:
  BiTruncSeries(std::size_t nu, std::size_t nt) : nu_(nu), nt_(nt), c_((nu + 1) * (nt + 1)) {}

  std::size_t prec_u() const { return nu_; }
  std::size_t prec_t() const { return nt_; }
  R& operator()(std::size_t i, std::size_t j) { return c_[i * (nt_ + 1) + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return c_[i * (nt_ + 1) + j]; }

  BiTruncSeries& operator+=(const BiTruncSeries& o) {
    check_shape(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  BiTruncSeries& operator-=(const BiTruncSeries& o) {
    check_shape(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  friend BiTruncSeries operator+(BiTruncSeries a, const BiTruncSeries& b) { return a += b; }
  friend BiTruncSeries operator-(BiTruncSeries a, const BiTruncSeries& b) { return a -= b; }

  friend BiTruncSeries mul(const BiTruncSeries& a, const BiTruncSeries& b, Exec exec) {
    a.check_shape(b);
    BiTruncSeries r(a.nu_, a.nt_);
    for_each_index(
        a.nu_ + 1,
        [&](std::size_t i) {
          for (std::size_t j = 0; j <= a.nt_; ++j) {
            R acc{};
            for (std::size_t i1 = 0; i1 <= i; ++i1)
              for (std::size_t j1 = 0; j1 <= j; ++j1) {
                if (a(i1, j1).is_zero()) continue;
                acc += a(i1, j1) * b(i - i1, j - j1);
              }
            r(i, j) = std::move(acc);
          }
        },
        exec, 4);
    return r;
  }
  friend BiTruncSeries operator*(const BiTruncSeries& a, const BiTruncSeries& b) {
    return mul(a, b, Exec::parallel);
  }

  friend bool operator==(const BiTruncSeries& a, const BiTruncSeries& b) {
    return a.nu_ == b.nu_ && a.nt_ == b.nt_ && a.c_ == b.c_;
  }

 private:
  void check_shape(const BiTruncSeries& o) const {
    if (nu_ != o.nu_ || nt_ != o.nt_)
      throw Error(ErrorCode::DimensionMismatch, "bivariate series with different truncation");
  }

  std::size_t nu_, nt_;
  std::vector<R> c_;
};

}  // namespace idforge
