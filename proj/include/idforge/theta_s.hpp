#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <vector>

#include "idforge/error.hpp"
#include "idforge/parallel.hpp"
#include "idforge/selem.hpp"
#include "idforge/series.hpp"

namespace idforge {

// a_n = theta^(n)(s) for n = 0..N.
template <class F>
struct ThetaSTable {
  std::vector<SElem<F>> a;

  std::size_t depth() const { return a.size() - 1; }
};

/// Solves theta(s)^3 - theta(s) = (t + T)^2 order by order. Writing
/// theta(s) = s + A with A = sum_{n>=1} a_n T^n, the T^n coefficient reads
///   d a_n + 3s [A^2]_n + [A^3]_n = [(t+T)^2]_n,
/// and [A^2]_n, [A^3]_n only involve a_1..a_{n-1}. Both are kept as running
/// coefficient arrays so each step costs O(n) ring multiplications.
template <class K>
ThetaSTable<typename K::scalar_type> solve_theta_s(std::size_t depth, const K& field) {
  using F = typename K::scalar_type;
  using S = SElem<F>;
  const S s = S::s(field);
  ThetaSTable<F> table;
  table.a.reserve(depth + 1);
  table.a.push_back(s);
  std::vector<S> sq(depth + 1), cube(depth + 1);  // [A^2]_n, [A^3]_n
  const S s3 = s * 3LL;
  for (std::size_t n = 1; n <= depth; ++n) {
    for (std::size_t i = 1; i < n; ++i) sq[n] += table.a[i] * table.a[n - i];
    for (std::size_t i = 1; i + 1 < n; ++i) cube[n] += table.a[i] * sq[n - i];
    S rhs;
    if (n == 1) rhs = S::t(field) * 2LL;
    if (n == 2) rhs = S::one(field);
    table.a.push_back((rhs - s3 * sq[n] - cube[n]).times_dinv());
  }
  return table;
}

/// The first component theta^(1) as the derivation with D(t) = 1 and
/// D(s) = 2t/d; independent of the table.
template <class K>
SElem<typename K::scalar_type> derivation(const SElem<typename K::scalar_type>& x, const K& field) {
  using F = typename K::scalar_type;
  using S = SElem<F>;
  const auto& n = x.num();
  // D(c0 + c1 s + c2 s^2) = c0' + c1' s + c2' s^2 + (c1 + 2 c2 s) * 2t/d
  S dn(typename S::Num{n[0].derivative(), n[1].derivative(), n[2].derivative()}, 0);
  S inner(typename S::Num{n[1], n[2] * 2LL, Poly<F>()}, 0);
  dn += (inner * S::t(field) * 2LL).times_dinv();
  if (x.dpow() == 0) return dn;
  // D(num / d^k) = D(num)/d^k - k num D(d)/d^(k+1), D(d) = 12 s t / d
  const S num_only(n, 0);
  S dd = (S::s(field) * S::t(field) * 12LL).times_dinv();
  return dn.times_dinv(x.dpow()) - (num_only * dd * static_cast<long long>(x.dpow())).times_dinv(x.dpow() + 1);
}

// The iterative derivation theta on S to a fixed T-order. Holds the series
// theta(s), theta(s)^2 and theta(d)^-1, which every evaluation reuses.
template <class K>
class ThetaS {
 public:
  using F = typename K::scalar_type;
  using S = SElem<F>;
  using Series = TruncSeries<S>;
  using FracSeries = TruncSeries<FracSElem<F>>;

  ThetaS(std::size_t order, const K& field) : ThetaS(solve_theta_s(order, field), field) {}

  ThetaS(ThetaSTable<F> table, const K& field) : field_(field), table_(std::move(table)) {
    const std::size_t n = table_.depth();
    theta_s_ = Series(table_.a);
    theta_s2_ = theta_s_ * theta_s_;
    Series theta_d = theta_s2_ * 3LL - Series::constant(S::one(field_), n);
    theta_d_inv_ = invert_with(theta_d, S::dinv(field_));
    FracSeries theta_s_frac = theta_s_.map([](const S& x) { return FracSElem<F>(x); });
    theta_s_inv_ = invert_with(theta_s_frac, FracSElem<F>::sinv(field_));
  }

  std::size_t order() const { return table_.depth(); }
  const K& field() const { return field_; }
  const ThetaSTable<F>& table() const { return table_; }
  const Series& theta_s() const { return theta_s_; }

  /// theta(x) = num(theta(s), t + T) * theta(d)^-k, truncated at `order`.
  Series apply(const S& x, std::size_t order) const {
    check(order);
    auto shifted = [&](std::size_t i) {
      return shift_substitute(x.coord(i), order, field_).map([](const Poly<F>& p) { return S(p); });
    };
    const Series ts = theta_s_.truncated(order);
    // Horner in theta(s)
    Series acc = shifted(2);
    for (std::size_t i = 2; i-- > 0;) {
      if (!acc.is_zero()) acc = acc * ts;
      acc += shifted(i);
    }
    if (x.dpow() > 0) acc = acc * d_inv_power(x.dpow()).truncated(order);
    return acc;
  }
  Series apply(const S& x) const { return apply(x, order()); }

  FracSeries apply(const FracSElem<F>& x, std::size_t order) const {
    FracSeries num = apply(x.num(), order).map([](const S& y) { return FracSElem<F>(y); });
    if (x.spow() == 0) return num;
    return num * pow(theta_s_inv_.truncated(order), x.spow(), FracSElem<F>(S::one(field_)));
  }

  /// theta(s)^-1 with coefficients in S[1/s].
  const FracSeries& theta_s_inv() const { return theta_s_inv_; }

 private:
  void check(std::size_t order) const {
    if (order > table_.depth())
      throw Error(ErrorCode::PrecisionExceeded, "theta on S was prepared to order " + std::to_string(table_.depth()) +
                                                    ", requested " + std::to_string(order));
  }

  // theta(d)^-k, memoized: evaluation of elements with large denominator
  // exponents dominates the axiom checks otherwise.
  Series d_inv_power(unsigned k) const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto& powers = cache_->powers;
    if (powers.empty()) powers.push_back(Series::constant(S::one(field_), order()));
    while (powers.size() <= k) powers.push_back(powers.back() * theta_d_inv_);
    return powers[k];
  }

  struct PowerCache {
    std::mutex mutex;
    std::vector<Series> powers;
  };

  K field_;
  ThetaSTable<F> table_;
  std::shared_ptr<PowerCache> cache_ = std::make_shared<PowerCache>();
  Series theta_s_, theta_s2_, theta_d_inv_;
  FracSeries theta_s_inv_;
};

}  // namespace idforge
