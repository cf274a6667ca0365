#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "idforge/error.hpp"
#include "idforge/parallel.hpp"
#include "idforge/series.hpp"

namespace idforge {

// An iterative derivation on a ring with elements of type R, presented by
// its components theta^(0..n)(x).
template <class R>
struct IdMap {
  std::string name;
  std::size_t max_order = 0;
  std::function<std::vector<R>(const R&, std::size_t)> components;
  std::function<bool(const R&, const R&)> equal;
  std::function<bool(const R&)> is_zero;
  std::function<R(std::mt19937_64&)> sample;
  std::vector<R> fixed_samples;  // basis monomials
  std::function<std::string(const R&)> render;
};

struct Counterexample {
  std::size_t sample_index = 0;
  std::vector<std::string> elements;
  std::string coefficient;  // e.g. "n=2" or "(i,j)=(1,1)"
  std::string lhs;
  std::string rhs;
};

struct AxiomReport {
  std::string law;
  std::string instance;
  std::size_t samples_tested = 0;
  std::string bound;
  std::optional<Counterexample> counterexample;

  bool passed() const { return !counterexample.has_value(); }
};

template <class R>
R nth_component(const IdMap<R>& theta, const R& x, std::size_t n) {
  if (n > theta.max_order)
    throw Error(ErrorCode::PrecisionExceeded, theta.name + " supports components up to " +
                                                  std::to_string(theta.max_order));
  return theta.components(x, n)[n];
}

namespace detail {

template <class Fn>
std::optional<Counterexample> first_failure(std::size_t n, Fn&& check_one, Exec exec) {
  // Indices past a known failure are skipped; the lowest failing index is
  // still always evaluated, so the reported counterexample is deterministic.
  std::vector<std::optional<Counterexample>> results(n);
  std::atomic<std::size_t> first_bad{n};
  for_each_index(
      n,
      [&](std::size_t i) {
        if (i > first_bad.load()) return;
        results[i] = check_one(i);
        if (!results[i]) return;
        std::size_t cur = first_bad.load();
        while (i < cur && !first_bad.compare_exchange_weak(cur, i)) {
        }
      },
      exec);
  for (auto& r : results)
    if (r) return r;
  return std::nullopt;
}

}  // namespace detail

/// Condition (1), additivity, and the Leibniz rule
///   theta^(n)(xy) = sum_{i+j=n} theta^(i)(x) theta^(j)(y),  n <= prec,
/// on every pair of basis monomials plus `samples` random pairs.
template <class R>
AxiomReport check_hom(const IdMap<R>& theta, std::size_t samples, std::size_t prec, std::uint64_t seed,
                      Exec exec = Exec::parallel) {
  if (prec > theta.max_order)
    throw Error(ErrorCode::PrecisionExceeded, "requested precision exceeds " + theta.name + "'s supported order");
  std::vector<std::pair<R, R>> pairs;
  for (std::size_t i = 0; i < theta.fixed_samples.size(); ++i)
    for (std::size_t j = i; j < theta.fixed_samples.size(); ++j)
      pairs.emplace_back(theta.fixed_samples[i], theta.fixed_samples[j]);
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    R x = theta.sample(rng);
    R y = theta.sample(rng);
    pairs.emplace_back(std::move(x), std::move(y));
  }

  auto check_one = [&](std::size_t idx) -> std::optional<Counterexample> {
    const auto& [x, y] = pairs[idx];
    auto fail = [&](std::string where, const R& lhs, const R& rhs) {
      return Counterexample{idx, {theta.render(x), theta.render(y)}, std::move(where), theta.render(lhs),
                            theta.render(rhs)};
    };
    auto cx = theta.components(x, prec);
    auto cy = theta.components(y, prec);
    if (!theta.equal(cx[0], x)) return fail("identity n=0", cx[0], x);
    auto csum = theta.components(x + y, prec);
    auto cprod = theta.components(x * y, prec);
    for (std::size_t n = 0; n <= prec; ++n) {
      R sum = cx[n] + cy[n];
      if (!theta.equal(csum[n], sum)) return fail("additivity n=" + std::to_string(n), csum[n], sum);
      R conv = cx[0] * cy[n];
      for (std::size_t i = 1; i <= n; ++i) conv = conv + cx[i] * cy[n - i];
      if (!theta.equal(cprod[n], conv)) return fail("leibniz n=" + std::to_string(n), cprod[n], conv);
    }
    return std::nullopt;
  };

  AxiomReport rep;
  rep.law = "homomorphism";
  rep.instance = theta.name;
  rep.samples_tested = pairs.size();
  rep.bound = "T-order " + std::to_string(prec);
  rep.counterexample = detail::first_failure(pairs.size(), check_one, exec);
  return rep;
}

/// Commutativity of the U -> U + T square to bidegree (nu, nt): the
/// coefficient of U^i T^j is theta^(i)(theta^(j)(r)) along one path and
/// binom(i+j, i) theta^(i+j)(r) along the other.
template <class R>
AxiomReport check_iteration(const IdMap<R>& theta, std::size_t samples, std::size_t nu, std::size_t nt,
                            std::uint64_t seed, Exec exec = Exec::parallel) {
  if (nu + nt > theta.max_order)
    throw Error(ErrorCode::PrecisionExceeded, "bidegree exceeds " + theta.name + "'s supported order");
  std::vector<R> elems = theta.fixed_samples;
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < samples; ++k) elems.push_back(theta.sample(rng));

  auto binom = [](std::size_t n, std::size_t k) {
    long long r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<long long>(n - k + i) / static_cast<long long>(i);
    return r;
  };

  auto check_one = [&](std::size_t idx) -> std::optional<Counterexample> {
    const R& r = elems[idx];
    auto comps = theta.components(r, nu + nt);
    BiTruncSeries<R> via_theta(nu, nt), via_shift(nu, nt);
    for (std::size_t j = 0; j <= nt; ++j) {
      auto inner = theta.components(comps[j], nu);
      for (std::size_t i = 0; i <= nu; ++i) {
        via_theta(i, j) = inner[i];
        via_shift(i, j) = comps[i + j] * binom(i + j, i);
      }
    }
    for (std::size_t i = 0; i <= nu; ++i)
      for (std::size_t j = 0; j <= nt; ++j)
        if (!theta.equal(via_theta(i, j), via_shift(i, j)))
          return Counterexample{idx,
                                {theta.render(r)},
                                "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")",
                                theta.render(via_theta(i, j)),
                                theta.render(via_shift(i, j))};
    return std::nullopt;
  };

  AxiomReport rep;
  rep.law = "iteration";
  rep.instance = theta.name;
  rep.samples_tested = elems.size();
  rep.bound = "bidegree (" + std::to_string(nu) + "," + std::to_string(nt) + ")";
  rep.counterexample = detail::first_failure(elems.size(), check_one, exec);
  return rep;
}

/// x is a constant iff theta^(n)(x) = 0 for 1 <= n <= prec.
template <class R>
bool constants_check(const IdMap<R>& theta, const R& x, std::size_t prec) {
  auto c = theta.components(x, prec);
  for (std::size_t n = 1; n <= prec; ++n)
    if (!theta.is_zero(c[n])) return false;
  return true;
}

}  // namespace idforge
