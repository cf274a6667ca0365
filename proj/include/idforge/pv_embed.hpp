#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "idforge/error.hpp"
#include "idforge/id_core.hpp"
#include "idforge/module_m.hpp"
#include "idforge/sampling.hpp"
#include "idforge/selem.hpp"
#include "idforge/series.hpp"
#include "idforge/theta_s.hpp"

namespace idforge {

// A rational point (a, b) of s^3 - s = t^2 with 3a^2 - 1 != 0, i.e. a
// maximal ideal (s - a, t - b) of S with residue field k.
template <class F>
struct EmbeddingPoint {
  std::string name;
  F a;
  F b;
};

template <class K>
EmbeddingPoint<typename K::scalar_type> make_point(std::string name, const typename K::scalar_type& a,
                                                   const typename K::scalar_type& b, const K& field) {
  if (!(a * a * a - a == b * b))
    throw Error(ErrorCode::NotOnCurve, "(" + a.to_string() + ", " + b.to_string() + ") is not on s^3 - s = t^2");
  if ((a * a * 3LL - field.one()).is_zero())
    throw Error(ErrorCode::DenominatorVanishes, "3s^2 - 1 vanishes at the point");
  return {std::move(name), a, b};
}

/// (1, 0), the ideal (s - 1, t).
template <class K>
EmbeddingPoint<typename K::scalar_type> point_plus(const K& field) {
  return make_point("plus", field.one(), field.zero(), field);
}
/// (-1, 0), the ideal (s + 1, t).
template <class K>
EmbeddingPoint<typename K::scalar_type> point_minus(const K& field) {
  return make_point("minus", field.from_int(-1), field.zero(), field);
}

// The ID-embedding S -> k[[t]], x -> sum_n residue(theta^(n)(x)) t^n.
// sigma is the image of s and tau the image of t (tau = b + t; at the two
// preset points b = 0 and tau = t).
template <class F>
struct Embedding {
  EmbeddingPoint<F> point;
  TruncSeries<F> sigma;
  TruncSeries<F> tau;
  TruncSeries<F> d_inv;                  // (3 sigma^2 - 1)^-1
  std::optional<TruncSeries<F>> s_inv;   // sigma^-1 when sigma(0) != 0
  F one;

  std::size_t prec() const { return sigma.prec(); }
};

namespace detail {

template <class K>
Embedding<typename K::scalar_type> finish_embedding(EmbeddingPoint<typename K::scalar_type> point,
                                                    TruncSeries<typename K::scalar_type> sigma, const K& field) {
  using F = typename K::scalar_type;
  const std::size_t n = sigma.prec();
  TruncSeries<F> tau = TruncSeries<F>::constant(point.b, n);
  if (n >= 1) tau[1] = field.one();
  TruncSeries<F> d = sigma * sigma * 3LL - TruncSeries<F>::constant(field.one(), n);
  Embedding<F> e{std::move(point), std::move(sigma), std::move(tau), invert(d), std::nullopt, field.one()};
  if (!e.sigma[0].is_zero()) e.s_inv = invert(e.sigma);
  return e;
}

}  // namespace detail

/// sigma from the residues of the theta^(n)(s) table, checked against the
/// Newton lift of X^3 - X - (b + t)^2 from the seed a.
template <class K>
Embedding<typename K::scalar_type> build_embedding(const EmbeddingPoint<typename K::scalar_type>& point,
                                                   const ThetaSTable<typename K::scalar_type>& table,
                                                   std::size_t prec, const K& field) {
  using F = typename K::scalar_type;
  if (table.depth() < prec)
    throw Error(ErrorCode::PrecisionExceeded, "theta table depth " + std::to_string(table.depth()) +
                                                  " is below the requested precision " + std::to_string(prec));
  std::vector<F> c(prec + 1);
  for (std::size_t n = 0; n <= prec; ++n) c[n] = residue_at_point(table.a[n], point.a, point.b, field);
  TruncSeries<F> sigma(std::move(c));

  TruncSeries<F> tau2 = TruncSeries<F>::constant(point.b * point.b, prec);
  if (prec >= 1) tau2[1] = point.b * 2LL;
  if (prec >= 2) tau2[2] = field.one();
  std::vector<TruncSeries<F>> p{-tau2, TruncSeries<F>::constant(field.from_int(-1), prec),
                                TruncSeries<F>::constant(field.zero(), prec),
                                TruncSeries<F>::constant(field.one(), prec)};
  TruncSeries<F> newton = newton_solve(p, point.a, prec, field);
  for (std::size_t n = 0; n <= prec; ++n)
    if (!(newton[n] == sigma[n]))
      throw Error(ErrorCode::CrossCheckMismatch, "residue series and Newton lift differ at t^" + std::to_string(n) +
                                                     ": " + sigma[n].to_string() + " vs " + newton[n].to_string());
  return detail::finish_embedding(point, std::move(sigma), field);
}

template <class K>
Embedding<typename K::scalar_type> build_embedding(const EmbeddingPoint<typename K::scalar_type>& point,
                                                   std::size_t prec, const K& field) {
  return build_embedding(point, solve_theta_s(prec, field), prec, field);
}

template <class F>
TruncSeries<F> eval_poly_at_series(const Poly<F>& p, const TruncSeries<F>& x) {
  TruncSeries<F> r(x.prec());
  for (std::size_t i = p.size(); i-- > 0;) {
    r = r * x;
    r[0] += p.coeffs()[i];
  }
  return r;
}

/// Image of x in k[[t]] to precision `prec` (at most the embedding's).
template <class F>
TruncSeries<F> embed_elem(const Embedding<F>& e, const SElem<F>& x, std::size_t prec) {
  if (prec > e.prec())
    throw Error(ErrorCode::PrecisionExceeded, "embedding is known to precision " + std::to_string(e.prec()));
  const TruncSeries<F> sigma = e.sigma.truncated(prec), tau = e.tau.truncated(prec);
  TruncSeries<F> r = eval_poly_at_series(x.coord(2), tau);
  r = r * sigma + eval_poly_at_series(x.coord(1), tau);
  r = r * sigma + eval_poly_at_series(x.coord(0), tau);
  if (x.dpow() > 0) r = r * pow(e.d_inv.truncated(prec), x.dpow(), e.one);
  return r;
}
template <class F>
TruncSeries<F> embed_elem(const Embedding<F>& e, const SElem<F>& x) {
  return embed_elem(e, x, e.prec());
}

template <class F>
TruncSeries<F> embed_elem(const Embedding<F>& e, const FracSElem<F>& x, std::size_t prec) {
  TruncSeries<F> r = embed_elem(e, x.num(), prec);
  if (x.spow() == 0) return r;
  if (!e.s_inv)
    throw Error(ErrorCode::NonUnitDenominator, "s maps to a non-unit at point " + e.point.name);
  return r * pow(e.s_inv->truncated(prec), x.spow(), e.one);
}
template <class F>
TruncSeries<F> embed_elem(const Embedding<F>& e, const FracSElem<F>& x) {
  return embed_elem(e, x, e.prec());
}

/// embed(theta^(n)(x)) = theta_t^(n)(embed(x)) for n <= order on the fixed
/// elements s^i t^j (i < 3, j < 3) and `samples` random ones.
template <class K>
AxiomReport check_embed_commutes(const Embedding<typename K::scalar_type>& e, const ThetaS<K>& theta,
                                 std::size_t samples, std::size_t order, std::uint64_t seed, const K& field) {
  using F = typename K::scalar_type;
  using S = SElem<F>;
  if (order >= e.prec())
    throw Error(ErrorCode::PrecisionExceeded, "T-order must stay below the embedding precision");
  std::vector<S> elems;
  S si = S::one(field);
  for (unsigned i = 0; i < 3; ++i, si = si * S::s(field)) {
    S x = si;
    for (unsigned j = 0; j < 3; ++j, x = x * S::t(field)) elems.push_back(x);
  }
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < samples; ++k) elems.push_back(random_selem(rng, field));

  AxiomReport rep;
  rep.law = "embed-commutes";
  rep.instance = "S -> k[[t]] at " + e.point.name;
  rep.samples_tested = elems.size();
  rep.bound = "n <= " + std::to_string(order) + ", t-precision " + std::to_string(e.prec() - order);
  for (std::size_t idx = 0; idx < elems.size() && !rep.counterexample; ++idx) {
    const S& x = elems[idx];
    auto shifted = shift_series(embed_elem(e, x), order, field);
    auto comps = theta.apply(x, order);
    for (std::size_t n = 0; n <= order; ++n) {
      auto lhs = embed_elem(e, comps[n], e.prec() - n);
      if (!agree(lhs, shifted[n])) {
        rep.counterexample = Counterexample{idx, {x.to_string()}, "n=" + std::to_string(n), "embed(theta^(n)(x))",
                                            "theta_t^(n)(embed(x))"};
        break;
      }
    }
  }
  return rep;
}

/// b + ((3s^2+1)/(3s^2-1)) (t/s), the coefficient of the rank-one equation
/// d(y) = g y satisfied by f1 = y e.
template <class K>
FracSElem<typename K::scalar_type> ode_coefficient(const SElem<typename K::scalar_type>& b, const K& field) {
  using F = typename K::scalar_type;
  using S = SElem<F>;
  return FracSElem<F>(b) + FracSElem<F>(f2_coefficient(field) * S::t(field), 1);
}

/// Series solution of y' = g y with y(0) = 1, to precision `prec`.
template <class K>
TruncSeries<typename K::scalar_type> solve_y(const Embedding<typename K::scalar_type>& e,
                                             const SElem<typename K::scalar_type>& b, std::size_t prec,
                                             const K& field) {
  using F = typename K::scalar_type;
  if (field.characteristic() != 0)
    throw Error(ErrorCode::PositiveCharacteristic, "the series solution of y' = g y needs characteristic 0");
  if (prec == 0) return TruncSeries<F>::constant(field.one(), 0);
  TruncSeries<F> g = embed_elem(e, ode_coefficient(b, field), prec - 1);
  std::vector<F> y(prec + 1);
  y[0] = field.one();
  for (std::size_t n = 0; n + 1 <= prec; ++n) {
    F acc = g[0] * y[n];
    for (std::size_t i = 1; i <= n; ++i) acc += g[i] * y[n - i];
    y[n + 1] = acc * field.from_int(static_cast<long long>(n + 1)).inv();
  }
  return TruncSeries<F>(std::move(y));
}

/// y' - g y, known to precision prec(y) - 1.
template <class K>
TruncSeries<typename K::scalar_type> ode_residual(const Embedding<typename K::scalar_type>& e,
                                                  const SElem<typename K::scalar_type>& b,
                                                  const TruncSeries<typename K::scalar_type>& y, const K& field) {
  const std::size_t p = y.prec() - 1;
  return derivative(y) - embed_elem(e, ode_coefficient(b, field), p) * y.truncated(p);
}

template <class F>
struct PVGenerators {
  TruncSeries<F> y;
  TruncSeries<F> yt_over_s;
  TruncSeries<F> s_over_y;
  TruncSeries<F> t_over_y;
};

/// The series images of y, y t/s, s/y, t/y generating the Picard-Vessiot
/// ring over S.
template <class K>
PVGenerators<typename K::scalar_type> pv_generators(const Embedding<typename K::scalar_type>& e,
                                                    const SElem<typename K::scalar_type>& b, std::size_t prec,
                                                    const K& field) {
  auto y = solve_y(e, b, prec, field);
  auto y_inv = invert(y);
  auto sigma = e.sigma.truncated(prec), tau = e.tau.truncated(prec);
  if (!e.s_inv) throw Error(ErrorCode::NonUnitDenominator, "s maps to a non-unit at point " + e.point.name);
  return {y, y * tau * e.s_inv->truncated(prec), sigma * y_inv, tau * y_inv};
}

/// Checks that e = y^-1 f1 is a constant basis of k[[t]] (x) M.
///
/// On the basis f1 (f2 = (t/s) f1), theta_M(f1) = c(T) f1 is computed two
/// ways: from the module, c_n = image of d_M^n(f1)/n! in f1-coordinates;
/// and from the solution, c = theta_t(y)/y. The report fails on the first of
///   (i)   c_1 from the solution differs from the image of d_M(f1),
///   (ii)  theta_M(y^-1 f1) differs from y^-1 f1 at some T^n,
///   (iii) the two routes to c_n differ for some n <= min(6, t_order).
/// All comparisons hold to t-precision `prec`. `y_override` replaces the
/// solution used for e in (ii); mutation tests use it.
template <class K>
AxiomReport constant_basis_check(const Embedding<typename K::scalar_type>& e, const SElem<typename K::scalar_type>& b,
                                 std::size_t prec, std::size_t t_order, const K& field,
                                 const std::optional<TruncSeries<typename K::scalar_type>>& y_override = std::nullopt) {
  using F = typename K::scalar_type;
  using S = SElem<F>;
  const std::size_t full = prec + t_order;
  AxiomReport rep;
  rep.law = "constant-basis";
  rep.instance = "k[[t]] (x) M at " + e.point.name + ", b = " + b.to_string();
  rep.samples_tested = 1;
  rep.bound = "t-precision " + std::to_string(prec) + ", T-order " + std::to_string(t_order);
  auto render = [](const TruncSeries<F>& f) {
    std::string out;
    for (std::size_t i = 0; i < f.prec() + 1 && i < 6; ++i) out += (i ? ", " : "") + f[i].to_string();
    return "[" + out + (f.prec() >= 6 ? ", ..." : "") + "]";
  };
  auto fail = [&](std::string where, const TruncSeries<F>& lhs, const TruncSeries<F>& rhs) {
    rep.counterexample = Counterexample{0, {b.to_string()}, std::move(where), render(lhs), render(rhs)};
    return rep;
  };

  // route via the module
  const S t = S::t(field);
  std::vector<TruncSeries<F>> c_module;
  MElem<F> cur = generator_f1(field);
  for (std::size_t n = 0; n <= t_order; ++n) {
    if (n > 0) cur = apply_derivation(b, cur, field) * field.from_int(static_cast<long long>(n)).inv();
    FracSElem<F> coord = FracSElem<F>(cur.f1) + FracSElem<F>(cur.f2 * t, 1);
    c_module.push_back(embed_elem(e, coord, full - n));
  }

  // route via the solution
  const TruncSeries<F> y = solve_y(e, b, full, field);
  const TruncSeries<F> y_inv = invert(y);
  auto theta_y = shift_series(y, t_order, field);
  std::vector<TruncSeries<F>> c_solution;
  for (std::size_t n = 0; n <= t_order; ++n) c_solution.push_back(theta_y[n] * y_inv.truncated(full - n));

  if (t_order >= 1) {
    auto d_f1 = apply_derivation(b, generator_f1(field), field);
    auto image = embed_elem(e, FracSElem<F>(d_f1.f1) + FracSElem<F>(d_f1.f2 * t, 1), full - 1);
    if (!agree(c_solution[1], image, prec)) return fail("(i) T^1 component", c_solution[1], image);
  }

  const TruncSeries<F> y_test = y_override ? y_override->truncated(full) : y;
  const TruncSeries<F> e_coord = invert(y_test);
  auto theta_e = shift_series(e_coord, t_order, field);
  for (std::size_t n = 0; n <= t_order; ++n) {
    TruncSeries<F> acc = theta_e[0].truncated(full - n) * c_module[n];
    for (std::size_t i = 1; i <= n; ++i) acc += theta_e[i].truncated(full - n) * c_module[n - i];
    TruncSeries<F> expect = n == 0 ? e_coord : TruncSeries<F>(full - n);
    if (!agree(acc, expect, prec)) return fail("(ii) constancy at T^" + std::to_string(n), acc, expect);
  }

  for (std::size_t n = 0; n <= std::min<std::size_t>(6, t_order); ++n)
    if (!agree(c_solution[n], c_module[n], prec))
      return fail("(iii) component n=" + std::to_string(n), c_solution[n], c_module[n]);
  return rep;
}

}  // namespace idforge
