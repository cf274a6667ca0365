#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "idforge/error.hpp"
#include "idforge/matrix.hpp"
#include "idforge/parallel.hpp"
#include "idforge/pv_embed.hpp"

namespace idforge {

struct SearchBounds {
  unsigned n_max = 6;
  unsigned deg = 8;    // t-degree bound on the numerator coordinates
  unsigned dpow = 2;   // bound on the power of 3s^2 - 1 in the denominator
  std::size_t prec = 64;

  /// Matching to this precision makes the linear system overdetermined
  /// enough that a solution is unique.
  std::size_t margin() const { return 3 * (deg + 2 * static_cast<std::size_t>(dpow)) + 8; }

  void validate() const {
    if (prec < margin())
      throw Error(ErrorCode::InsufficientPrecision, "precision " + std::to_string(prec) + " is below the margin " +
                                                        std::to_string(margin()) + " for these bounds");
  }
};

template <class F>
struct GaloisVerdict {
  bool is_mu = false;          // Mu(n) when true, NoRelationUpToBounds otherwise
  unsigned n = 0;
  std::optional<SElem<F>> witness;
  SearchBounds bounds;
};

/// Looks for w = (c0 + c1 s + c2 s^2)/d^j in S, deg_t(c_i) <= deg, j <= dpow,
/// whose image is f. Each j is tried in increasing order by solving the
/// linear system image(numerator) = f * image(d)^j to precision `prec`; a
/// solution is re-embedded and compared before it is returned.
template <class K>
std::optional<SElem<typename K::scalar_type>> series_in_S(const TruncSeries<typename K::scalar_type>& f,
                                                          const Embedding<typename K::scalar_type>& e,
                                                          unsigned deg, unsigned dpow, std::size_t prec,
                                                          const K& field, Exec exec = Exec::parallel) {
  using F = typename K::scalar_type;
  SearchBounds b{1, deg, dpow, prec};
  b.validate();
  if (f.prec() < prec || e.prec() < prec)
    throw Error(ErrorCode::InsufficientPrecision, "input series are known only to precision " +
                                                      std::to_string(std::min(f.prec(), e.prec())));
  const TruncSeries<F> sigma = e.sigma.truncated(prec), tau = e.tau.truncated(prec);
  const TruncSeries<F> target = f.truncated(prec);

  // columns: tau^j sigma^i, i < 3, j <= deg
  const std::size_t unknowns = 3 * (deg + 1);
  std::vector<TruncSeries<F>> columns(unknowns);
  TruncSeries<F> sigma_pow = TruncSeries<F>::constant(field.one(), prec);
  for (std::size_t i = 0; i < 3; ++i) {
    TruncSeries<F> col = sigma_pow;
    for (std::size_t j = 0; j <= deg; ++j) {
      columns[i * (deg + 1) + j] = col;
      col = col * tau;
    }
    sigma_pow = sigma_pow * sigma;
  }
  const TruncSeries<F> d = sigma * sigma * 3LL - TruncSeries<F>::constant(field.one(), prec);

  TruncSeries<F> rhs = target;
  for (unsigned j = 0; j <= dpow; ++j) {
    if (j > 0) rhs = rhs * d;
    ExactMatrix<F> a(prec + 1, unknowns);
    std::vector<F> v(prec + 1);
    for (std::size_t r = 0; r <= prec; ++r) {
      for (std::size_t c = 0; c < unknowns; ++c) a(r, c) = columns[c][r];
      v[r] = rhs[r];
    }
    auto x = solve_linear(std::move(a), std::move(v), exec);
    if (!x) continue;
    typename SElem<F>::Num num;
    for (std::size_t i = 0; i < 3; ++i) {
      std::vector<F> coeffs((*x).begin() + static_cast<std::ptrdiff_t>(i * (deg + 1)),
                            (*x).begin() + static_cast<std::ptrdiff_t>((i + 1) * (deg + 1)));
      num[i] = Poly<F>(std::move(coeffs));
    }
    SElem<F> w(std::move(num), j);
    if (agree(embed_elem(e, w, prec), target)) return w;
  }
  return std::nullopt;
}

/// Searches n = 1..n_max for the least n with y^n in S. The searches for
/// different n are independent and run concurrently under Exec::parallel;
/// the verdict is always the least hit.
template <class K>
GaloisVerdict<typename K::scalar_type> classify_series(const TruncSeries<typename K::scalar_type>& y,
                                                       const Embedding<typename K::scalar_type>& e,
                                                       const SearchBounds& bounds, const K& field,
                                                       Exec exec = Exec::parallel) {
  using F = typename K::scalar_type;
  bounds.validate();
  std::vector<TruncSeries<F>> powers;
  TruncSeries<F> p = y.truncated(bounds.prec);
  for (unsigned n = 1; n <= bounds.n_max; ++n) {
    powers.push_back(p);
    p = p * y.truncated(bounds.prec);
  }
  GaloisVerdict<F> verdict;
  verdict.bounds = bounds;
  if (exec == Exec::serial) {
    for (unsigned n = 1; n <= bounds.n_max; ++n) {
      auto w = series_in_S(powers[n - 1], e, bounds.deg, bounds.dpow, bounds.prec, field, Exec::serial);
      if (w) {
        verdict.is_mu = true;
        verdict.n = n;
        verdict.witness = std::move(w);
        return verdict;
      }
    }
    return verdict;
  }
  std::vector<std::optional<SElem<F>>> hits(bounds.n_max);
  for_each_index(bounds.n_max, [&](std::size_t i) {
    hits[i] = series_in_S(powers[i], e, bounds.deg, bounds.dpow, bounds.prec, field, Exec::parallel);
  });
  for (unsigned n = 1; n <= bounds.n_max; ++n) {
    if (hits[n - 1]) {
      verdict.is_mu = true;
      verdict.n = n;
      verdict.witness = std::move(hits[n - 1]);
      break;
    }
  }
  return verdict;
}

/// mu_n when n is the least positive integer with y^n in S (found within the
/// bounds), otherwise "no relation up to bounds", which is what a
/// transcendental y (Galois group G_m) produces.
template <class K>
GaloisVerdict<typename K::scalar_type> classify(const SElem<typename K::scalar_type>& b,
                                                const Embedding<typename K::scalar_type>& e,
                                                const SearchBounds& bounds, const K& field,
                                                Exec exec = Exec::parallel) {
  bounds.validate();
  return classify_series(solve_y(e, b, bounds.prec, field), e, bounds, field, exec);
}

}  // namespace idforge
