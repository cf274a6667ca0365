#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "idforge/poly.hpp"
#include "idforge/selem.hpp"
#include "idforge/series.hpp"

namespace idforge {

// Small random inputs for the law checkers. All draws go through
// std::mt19937_64 so a seed fixes the whole sample set.

inline long long draw_int(std::mt19937_64& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

/// n/m with n in [-4, 4] and m in {1, 2, 3}.
template <class K>
typename K::scalar_type random_scalar(std::mt19937_64& rng, const K& field) {
  auto n = field.from_int(draw_int(rng, -4, 4));
  auto m = field.from_int(draw_int(rng, 1, 3));
  if (m.is_zero()) return n;
  return n * m.inv();
}

template <class K>
Poly<typename K::scalar_type> random_poly(std::mt19937_64& rng, std::size_t max_degree, const K& field) {
  std::size_t deg = static_cast<std::size_t>(draw_int(rng, 0, static_cast<long long>(max_degree)));
  std::vector<typename K::scalar_type> c(deg + 1);
  for (auto& x : c) x = random_scalar(rng, field);
  return Poly<typename K::scalar_type>(std::move(c));
}

template <class K>
TruncSeries<typename K::scalar_type> random_series(std::mt19937_64& rng, std::size_t prec, const K& field) {
  std::vector<typename K::scalar_type> c(prec + 1);
  for (auto& x : c) x = random_scalar(rng, field);
  return TruncSeries<typename K::scalar_type>(std::move(c));
}

/// Numerator coordinates of t-degree <= 2, denominator exponent 0 or 1.
template <class K>
SElem<typename K::scalar_type> random_selem(std::mt19937_64& rng, const K& field) {
  typename SElem<typename K::scalar_type>::Num num{random_poly(rng, 2, field), random_poly(rng, 2, field),
                                                   random_poly(rng, 2, field)};
  return SElem<typename K::scalar_type>(std::move(num), static_cast<unsigned>(draw_int(rng, 0, 1)));
}

}  // namespace idforge
