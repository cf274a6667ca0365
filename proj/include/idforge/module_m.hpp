#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "idforge/error.hpp"
#include "idforge/id_core.hpp"
#include "idforge/sampling.hpp"
#include "idforge/selem.hpp"
#include "idforge/theta_s.hpp"

namespace idforge {

// alpha f1 + beta f2 in M = <f1, f2> / (t f1 - s f2, (s^2-1) f1 - t f2).
// Coordinates are redundant; equality is decided through the isomorphism
// M -> <s, t>_S, f1 -> s, f2 -> t.
template <class F>
struct MElem {
  SElem<F> f1;
  SElem<F> f2;

  friend MElem operator+(const MElem& a, const MElem& b) { return {a.f1 + b.f1, a.f2 + b.f2}; }
  friend MElem operator-(const MElem& a, const MElem& b) { return {a.f1 - b.f1, a.f2 - b.f2}; }
  friend MElem operator*(const SElem<F>& x, const MElem& m) { return {x * m.f1, x * m.f2}; }
  friend MElem operator*(const MElem& m, const F& c) { return {m.f1 * c, m.f2 * c}; }
};

template <class K>
MElem<typename K::scalar_type> generator_f1(const K& field) {
  using S = SElem<typename K::scalar_type>;
  return {S::one(field), S()};
}
template <class K>
MElem<typename K::scalar_type> generator_f2(const K& field) {
  using S = SElem<typename K::scalar_type>;
  return {S(), S::one(field)};
}

template <class K>
SElem<typename K::scalar_type> ideal_image(const MElem<typename K::scalar_type>& m, const K& field) {
  using S = SElem<typename K::scalar_type>;
  return m.f1 * S::s(field) + m.f2 * S::t(field);
}

template <class K>
bool melem_equal(const MElem<typename K::scalar_type>& a, const MElem<typename K::scalar_type>& b,
                 const K& field) {
  return ideal_image(a, field) == ideal_image(b, field);
}

/// (3s^2 + 1) / (3s^2 - 1)
template <class K>
SElem<typename K::scalar_type> f2_coefficient(const K& field) {
  using S = SElem<typename K::scalar_type>;
  return (S::s(field) * S::s(field) * 3LL + S::one(field)).times_dinv();
}

/// d_M(alpha f1 + beta f2) with d_M(f1) = b f1 + (3s^2+1)/(3s^2-1) f2 and
/// d_M(f2) = s f1 + b f2, extended by the Leibniz rule over theta^(1) on S.
template <class K>
MElem<typename K::scalar_type> apply_derivation(const SElem<typename K::scalar_type>& b,
                                                const MElem<typename K::scalar_type>& m, const K& field) {
  using S = SElem<typename K::scalar_type>;
  const S s = S::s(field);
  return {derivation(m.f1, field) + m.f1 * b + m.f2 * s,
          m.f1 * f2_coefficient(field) + derivation(m.f2, field) + m.f2 * b};
}

/// d_M^n / n!, characteristic 0 only.
template <class K>
MElem<typename K::scalar_type> iterate_divided(const SElem<typename K::scalar_type>& b,
                                               const MElem<typename K::scalar_type>& m, unsigned n,
                                               const K& field) {
  if (field.characteristic() != 0)
    throw Error(ErrorCode::PositiveCharacteristic, "divided powers of a derivation need characteristic 0");
  MElem<typename K::scalar_type> r = m;
  auto fact = field.one();
  for (unsigned i = 1; i <= n; ++i) {
    r = apply_derivation(b, r, field);
    fact *= field.from_int(i);
  }
  return n == 0 ? r : r * fact.inv();
}

/// d_M sends both relations t f1 - s f2 and (s^2-1) f1 - t f2 to 0 in M.
template <class K>
AxiomReport check_relations(const SElem<typename K::scalar_type>& b, const K& field) {
  using S = SElem<typename K::scalar_type>;
  const S s = S::s(field), t = S::t(field), one = S::one(field);
  AxiomReport rep;
  rep.law = "well-defined";
  rep.instance = "d_M, b = " + b.to_string();
  rep.samples_tested = 2;
  rep.bound = "exact";
  const MElem<typename K::scalar_type> rels[2] = {{t, -s}, {s * s - one, -t}};
  const char* names[2] = {"t*f1 - s*f2", "(s^2-1)*f1 - t*f2"};
  for (std::size_t i = 0; i < 2; ++i) {
    auto img = apply_derivation(b, rels[i], field);
    if (!melem_equal(img, MElem<typename K::scalar_type>{}, field)) {
      rep.counterexample =
          Counterexample{i, {names[i]}, "d_M(relation)", ideal_image(img, field).to_string(), "0"};
      break;
    }
  }
  return rep;
}

/// d_M(x m) = D(x) m + x d_M(m) on `samples` random (x, m), with b drawn at
/// random too unless one is given.
template <class K>
AxiomReport check_module_leibniz(std::size_t samples, std::uint64_t seed, const K& field,
                                 const std::optional<SElem<typename K::scalar_type>>& fixed_b = std::nullopt) {
  using F = typename K::scalar_type;
  std::mt19937_64 rng(seed);
  AxiomReport rep;
  rep.law = "module-leibniz";
  rep.instance = fixed_b ? "d_M, b = " + fixed_b->to_string() : "d_M, random b";
  rep.samples_tested = samples;
  rep.bound = "exact";
  for (std::size_t k = 0; k < samples; ++k) {
    SElem<F> b = fixed_b ? *fixed_b : random_selem(rng, field);
    SElem<F> x = random_selem(rng, field);
    MElem<F> m{random_selem(rng, field), random_selem(rng, field)};
    auto lhs = apply_derivation(b, x * m, field);
    auto rhs = derivation(x, field) * m + x * apply_derivation(b, m, field);
    if (!melem_equal(lhs, rhs, field)) {
      rep.counterexample = Counterexample{k,
                                          {b.to_string(), x.to_string(), ideal_image(m, field).to_string()},
                                          "d_M(x m)",
                                          ideal_image(lhs, field).to_string(),
                                          ideal_image(rhs, field).to_string()};
      break;
    }
  }
  return rep;
}

struct CertificateCheck {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool holds = false;
};

struct LocalFreenessCertificate {
  std::vector<CertificateCheck> checks;
  unsigned n1 = 1;
  unsigned n2 = 1;

  bool holds() const {
    for (const auto& c : checks)
      if (!c.holds) return false;
    return !checks.empty();
  }
};

/// The cover x1 = s, x2 = s^2 - 1 with s*x1 - x2 = 1, and the containments
/// x1 M in <f1>, x2 M in <f2> (exponents n1 = n2 = 1).
template <class K>
LocalFreenessCertificate local_freeness_certificates(const K& field) {
  using S = SElem<typename K::scalar_type>;
  const S s = S::s(field), t = S::t(field), one = S::one(field);
  const S x1 = s, x2 = s * s - one;
  const auto f1 = generator_f1(field), f2 = generator_f2(field);

  LocalFreenessCertificate cert;
  S unit = s * x1 - one * x2;
  cert.checks.push_back({"s*s - 1*(s^2-1) = 1", unit.to_string(), one.to_string(), unit == one});
  auto a = x1 * f2, b = t * f1;
  cert.checks.push_back({"s*f2 = t*f1", ideal_image(a, field).to_string(), ideal_image(b, field).to_string(),
                         melem_equal(a, b, field)});
  auto c = x2 * f1, e = t * f2;
  cert.checks.push_back({"(s^2-1)*f1 = t*f2", ideal_image(c, field).to_string(),
                         ideal_image(e, field).to_string(), melem_equal(c, e, field)});
  return cert;
}

}  // namespace idforge
