#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "idforge/error.hpp"
#include "idforge/field.hpp"
#include "idforge/id_core.hpp"
#include "idforge/selem.hpp"
#include "idforge/series.hpp"
#include "idforge/theta_s.hpp"

namespace idforge {

// theta_M(f1) = u f1 for the rank-one module with b = -3st/(3s^2-1), where
// u = theta(sqrt s)/sqrt s. Coefficients live in S[1/s].
template <class F>
using USeries = TruncSeries<FracSElem<F>>;

/// u = sum_k binom(1/2, k) ((theta(s) - s)/s)^k, truncated at T-order `prec`.
/// (theta(s) - s)/s has T-order >= 1, so only k <= prec contribute.
USeries<Rational> compute_u(std::size_t prec, const ThetaSTable<Rational>& table);
USeries<Rational> compute_u(std::size_t prec);

/// Passes iff every rational in every coefficient of u has a power-of-2
/// denominator; the counterexample names the coefficient.
AxiomReport certify_2_power(const USeries<Rational>& u);

SElem<Fp> reduce_selem(const SElem<Rational>& x, const PrimeField& field);
FracSElem<Fp> reduce_frac(const FracSElem<Rational>& x, const PrimeField& field);
ThetaSTable<Fp> reduce_table(const ThetaSTable<Rational>& table, const PrimeField& field);

// The module over S_p = F_p (x) S_Z obtained by reducing theta_M mod p. On
// the basis f1 (f2 = (t/s) f1): theta_M(f1) = u f1, theta_M(f2) = w f1 with
// w = theta(t/s) u.
struct ModPModule {
  PrimeField field;
  std::size_t prec;
  ThetaS<PrimeField> theta;
  USeries<Fp> u;
  USeries<Fp> w;

  /// Coordinate c_n of theta_M^(n)(c f1) = c_n f1, n <= order.
  std::vector<FracSElem<Fp>> apply(const FracSElem<Fp>& c, std::size_t order) const;
};

/// Throws Error(PEqualsTwo) for p = 2 and Error(NotPrime) for composite p.
ModPModule reduce_module_mod_p(std::uint64_t p, std::size_t prec, const ThetaSTable<Rational>& table,
                               const USeries<Rational>& u);
ModPModule reduce_module_mod_p(std::uint64_t p, std::size_t prec);

/// theta_M^(i)(theta_M^(j)(f)) = binom(i+j, i) theta_M^(i+j)(f) for f = f1, f2
/// and i + j <= prec.
AxiomReport check_iteration_mod_p(const ModPModule& mp, Exec exec = Exec::parallel);

struct StabilityEntry {
  std::size_t n = 0;
  bool f1_in_module = false;
  bool f2_in_module = false;
  FracSElem<Fp> f1_image;  // ideal image of theta_M^(n)(f1), s-powers cancelled
  FracSElem<Fp> f2_image;
};

struct StabilityReport {
  AxiomReport report;
  std::vector<StabilityEntry> entries;
};

/// For each n <= prec: the ideal images s u_n and s w_n must lose their
/// s-denominators under divide_by_s and then vanish at (s, t) = (0, 0),
/// i.e. lie in <s, t> over F_p.
StabilityReport check_stability(const ModPModule& mp);

/// theta_M^(n)(x m) = sum_{i+j=n} theta^(i)(x) theta_M^(j)(m), n <= order.
AxiomReport check_leibniz_mod_p(const ModPModule& mp, std::size_t samples, std::size_t order, std::uint64_t seed);

/// (theta_M^(1))^p (f1) = p! theta_M^(p)(f1) = 0. Needs prec >= 1.
AxiomReport check_nilpotence_mod_p(const ModPModule& mp);

}  // namespace idforge
