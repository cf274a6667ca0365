#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "idforge/id_core.hpp"
#include "idforge/poly.hpp"
#include "idforge/rational.hpp"
#include "idforge/selem.hpp"
#include "idforge/series.hpp"

namespace idforge {

// The bundled derivations. `order` is the largest component any checker
// will request; for a bidegree (n, n) iteration check that is 2n.

/// theta_t on Q[t]: p(t) -> p(t + T).
IdMap<Poly<Rational>> make_ct_instance(std::size_t order);
/// theta_t on Q[[t]] truncated at t-precision `sample_prec`.
IdMap<TruncSeries<Rational>> make_cpowert_instance(std::size_t order, std::size_t sample_prec = 24);
/// theta(x) = x on Q[t].
IdMap<Poly<Rational>> make_trivial_instance(std::size_t order);
/// The unique extension of theta_t to S.
IdMap<SElem<Rational>> make_s_instance(std::size_t order);

// Mutants, each wrong in one component.
IdMap<Poly<Rational>> make_ct_mutant_theta1(std::size_t order);    // theta^(1) doubled
IdMap<Poly<Rational>> make_ct_mutant_theta2(std::size_t order);    // theta^(2) doubled
IdMap<SElem<Rational>> make_s_mutant_theta2(std::size_t order);    // theta^(2) doubled
IdMap<Poly<Rational>> make_trivial_mutant(std::size_t order);      // theta^(1)(x) = x

const std::vector<std::string>& instance_names();
const std::vector<std::string>& mutant_names();

struct InstanceReport {
  AxiomReport hom;
  AxiomReport iteration;

  bool passed() const { return hom.passed() && iteration.passed(); }
};

/// check_hom to T-order `prec` and check_iteration at bidegree (prec, prec).
/// Throws Error(InvalidArgument) for an unknown ring name.
InstanceReport check_instance(const std::string& ring, std::size_t samples, std::size_t prec, std::uint64_t seed,
                              Exec exec = Exec::parallel);

}  // namespace idforge
