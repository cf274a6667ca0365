#include "idforge/instances.hpp"

#include <memory>

#include "idforge/field.hpp"
#include "idforge/sampling.hpp"
#include "idforge/theta_s.hpp"

namespace idforge {

namespace {

const RationalField kQ;

template <class R>
IdMap<R> scale_component(IdMap<R> base, std::size_t n, long long factor, std::string name) {
  auto inner = base.components;
  base.components = [inner, n, factor](const R& x, std::size_t order) {
    auto c = inner(x, order);
    if (n <= order) c[n] = c[n] * factor;
    return c;
  };
  base.name = std::move(name);
  return base;
}

IdMap<Poly<Rational>> poly_ring(std::string name, std::size_t order) {
  IdMap<Poly<Rational>> m;
  m.name = std::move(name);
  m.max_order = order;
  m.equal = [](const Poly<Rational>& a, const Poly<Rational>& b) { return a == b; };
  m.is_zero = [](const Poly<Rational>& a) { return a.is_zero(); };
  m.sample = [](std::mt19937_64& rng) { return random_poly(rng, 4, kQ); };
  for (std::size_t k = 0; k <= 4; ++k) m.fixed_samples.push_back(Poly<Rational>::monomial(Rational(1), k));
  m.render = [](const Poly<Rational>& p) { return p.to_string(); };
  return m;
}

}  // namespace

IdMap<Poly<Rational>> make_ct_instance(std::size_t order) {
  auto m = poly_ring("ct", order);
  m.components = [](const Poly<Rational>& x, std::size_t n) { return shift_substitute(x, n, kQ).coeffs(); };
  return m;
}

IdMap<Poly<Rational>> make_trivial_instance(std::size_t order) {
  auto m = poly_ring("trivial", order);
  m.components = [](const Poly<Rational>& x, std::size_t n) {
    std::vector<Poly<Rational>> c(n + 1);
    c[0] = x;
    return c;
  };
  return m;
}

IdMap<TruncSeries<Rational>> make_cpowert_instance(std::size_t order, std::size_t sample_prec) {
  if (sample_prec < order)
    throw Error(ErrorCode::PrecisionExceeded, "cpowert samples need t-precision >= " + std::to_string(order));
  using T = TruncSeries<Rational>;
  IdMap<T> m;
  m.name = "cpowert";
  m.max_order = order;
  m.components = [](const T& x, std::size_t n) { return shift_series(x, n, kQ); };
  m.equal = [](const T& a, const T& b) { return agree(a, b); };
  m.is_zero = [](const T& a) { return a.is_zero(); };
  m.sample = [sample_prec](std::mt19937_64& rng) { return random_series(rng, sample_prec, kQ); };
  for (std::size_t k = 0; k <= 4; ++k) {
    T x(sample_prec);
    x[k] = Rational(1);
    m.fixed_samples.push_back(std::move(x));
  }
  m.render = [](const T& a) {
    std::string r = "[";
    for (std::size_t i = 0; i <= a.prec(); ++i) r += (i ? ", " : "") + a[i].to_string();
    return r + "] + O(t^" + std::to_string(a.prec() + 1) + ")";
  };
  return m;
}

IdMap<SElem<Rational>> make_s_instance(std::size_t order) {
  using S = SElem<Rational>;
  auto theta = std::make_shared<const ThetaS<RationalField>>(order, kQ);
  IdMap<S> m;
  m.name = "s";
  m.max_order = order;
  m.components = [theta](const S& x, std::size_t n) { return theta->apply(x, n).coeffs(); };
  m.equal = [](const S& a, const S& b) { return a == b; };
  m.is_zero = [](const S& a) { return a.is_zero(); };
  m.sample = [](std::mt19937_64& rng) { return random_selem(rng, kQ); };
  const S s = S::s(kQ), t = S::t(kQ);
  S si = S::one(kQ);
  for (unsigned i = 0; i < 3; ++i) {
    S x = si;
    for (unsigned j = 0; i + j <= 4; ++j) {
      m.fixed_samples.push_back(x);
      x = x * t;
    }
    si = si * s;
  }
  m.render = [](const S& a) { return a.to_string(); };
  return m;
}

IdMap<Poly<Rational>> make_ct_mutant_theta1(std::size_t order) {
  return scale_component(make_ct_instance(order), 1, 2, "ct-mutant-theta1");
}
IdMap<Poly<Rational>> make_ct_mutant_theta2(std::size_t order) {
  return scale_component(make_ct_instance(order), 2, 2, "ct-mutant-theta2");
}
IdMap<SElem<Rational>> make_s_mutant_theta2(std::size_t order) {
  return scale_component(make_s_instance(order), 2, 2, "s-mutant-theta2");
}
IdMap<Poly<Rational>> make_trivial_mutant(std::size_t order) {
  auto m = make_trivial_instance(order);
  m.name = "trivial-mutant";
  m.components = [](const Poly<Rational>& x, std::size_t n) {
    std::vector<Poly<Rational>> c(n + 1);
    c[0] = x;
    if (n >= 1) c[1] = x;
    return c;
  };
  return m;
}

const std::vector<std::string>& instance_names() {
  static const std::vector<std::string> names{"ct", "cpowert", "trivial", "s"};
  return names;
}
const std::vector<std::string>& mutant_names() {
  static const std::vector<std::string> names{"ct-mutant-theta1", "ct-mutant-theta2", "s-mutant-theta2",
                                              "trivial-mutant"};
  return names;
}

namespace {

template <class R>
InstanceReport run_checks(const IdMap<R>& m, std::size_t samples, std::size_t prec, std::uint64_t seed, Exec exec) {
  return {check_hom(m, samples, prec, seed, exec), check_iteration(m, samples, prec, prec, seed, exec)};
}

}  // namespace

InstanceReport check_instance(const std::string& ring, std::size_t samples, std::size_t prec, std::uint64_t seed,
                              Exec exec) {
  const std::size_t order = 2 * prec;
  if (ring == "ct") return run_checks(make_ct_instance(order), samples, prec, seed, exec);
  if (ring == "cpowert")
    return run_checks(make_cpowert_instance(order, std::max<std::size_t>(24, 2 * order)), samples, prec, seed, exec);
  if (ring == "trivial") return run_checks(make_trivial_instance(order), samples, prec, seed, exec);
  if (ring == "s") return run_checks(make_s_instance(order), samples, prec, seed, exec);
  if (ring == "ct-mutant-theta1") return run_checks(make_ct_mutant_theta1(order), samples, prec, seed, exec);
  if (ring == "ct-mutant-theta2") return run_checks(make_ct_mutant_theta2(order), samples, prec, seed, exec);
  if (ring == "s-mutant-theta2") return run_checks(make_s_mutant_theta2(order), samples, prec, seed, exec);
  if (ring == "trivial-mutant") return run_checks(make_trivial_mutant(order), samples, prec, seed, exec);
  throw Error(ErrorCode::InvalidArgument, "unknown ring '" + ring + "'");
}

}  // namespace idforge
