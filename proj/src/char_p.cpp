#include "idforge/char_p.hpp"

#include "idforge/sampling.hpp"

namespace idforge {

namespace {

template <class F>
TruncSeries<FracSElem<F>> normalize_all(TruncSeries<FracSElem<F>> x) {
  for (std::size_t i = 0; i <= x.prec(); ++i) x[i] = x[i].normalized();
  return x;
}

ThetaSTable<Rational> truncate_table(const ThetaSTable<Rational>& table, std::size_t prec) {
  if (table.depth() < prec)
    throw Error(ErrorCode::PrecisionExceeded, "theta(s) table has depth " + std::to_string(table.depth()) +
                                                  ", need " + std::to_string(prec));
  ThetaSTable<Rational> r;
  r.a.assign(table.a.begin(), table.a.begin() + static_cast<std::ptrdiff_t>(prec + 1));
  return r;
}

}  // namespace

USeries<Rational> compute_u(std::size_t prec, const ThetaSTable<Rational>& table) {
  const RationalField q;
  const ThetaSTable<Rational> tab = truncate_table(table, prec);
  using FS = FracSElem<Rational>;
  USeries<Rational> v(prec);
  for (std::size_t n = 1; n <= prec; ++n) v[n] = FS(tab.a[n], 1).normalized();

  USeries<Rational> u = USeries<Rational>::constant(FS(SElem<Rational>::one(q)), prec);
  USeries<Rational> power = v;
  for (unsigned k = 1; k <= prec; ++k) {
    u += power.scaled(gen_binomial(Rational(1, 2), k));
    if (k < prec) power = normalize_all(power * v);
  }
  return normalize_all(std::move(u));
}

USeries<Rational> compute_u(std::size_t prec) { return compute_u(prec, solve_theta_s(prec, RationalField{})); }

AxiomReport certify_2_power(const USeries<Rational>& u) {
  AxiomReport rep;
  rep.law = "2-power-denominators";
  rep.instance = "u";
  rep.samples_tested = u.prec() + 1;
  rep.bound = "T-order " + std::to_string(u.prec());
  for (std::size_t n = 0; n <= u.prec() && !rep.counterexample; ++n) {
    const auto& x = u[n].num();
    for (std::size_t i = 0; i < 3 && !rep.counterexample; ++i) {
      const auto& c = x.coord(i).coeffs();
      for (std::size_t j = 0; j < c.size(); ++j) {
        if (denom_is_2_power(c[j])) continue;
        rep.counterexample = Counterexample{n,
                                            {u[n].to_string()},
                                            "u_" + std::to_string(n) + " coordinate s^" + std::to_string(i) +
                                                " t^" + std::to_string(j),
                                            c[j].to_string(),
                                            "power-of-2 denominator"};
        break;
      }
    }
  }
  return rep;
}

SElem<Fp> reduce_selem(const SElem<Rational>& x, const PrimeField& field) {
  return x.map([&](const Rational& q) { return field.from_rational(q); });
}

FracSElem<Fp> reduce_frac(const FracSElem<Rational>& x, const PrimeField& field) {
  return FracSElem<Fp>(reduce_selem(x.num(), field), x.spow());
}

ThetaSTable<Fp> reduce_table(const ThetaSTable<Rational>& table, const PrimeField& field) {
  ThetaSTable<Fp> r;
  r.a.reserve(table.a.size());
  for (const auto& x : table.a) r.a.push_back(reduce_selem(x, field));
  return r;
}

std::vector<FracSElem<Fp>> ModPModule::apply(const FracSElem<Fp>& c, std::size_t order) const {
  if (order > prec)
    throw Error(ErrorCode::PrecisionExceeded, "module was reduced to order " + std::to_string(prec));
  auto tc = theta.apply(c, order);
  std::vector<FracSElem<Fp>> out(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    FracSElem<Fp> acc = tc[0] * u[n];
    for (std::size_t a = 1; a <= n; ++a) acc += tc[a] * u[n - a];
    out[n] = acc.normalized();
  }
  return out;
}

ModPModule reduce_module_mod_p(std::uint64_t p, std::size_t prec, const ThetaSTable<Rational>& table,
                               const USeries<Rational>& u) {
  if (p == 2) throw Error(ErrorCode::PEqualsTwo, "p must differ from 2");
  PrimeField field(p);
  if (u.prec() < prec)
    throw Error(ErrorCode::PrecisionExceeded, "u is known to order " + std::to_string(u.prec()));
  ThetaS<PrimeField> theta(reduce_table(truncate_table(table, prec), field), field);
  USeries<Fp> up = u.truncated(prec).map([&](const FracSElem<Rational>& x) { return reduce_frac(x, field); });

  using FS = FracSElem<Fp>;
  USeries<Fp> theta_t(prec);
  theta_t[0] = FS(SElem<Fp>::t(field));
  if (prec >= 1) theta_t[1] = FS(SElem<Fp>::one(field));
  USeries<Fp> w = normalize_all(theta_t * theta.theta_s_inv().truncated(prec) * up);
  return ModPModule{field, prec, std::move(theta), std::move(up), std::move(w)};
}

ModPModule reduce_module_mod_p(std::uint64_t p, std::size_t prec) {
  if (p == 2) throw Error(ErrorCode::PEqualsTwo, "p must differ from 2");
  PrimeField check(p);
  (void)check;
  auto table = solve_theta_s(prec, RationalField{});
  return reduce_module_mod_p(p, prec, table, compute_u(prec, table));
}

AxiomReport check_iteration_mod_p(const ModPModule& mp, Exec exec) {
  const std::size_t n = mp.prec;
  // basis element f (0 = f1, 1 = f2) and inner order j
  const std::size_t jobs = 2 * (n + 1);
  auto coord = [&](std::size_t f, std::size_t k) -> const FracSElem<Fp>& { return f == 0 ? mp.u[k] : mp.w[k]; };
  // binomials in Z first, then reduced: i may exceed p
  auto binom = [&](std::size_t a, std::size_t b) {
    return mp.field.from_rational(gen_binomial(Rational(static_cast<long long>(a)), static_cast<unsigned>(b)));
  };
  auto check_one = [&](std::size_t idx) -> std::optional<Counterexample> {
    const std::size_t f = idx / (n + 1), j = idx % (n + 1);
    auto inner = mp.apply(coord(f, j), n - j);
    for (std::size_t i = 0; i + j <= n; ++i) {
      FracSElem<Fp> rhs = coord(f, i + j) * binom(i + j, i);
      if (!(inner[i] == rhs))
        return Counterexample{idx,
                              {f == 0 ? "f1" : "f2"},
                              "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")",
                              inner[i].to_string(),
                              rhs.to_string()};
    }
    return std::nullopt;
  };
  AxiomReport rep;
  rep.law = "iteration";
  rep.instance = "M mod " + std::to_string(mp.field.characteristic());
  rep.samples_tested = 2;
  rep.bound = "i+j <= " + std::to_string(n);
  rep.counterexample = detail::first_failure(jobs, check_one, exec);
  return rep;
}

StabilityReport check_stability(const ModPModule& mp) {
  StabilityReport out;
  out.report.law = "stability";
  out.report.instance = "M mod " + std::to_string(mp.field.characteristic());
  out.report.samples_tested = 2;
  out.report.bound = "n <= " + std::to_string(mp.prec);
  const Fp zero = mp.field.zero();
  auto in_module = [&](const FracSElem<Fp>& img) {
    return img.spow() == 0 && residue_at_point(img.num(), zero, zero, mp.field).is_zero();
  };
  for (std::size_t n = 0; n <= mp.prec; ++n) {
    StabilityEntry e;
    e.n = n;
    e.f1_image = FracSElem<Fp>(mp.u[n].num().times_s(), mp.u[n].spow()).normalized();
    e.f2_image = FracSElem<Fp>(mp.w[n].num().times_s(), mp.w[n].spow()).normalized();
    e.f1_in_module = in_module(e.f1_image);
    e.f2_in_module = in_module(e.f2_image);
    if (!out.report.counterexample && !(e.f1_in_module && e.f2_in_module)) {
      bool first = !e.f1_in_module;
      out.report.counterexample = Counterexample{n,
                                                 {first ? "f1" : "f2"},
                                                 "n=" + std::to_string(n),
                                                 (first ? e.f1_image : e.f2_image).to_string(),
                                                 "element of <s, t>"};
    }
    out.entries.push_back(std::move(e));
  }
  return out;
}

AxiomReport check_leibniz_mod_p(const ModPModule& mp, std::size_t samples, std::size_t order, std::uint64_t seed) {
  if (order > mp.prec)
    throw Error(ErrorCode::PrecisionExceeded, "module was reduced to order " + std::to_string(mp.prec));
  std::mt19937_64 rng(seed);
  using FS = FracSElem<Fp>;
  const FS t_over_s(SElem<Fp>::t(mp.field), 1);
  AxiomReport rep;
  rep.law = "leibniz";
  rep.instance = "M mod " + std::to_string(mp.field.characteristic());
  rep.samples_tested = samples;
  rep.bound = "T-order " + std::to_string(order);
  for (std::size_t k = 0; k < samples && !rep.counterexample; ++k) {
    SElem<Fp> x = random_selem(rng, mp.field);
    SElem<Fp> alpha = random_selem(rng, mp.field), beta = random_selem(rng, mp.field);
    FS cm = FS(alpha) + FS(beta) * t_over_s;
    auto lhs = mp.apply(FS(x) * cm, order);
    auto tx = mp.theta.apply(x, order);
    auto tm = mp.apply(cm, order);
    for (std::size_t n = 0; n <= order; ++n) {
      FS rhs = FS(tx[0]) * tm[n];
      for (std::size_t i = 1; i <= n; ++i) rhs += FS(tx[i]) * tm[n - i];
      if (!(lhs[n] == rhs)) {
        rep.counterexample = Counterexample{k,
                                            {x.to_string(), alpha.to_string() + " f1 + " + beta.to_string() + " f2"},
                                            "n=" + std::to_string(n),
                                            lhs[n].to_string(),
                                            rhs.to_string()};
        break;
      }
    }
  }
  return rep;
}

AxiomReport check_nilpotence_mod_p(const ModPModule& mp) {
  const std::uint64_t p = mp.field.characteristic();
  if (mp.prec < 1) throw Error(ErrorCode::PrecisionExceeded, "nilpotence needs order >= 1");
  FracSElem<Fp> c(SElem<Fp>::one(mp.field));
  for (std::uint64_t i = 0; i < p; ++i) c = mp.apply(c, 1)[1];
  AxiomReport rep;
  rep.law = "nilpotence";
  rep.instance = "M mod " + std::to_string(p);
  rep.samples_tested = 1;
  rep.bound = "(theta_M^(1))^" + std::to_string(p);
  if (!c.is_zero()) rep.counterexample = Counterexample{0, {"f1"}, "power " + std::to_string(p), c.to_string(), "0"};
  return rep;
}

}  // namespace idforge
