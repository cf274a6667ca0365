#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "idforge/char_p.hpp"
#include "idforge/error.hpp"
#include "idforge/field.hpp"
#include "idforge/galois.hpp"
#include "idforge/id_core.hpp"
#include "idforge/module_m.hpp"
#include "idforge/poly.hpp"
#include "idforge/selem.hpp"
#include "idforge/series.hpp"

namespace idforge {

// Reports are emitted with ordered_json so key order, and therefore the
// byte stream, is fixed by construction order.
using Json = nlohmann::ordered_json;

/// Scalars: Rational as "n/d" (d omitted when 1), Fp as "v mod p".
inline Json scalar_to_json(const Rational& q) { return q.to_string(); }
inline Json scalar_to_json(const Fp& x) { return x.to_string(); }

Rational rational_from_json(const Json& j);
Fp fp_from_json(const Json& j);

template <class F>
F scalar_from_json(const Json& j);
template <>
inline Rational scalar_from_json<Rational>(const Json& j) { return rational_from_json(j); }
template <>
inline Fp scalar_from_json<Fp>(const Json& j) { return fp_from_json(j); }

namespace detail {
// Fp() zeros carry no modulus; they are written with the modulus of their
// record so every coefficient reads back as "v mod p".
inline std::uint64_t modulus_of(const Rational&) { return 0; }
inline std::uint64_t modulus_of(const Fp& x) { return x.modulus(); }
template <class F>
std::uint64_t modulus_of(const std::vector<F>& v) {
  for (const auto& c : v)
    if (auto m = modulus_of(c)) return m;
  return 0;
}
inline Json scalar_to_json(const Rational& q, std::uint64_t) { return idforge::scalar_to_json(q); }
inline Json scalar_to_json(const Fp& x, std::uint64_t p) {
  return idforge::scalar_to_json(x.modulus() == 0 && p != 0 ? Fp::from_u64(x.value(), p) : x);
}
template <class F>
std::uint64_t modulus_of(const SElem<F>& x) {
  for (int i = 0; i < 3; ++i)
    if (auto m = modulus_of(x.coord(i).coeffs())) return m;
  return 0;
}
}  // namespace detail

template <class F>
Json poly_to_json(const Poly<F>& p, std::uint64_t modulus = 0) {
  if (modulus == 0) modulus = detail::modulus_of(p.coeffs());
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(detail::scalar_to_json(c, modulus));
  return a;
}
template <class F>
Poly<F> poly_from_json(const Json& j) {
  std::vector<F> c;
  for (const auto& x : j) c.push_back(scalar_from_json<F>(x));
  return Poly<F>(std::move(c));
}

template <class F>
Json series_to_json(const TruncSeries<F>& f, const std::string& var = "t") {
  Json j;
  j["var"] = var;
  j["prec"] = f.prec();
  const std::uint64_t modulus = detail::modulus_of(f.coeffs());
  Json c = Json::array();
  for (const auto& x : f.coeffs()) c.push_back(detail::scalar_to_json(x, modulus));
  j["coeffs"] = std::move(c);
  return j;
}
template <class F>
TruncSeries<F> series_from_json(const Json& j) {
  std::vector<F> c;
  for (const auto& x : j.at("coeffs")) c.push_back(scalar_from_json<F>(x));
  if (c.size() != j.at("prec").get<std::size_t>() + 1)
    throw Error(ErrorCode::InvalidArgument, "series record: coefficient count does not match prec");
  return TruncSeries<F>(std::move(c));
}

template <class F>
Json selem_to_json(const SElem<F>& x) {
  Json j;
  const std::uint64_t m = detail::modulus_of(x);
  j["num"] = Json::array({poly_to_json(x.coord(0), m), poly_to_json(x.coord(1), m), poly_to_json(x.coord(2), m)});
  j["dpow"] = x.dpow();
  return j;
}
template <class F>
SElem<F> selem_from_json(const Json& j) {
  const auto& n = j.at("num");
  if (n.size() != 3) throw Error(ErrorCode::InvalidArgument, "SElem record needs three numerator polynomials");
  typename SElem<F>::Num num{poly_from_json<F>(n[0]), poly_from_json<F>(n[1]), poly_from_json<F>(n[2])};
  return SElem<F>(std::move(num), j.at("dpow").get<unsigned>());
}

template <class F>
Json frac_to_json(const FracSElem<F>& x) {
  Json j;
  j["num"] = selem_to_json(x.num());
  j["spow"] = x.spow();
  return j;
}
template <class F>
FracSElem<F> frac_from_json(const Json& j) {
  return FracSElem<F>(selem_from_json<F>(j.at("num")), j.at("spow").get<unsigned>());
}

template <class F>
Json melem_to_json(const MElem<F>& m) {
  Json j;
  j["f1"] = selem_to_json(m.f1);
  j["f2"] = selem_to_json(m.f2);
  return j;
}
template <class F>
MElem<F> melem_from_json(const Json& j) {
  return {selem_from_json<F>(j.at("f1")), selem_from_json<F>(j.at("f2"))};
}

Json report_to_json(const AxiomReport& r);
AxiomReport report_from_json(const Json& j);

Json bounds_to_json(const SearchBounds& b);
SearchBounds bounds_from_json(const Json& j);

Json verdict_to_json(const GaloisVerdict<Rational>& v);
GaloisVerdict<Rational> verdict_from_json(const Json& j);

Json stability_to_json(const StabilityReport& r);

/// Stable rendering used for every CLI report: two-space indent, trailing newline.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace idforge
