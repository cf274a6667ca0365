#include "idforge/json_io.hpp"

#include <charconv>

namespace idforge {

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw Error(ErrorCode::InvalidArgument, "rational must be a string \"n/d\"");
  return Rational::parse(j.get<std::string>());
}

Fp fp_from_json(const Json& j) {
  if (!j.is_string()) throw Error(ErrorCode::InvalidArgument, "prime-field element must be a string \"v mod p\"");
  const std::string s = j.get<std::string>();
  const auto sep = s.find(" mod ");
  if (sep == std::string::npos) throw Error(ErrorCode::InvalidArgument, "expected \"v mod p\", got '" + s + "'");
  std::uint64_t v = 0, p = 0;
  auto r1 = std::from_chars(s.data(), s.data() + sep, v);
  auto r2 = std::from_chars(s.data() + sep + 5, s.data() + s.size(), p);
  if (r1.ec != std::errc() || r1.ptr != s.data() + sep || r2.ec != std::errc() || r2.ptr != s.data() + s.size())
    throw Error(ErrorCode::InvalidArgument, "expected \"v mod p\", got '" + s + "'");
  return Fp::from_u64(v, p);
}

Json report_to_json(const AxiomReport& r) {
  Json j;
  j["law"] = r.law;
  j["instance"] = r.instance;
  j["samples_tested"] = r.samples_tested;
  j["bound"] = r.bound;
  j["passed"] = r.passed();
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    Json cj;
    cj["sample_index"] = c.sample_index;
    cj["elements"] = c.elements;
    cj["coefficient"] = c.coefficient;
    cj["lhs"] = c.lhs;
    cj["rhs"] = c.rhs;
    j["counterexample"] = std::move(cj);
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

AxiomReport report_from_json(const Json& j) {
  AxiomReport r;
  r.law = j.at("law").get<std::string>();
  r.instance = j.at("instance").get<std::string>();
  r.samples_tested = j.at("samples_tested").get<std::size_t>();
  r.bound = j.at("bound").get<std::string>();
  const auto& c = j.at("counterexample");
  if (!c.is_null())
    r.counterexample = Counterexample{c.at("sample_index").get<std::size_t>(),
                                      c.at("elements").get<std::vector<std::string>>(),
                                      c.at("coefficient").get<std::string>(), c.at("lhs").get<std::string>(),
                                      c.at("rhs").get<std::string>()};
  return r;
}

Json bounds_to_json(const SearchBounds& b) {
  Json j;
  j["n_max"] = b.n_max;
  j["deg"] = b.deg;
  j["dpow"] = b.dpow;
  j["prec"] = b.prec;
  return j;
}

SearchBounds bounds_from_json(const Json& j) {
  return {j.at("n_max").get<unsigned>(), j.at("deg").get<unsigned>(), j.at("dpow").get<unsigned>(),
          j.at("prec").get<std::size_t>()};
}

Json verdict_to_json(const GaloisVerdict<Rational>& v) {
  Json j;
  j["verdict"] = v.is_mu ? "mu" : "no-relation";
  if (v.is_mu) {
    j["n"] = v.n;
    j["witness"] = selem_to_json(*v.witness);
  }
  j["bounds"] = bounds_to_json(v.bounds);
  return j;
}

GaloisVerdict<Rational> verdict_from_json(const Json& j) {
  GaloisVerdict<Rational> v;
  const auto kind = j.at("verdict").get<std::string>();
  if (kind != "mu" && kind != "no-relation") throw Error(ErrorCode::InvalidArgument, "unknown verdict '" + kind + "'");
  v.is_mu = kind == "mu";
  if (v.is_mu) {
    v.n = j.at("n").get<unsigned>();
    v.witness = selem_from_json<Rational>(j.at("witness"));
  }
  v.bounds = bounds_from_json(j.at("bounds"));
  return v;
}

Json stability_to_json(const StabilityReport& r) {
  Json j;
  j["report"] = report_to_json(r.report);
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json ej;
    ej["n"] = e.n;
    ej["f1_in_module"] = e.f1_in_module;
    ej["f2_in_module"] = e.f2_in_module;
    ej["f1_image"] = frac_to_json(e.f1_image);
    ej["f2_image"] = frac_to_json(e.f2_image);
    entries.push_back(std::move(ej));
  }
  j["entries"] = std::move(entries);
  return j;
}

}  // namespace idforge
