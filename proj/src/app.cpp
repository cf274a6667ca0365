#include "idforge/app.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>

#include "idforge/char_p.hpp"
#include "idforge/error.hpp"
#include "idforge/expr.hpp"
#include "idforge/field.hpp"
#include "idforge/galois.hpp"
#include "idforge/instances.hpp"
#include "idforge/json_io.hpp"
#include "idforge/module_m.hpp"
#include "idforge/pv_embed.hpp"
#include "idforge/theta_s.hpp"

namespace idforge {

namespace {

const RationalField kQ;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

EmbeddingPoint<Rational> point_by_name(const std::string& name) {
  return name == "plus" ? point_plus(kQ) : point_minus(kQ);
}

Json point_to_json(const EmbeddingPoint<Rational>& p) {
  Json j;
  j["name"] = p.name;
  j["a"] = scalar_to_json(p.a);
  j["b"] = scalar_to_json(p.b);
  return j;
}

// ---- commands ------------------------------------------------------------

template <class K>
Json theta_s_table(std::size_t order, const K& field) {
  using F = typename K::scalar_type;
  using S = SElem<F>;
  auto table = solve_theta_s(order, field);
  Json rows = Json::array();
  for (std::size_t n = 0; n <= order; ++n) {
    Json r;
    r["n"] = n;
    r["value"] = selem_to_json(table.a[n]);
    r["text"] = table.a[n].to_string();
    rows.push_back(std::move(r));
  }
  // theta(s)^3 - theta(s) - (t+T)^2 to T-order `order`
  TruncSeries<S> a(table.a);
  TruncSeries<S> rhs(order);
  rhs[0] = S::t(field) * S::t(field);
  if (order >= 1) rhs[1] = S::t(field) * 2LL;
  if (order >= 2) rhs[2] = S::one(field);
  Json j;
  j["command"] = "theta-s";
  j["field"] = field.name();
  j["order"] = order;
  j["coefficients"] = std::move(rows);
  j["cubic_identity"] = (a * a * a - a - rhs).is_zero();
  if (order >= 1) j["first_component_matches_derivation"] = table.a[1] == derivation(S::s(field), field);
  return j;
}

Json cmd_theta_s(std::size_t order, std::optional<std::uint64_t> p) {
  if (p) return theta_s_table(order, PrimeField(*p));
  return theta_s_table(order, kQ);
}

Json cmd_check_axioms(const std::string& ring, std::uint64_t seed, std::size_t prec, std::size_t samples) {
  auto r = check_instance(ring, samples, prec, seed);
  Json j;
  j["command"] = "check-axioms";
  j["ring"] = ring;
  j["seed"] = seed;
  j["reports"] = Json::array({report_to_json(r.hom), report_to_json(r.iteration)});
  j["passed"] = r.passed();
  return j;
}

Json cmd_module_check(const SElem<Rational>& b, std::uint64_t seed, std::size_t samples) {
  auto rel = check_relations(b, kQ);
  auto leib = check_module_leibniz(samples, seed, kQ, b);
  auto cert = local_freeness_certificates(kQ);
  Json certs = Json::array();
  for (const auto& c : cert.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["lhs"] = c.lhs;
    cj["rhs"] = c.rhs;
    cj["holds"] = c.holds;
    certs.push_back(std::move(cj));
  }
  Json j;
  j["command"] = "module-check";
  j["b"] = selem_to_json(b);
  j["seed"] = seed;
  j["reports"] = Json::array({report_to_json(rel), report_to_json(leib)});
  j["certificates"] = {{"x1", "s"}, {"x2", "s^2-1"}, {"n1", cert.n1}, {"n2", cert.n2}, {"checks", certs},
                       {"holds", cert.holds()}};
  j["passed"] = rel.passed() && leib.passed() && cert.holds();
  return j;
}

Json cmd_embed(const std::string& point, std::size_t prec, std::uint64_t seed, std::size_t samples,
               std::size_t order) {
  auto table = solve_theta_s(std::max(prec, order), kQ);
  auto e = build_embedding(point_by_name(point), table, prec, kQ);
  ThetaSTable<Rational> small;
  small.a.assign(table.a.begin(), table.a.begin() + static_cast<std::ptrdiff_t>(order + 1));
  ThetaS<RationalField> theta(small, kQ);
  auto rep = check_embed_commutes(e, theta, samples, order, seed, kQ);
  Json j;
  j["command"] = "embed";
  j["point"] = point_to_json(e.point);
  j["sigma"] = series_to_json(e.sigma);
  j["tau"] = series_to_json(e.tau);
  j["newton_cross_check"] = true;  // build_embedding throws on disagreement
  j["reports"] = Json::array({report_to_json(rep)});
  j["passed"] = rep.passed();
  return j;
}

Json cmd_solve_y(const SElem<Rational>& b, const std::string& point, std::size_t prec) {
  auto e = build_embedding(point_by_name(point), prec, kQ);
  auto y = solve_y(e, b, prec, kQ);
  Json j;
  j["command"] = "solve-y";
  j["b"] = selem_to_json(b);
  j["point"] = point_to_json(e.point);
  j["y"] = series_to_json(y);
  j["y_squared"] = series_to_json(y * y);
  j["residual_vanishes"] = prec == 0 || ode_residual(e, b, y, kQ).is_zero();
  return j;
}

Json cmd_pv_gens(const SElem<Rational>& b, const std::string& point, std::size_t prec, std::size_t t_order) {
  auto e = build_embedding(point_by_name(point), prec + t_order, kQ);
  auto g = pv_generators(e, b, prec, kQ);
  auto rep = constant_basis_check(e, b, prec, t_order, kQ);
  Json j;
  j["command"] = "pv-gens";
  j["b"] = selem_to_json(b);
  j["point"] = point_to_json(e.point);
  j["y"] = series_to_json(g.y);
  j["y_t_over_s"] = series_to_json(g.yt_over_s);
  j["s_over_y"] = series_to_json(g.s_over_y);
  j["t_over_y"] = series_to_json(g.t_over_y);
  j["reports"] = Json::array({report_to_json(rep)});
  j["passed"] = rep.passed();
  return j;
}

Json cmd_galois(const SElem<Rational>& b, const std::string& point, const SearchBounds& bounds) {
  bounds.validate();
  auto e = build_embedding(point_by_name(point), bounds.prec, kQ);
  return verdict_to_json(classify(b, e, bounds, kQ));
}

Json cmd_charp(std::uint64_t p, std::size_t prec, bool certify_only, std::uint64_t seed) {
  if (p == 2) throw Error(ErrorCode::PEqualsTwo, "p must differ from 2");
  PrimeField check(p);
  (void)check;
  auto table = solve_theta_s(prec, kQ);
  auto u = compute_u(prec, table);
  auto cert = certify_2_power(u);
  Json j;
  j["command"] = "charp";
  j["p"] = p;
  j["prec"] = prec;
  j["certificate"] = report_to_json(cert);
  bool passed = cert.passed();
  if (!certify_only) {
    auto mp = reduce_module_mod_p(p, prec, table, u);
    auto it = check_iteration_mod_p(mp);
    auto st = check_stability(mp);
    auto lb = check_leibniz_mod_p(mp, 8, std::min<std::size_t>(prec, 8), seed);
    auto nil = check_nilpotence_mod_p(mp);
    j["reports"] = Json::array({report_to_json(it), report_to_json(lb), report_to_json(nil)});
    j["stability"] = stability_to_json(st);
    passed = passed && it.passed() && st.report.passed() && lb.passed() && nil.passed();
  }
  j["passed"] = passed;
  return j;
}

// ---- text rendering --------------------------------------------------------

bool is_flat_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (x.is_structured() && !is_flat_array(x)) return false;
  return true;
}

std::string leaf_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string r = "[";
    for (std::size_t i = 0; i < j.size(); ++i) r += (i ? ", " : "") + leaf_text(j[i]);
    return r + "]";
  }
  return j.dump();
}

void flatten(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, rows);
  } else if (j.is_array() && !is_flat_array(j)) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", rows);
  } else {
    rows.emplace_back(path, leaf_text(j));
  }
}

std::string render_text(const Json& j) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::size_t w = 0;
  for (const auto& r : rows) w = std::max(w, r.first.size());
  std::ostringstream os;
  for (const auto& [k, v] : rows) os << k << std::string(w - k.size() + 2, ' ') << v << '\n';
  return os.str();
}

std::size_t default_prec(std::size_t fallback) {
  const char* env = std::getenv("IDFORGE_DEFAULT_PREC");
  if (!env || !*env) return fallback;
  std::size_t v = 0;
  const char* end = env + std::char_traits<char>::length(env);
  auto r = std::from_chars(env, end, v);
  if (r.ec != std::errc() || r.ptr != end) throw UsageError(std::string("IDFORGE_DEFAULT_PREC is not a natural number: ") + env);
  return v;
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  RunResult result;
  std::string format = "json";
  std::function<Json()> action;

  CLI::App app{"idforge: iterative derivations on s^3 - s = t^2", "idforge"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  try {
    const std::size_t p_embed = default_prec(32), p_ode = default_prec(64), p_axioms = default_prec(6),
                      p_charp = default_prec(10), p_galois = default_prec(64);

    // Options are bound to these locals; each subcommand's callback reads them.
    // CLI11 writes defaults into the bound variable at declaration time, so
    // every subcommand gets its own.
    std::size_t theta_order = 4, embed_order = 6, nmax = 6, deg = 8, dpow = 2, t_order = 16;
    std::size_t prec_axioms = 0, prec_embed = 0, prec_solve = 0, prec_gens = 0, prec_galois = 0, prec_charp = 0;
    std::size_t samples_axioms = 64, samples_module = 64, samples_embed = 32;
    std::optional<std::uint64_t> p_opt;
    std::uint64_t seed = 0, p = 0;
    std::string ring, point = "plus", b_text = "0";
    bool certify_only = false;
    const std::vector<std::string> rings = [] {
      auto r = instance_names();
      for (const auto& m : mutant_names()) r.push_back(m);
      return r;
    }();

    auto add_prec = [&](CLI::App* sub, std::size_t& target, std::size_t def) {
      target = def;
      sub->add_option("--prec", target, "Precision")->capture_default_str();
    };
    auto add_b = [&](CLI::App* sub) { sub->add_option("--b", b_text, "Coefficient b as an expression in s, t, dinv")->capture_default_str(); };
    auto add_point = [&](CLI::App* sub) {
      sub->add_option("--point", point, "Embedding point")->check(CLI::IsMember({"plus", "minus"}))->capture_default_str();
    };

    auto* theta = app.add_subcommand("theta-s", "Coefficients theta^(n)(s)");
    theta->add_option("--order", theta_order, "Largest n")->capture_default_str();
    theta->add_option("--p", p_opt, "Work over F_p instead of Q");
    theta->callback([&] { action = [&] { return cmd_theta_s(theta_order, p_opt); }; });

    auto* axioms = app.add_subcommand("check-axioms", "Iterative-derivation axioms on a bundled ring");
    axioms->add_option("--ring", ring, "Ring")->required()->check(CLI::IsMember(rings));
    axioms->add_option("--seed", seed, "Random seed")->capture_default_str();
    add_prec(axioms, prec_axioms, p_axioms);
    axioms->add_option("--samples", samples_axioms, "Random samples")->capture_default_str();
    axioms->callback([&] { action = [&] { return cmd_check_axioms(ring, seed, prec_axioms, samples_axioms); }; });

    auto* module = app.add_subcommand("module-check", "Well-definedness, Leibniz rule, local freeness of M");
    add_b(module);
    module->add_option("--seed", seed, "Random seed")->capture_default_str();
    module->add_option("--samples", samples_module, "Random Leibniz samples")->capture_default_str();
    module->callback(
        [&] { action = [&] { return cmd_module_check(parse_b_expression(b_text), seed, samples_module); }; });

    auto* embed = app.add_subcommand("embed", "Embedding S -> k[[t]] at a point");
    add_point(embed);
    add_prec(embed, prec_embed, p_embed);
    embed->add_option("--seed", seed, "Random seed")->capture_default_str();
    embed->add_option("--samples", samples_embed, "Random elements for the commutation check")->capture_default_str();
    embed->add_option("--order", embed_order, "Largest n in the commutation check")->capture_default_str();
    embed->callback([&] {
      action = [&] {
        if (embed_order >= prec_embed) throw UsageError("--order must be below --prec");
        return cmd_embed(point, prec_embed, seed, samples_embed, embed_order);
      };
    });

    auto* solve = app.add_subcommand("solve-y", "Series solution of the rank-one equation");
    add_b(solve);
    add_point(solve);
    add_prec(solve, prec_solve, p_ode);
    solve->callback([&] { action = [&] { return cmd_solve_y(parse_b_expression(b_text), point, prec_solve); }; });

    auto* gens = app.add_subcommand("pv-gens", "Picard-Vessiot generators and the constant-basis check");
    add_b(gens);
    add_point(gens);
    add_prec(gens, prec_gens, p_embed);
    gens->add_option("--t-order", t_order, "T-order of the constant-basis check")->capture_default_str();
    gens->callback([&] { action = [&] { return cmd_pv_gens(parse_b_expression(b_text), point, prec_gens, t_order); }; });

    auto* galois = app.add_subcommand("galois", "Classify the Galois group of the rank-one module");
    add_b(galois);
    add_point(galois);
    galois->add_option("--nmax", nmax, "Largest n tried")->capture_default_str();
    galois->add_option("--deg", deg, "t-degree bound D")->capture_default_str();
    galois->add_option("--dpow", dpow, "Denominator bound K")->capture_default_str();
    add_prec(galois, prec_galois, p_galois);
    galois->callback([&] {
      action = [&] {
        SearchBounds bounds{static_cast<unsigned>(nmax), static_cast<unsigned>(deg), static_cast<unsigned>(dpow), prec_galois};
        return cmd_galois(parse_b_expression(b_text), point, bounds);
      };
    });

    auto* charp = app.add_subcommand("charp", "Reduction of the module modulo p");
    charp->add_option("--p", p, "Odd prime")->required();
    add_prec(charp, prec_charp, p_charp);
    charp->add_flag("--certify-only", certify_only, "Only the 2-power denominator certificate");
    charp->add_option("--seed", seed, "Random seed")->capture_default_str();
    charp->callback([&] { action = [&] { return cmd_charp(p, prec_charp, certify_only, seed); }; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    Json out = action();
    result.out = format == "json" ? dump(out) : render_text(out);
    return result;
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.out = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = 2;
    result.err = std::string("usage error: ") + e.what() + "\n";
    return result;
  } catch (const UsageError& e) {
    result.exit_code = 2;
    result.err = std::string("usage error: ") + e.what() + "\n";
    return result;
  } catch (const ParseError& e) {
    result.exit_code = 2;
    result.err = std::string("usage error: ") + e.what() + "\n";
    Json j;
    j["error"] = {{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}, {"offset", e.offset()}};
    result.out = format == "json" ? dump(j) : render_text(j);
    return result;
  } catch (const Error& e) {
    result.exit_code = 1;
    result.err = std::string("error: ") + e.what() + "\n";
    Json j;
    j["error"] = {{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}};
    result.out = format == "json" ? dump(j) : render_text(j);
    return result;
  }
}

}  // namespace idforge
