#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "idforge/app.hpp"
#include "idforge/char_p.hpp"
#include "idforge/expr.hpp"
#include "idforge/field.hpp"
#include "idforge/json_io.hpp"

using namespace idforge;

namespace {

using Q = Rational;
using S = SElem<Q>;
const RationalField kQ;
const S s = S::s(kQ), t = S::t(kQ);
const S b_star = (s * t * -3LL).times_dinv();

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(IDFORGE_GOLDEN_DIR) + "/" + name);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json run_json(const std::vector<std::string>& args, int expected_exit = 0) {
  auto r = run(args);
  REQUIRE(r.exit_code == expected_exit);
  return Json::parse(r.out);
}

struct Golden {
  const char* file;
  std::vector<std::string> args;
};

const std::vector<Golden>& goldens() {
  static const std::vector<Golden> g{
      {"theta_s_order3.json", {"theta-s", "--order", "3"}},
      {"check_axioms_ct.json", {"check-axioms", "--ring", "ct", "--samples", "8", "--prec", "4"}},
      {"galois_bstar_plus.json", {"galois", "--b", "-3*s*t*dinv", "--point", "plus"}},
      {"galois_bstar_minus.json", {"galois", "--b", "-3*s*t*dinv", "--point", "minus"}},
      {"galois_zero_plus.json", {"galois", "--b", "0", "--point", "plus"}},
      {"charp_p3.json", {"charp", "--p", "3", "--prec", "4"}},
      {"module_check_bstar.json", {"module-check", "--b", "-3*s*t*dinv", "--samples", "8"}},
      {"solve_y_zero.json", {"solve-y", "--b", "0", "--prec", "12"}},
      {"embed_minus.json", {"embed", "--point", "minus", "--prec", "8", "--samples", "4", "--order", "3"}},
  };
  return g;
}

}  // namespace

TEST_CASE("parse_b_expression") {
  CHECK(parse_b_expression("-3*s*t*dinv") == b_star);
  CHECK(parse_b_expression("0") == S());
  CHECK(parse_b_expression("(s^2 - 1)*dinv*3 + 1/2") == (s * s - S::one(kQ)).times_dinv() * 3LL + S::constant(kQ, 1) * Q(1, 2));
  CHECK(parse_b_expression("s^3 - s - t^2") == S());
  CHECK(parse_b_expression("  -(-t)  ") == t);
  CHECK(parse_b_expression("dinv * (3*s^2 - 1)") == S::one(kQ));
  for (auto [text, offset] : {std::pair<const char*, std::size_t>{"s + (", 5}, {"s ** t", 3}, {"x", 0}, {"1/0", 2},
                             {"s t", 2}, {"", 0}}) {
    CAPTURE(text);
    try {
      parse_b_expression(text);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.offset() == offset);
    }
  }
}

TEST_CASE("theta-s --order 1") {
  auto j = run_json({"theta-s", "--order", "1"});
  auto a1 = selem_from_json<Q>(j["coefficients"][1]["value"]);
  CHECK(a1 == (t * 2LL).times_dinv());
  CHECK(j["coefficients"][1]["text"] == "2*t/(3s^2-1)");
  CHECK(j["cubic_identity"] == true);
}

TEST_CASE("charp --p 2 is a domain error") {
  auto r = run({"charp", "--p", "2"});
  CHECK(r.exit_code == 1);
  auto j = Json::parse(r.out);
  CHECK(j["error"]["code"] == "PEqualsTwo");
  CHECK(j["error"]["message"] == "p must differ from 2");
}

TEST_CASE("usage errors exit 2") {
  auto r = run({"galois", "--b", "s + ("});
  CHECK(r.exit_code == 2);
  auto j = Json::parse(r.out);
  CHECK(j["error"]["code"] == "ParseError");
  CHECK(j["error"]["offset"] == 5);
  CHECK(run({"no-such-command"}).exit_code == 2);
  CHECK(run({"theta-s", "--order", "abc"}).exit_code == 2);
  CHECK(run({"check-axioms", "--ring", "nope"}).exit_code == 2);
  CHECK(run({}).exit_code == 2);
}

TEST_CASE("galois b* at plus") {
  auto j = run_json({"galois", "--b", "-3*s*t*dinv", "--point", "plus"});
  auto v = verdict_from_json(j);
  CHECK(v.is_mu);
  CHECK(v.n == 2);
  REQUIRE(v.witness);
  CHECK(*v.witness == s);
}

TEST_CASE("golden outputs are reproduced byte for byte") {
  for (const auto& g : goldens()) {
    CAPTURE(g.file);
    auto r = run(g.args);
    CHECK(r.exit_code == 0);
    CHECK(r.out == read_golden(g.file));
  }
}

TEST_CASE("golden JSON round-trips through the parsers") {
  {
    auto j = Json::parse(read_golden("theta_s_order3.json"));
    auto table = solve_theta_s(3, kQ);
    for (const auto& c : j["coefficients"]) {
      auto x = selem_from_json<Q>(c["value"]);
      CHECK(x == table.a[c["n"].get<std::size_t>()]);
      CHECK(selem_to_json(x) == c["value"]);
    }
  }
  for (const char* f : {"galois_bstar_plus.json", "galois_bstar_minus.json", "galois_zero_plus.json"}) {
    CAPTURE(f);
    auto j = Json::parse(read_golden(f));
    CHECK(verdict_to_json(verdict_from_json(j)) == j);
  }
  for (const char* f : {"check_axioms_ct.json", "module_check_bstar.json", "charp_p3.json", "embed_minus.json"}) {
    CAPTURE(f);
    auto j = Json::parse(read_golden(f));
    for (const auto& r : j["reports"]) CHECK(report_to_json(report_from_json(r)) == r);
  }
  {
    auto j = Json::parse(read_golden("solve_y_zero.json"));
    auto y = series_from_json<Q>(j["y"]);
    CHECK(series_to_json(y) == j["y"]);
    CHECK(series_to_json(y * y) == j["y_squared"]);
  }
  {
    auto j = Json::parse(read_golden("embed_minus.json"));
    auto e = build_embedding(point_minus(kQ), 8, kQ);
    CHECK(series_from_json<Q>(j["sigma"]) == e.sigma);
  }
  {
    auto j = Json::parse(read_golden("charp_p3.json"));
    auto u = compute_u(4);
    PrimeField f3(3);
    // f1 images in the stability table are the reductions of s u_n
    for (const auto& e : j["stability"]["entries"]) {
      std::size_t n = e["n"].get<std::size_t>();
      auto img = frac_from_json<Fp>(e["f1_image"]);
      CHECK(img == reduce_frac(u[n] * FracSElem<Q>(s), f3).normalized());
    }
  }
}

TEST_CASE("identical invocations give identical output") {
  std::vector<std::string> args{"check-axioms", "--ring", "s", "--samples", "6", "--prec", "3", "--seed", "9"};
  CHECK(run(args).out == run(args).out);
  std::vector<std::string> margs{"module-check", "--b", "s*t", "--seed", "4", "--samples", "6"};
  CHECK(run(margs).out == run(margs).out);
  std::vector<std::string> other{"module-check", "--b", "s*t", "--seed", "5", "--samples", "6"};
  CHECK(run(margs).out != run(other).out);
}

TEST_CASE("text format") {
  auto r = run({"--format", "text", "theta-s", "--order", "1"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("coefficients[1].text") != std::string::npos);
  CHECK(r.out.find("2*t/(3s^2-1)") != std::string::npos);
  CHECK(r.out.find('{') == std::string::npos);
  auto r2 = run({"theta-s", "--order", "1", "--format", "text"});
  CHECK(r2.out == r.out);
}

TEST_CASE("IDFORGE_DEFAULT_PREC replaces the --prec default") {
  ::setenv("IDFORGE_DEFAULT_PREC", "5", 1);
  auto j = run_json({"solve-y", "--b", "0"});
  auto explicit_prec = run_json({"solve-y", "--b", "0", "--prec", "7"});
  auto bad = run({"solve-y", "--b", "0"});
  ::setenv("IDFORGE_DEFAULT_PREC", "x", 1);
  auto invalid = run({"solve-y", "--b", "0"});
  ::unsetenv("IDFORGE_DEFAULT_PREC");
  CHECK(j["y"]["prec"] == 5);
  CHECK(explicit_prec["y"]["prec"] == 7);
  CHECK(bad.exit_code == 0);
  CHECK(invalid.exit_code == 2);
  CHECK(run_json({"solve-y", "--b", "0"})["y"]["prec"] == 64);
}
