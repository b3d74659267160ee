#include "doctest.h"

#include "cmirred/cli.hpp"
#include "cmirred/family.hpp"
#include "cmirred/poly_text.hpp"

#include "json.hpp"

#include <sstream>

using namespace cmirred;
using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("classify reports") {
  const auto heron = run({"classify", "--field", "Q", "--m", "3", "--a", "0", "--t", "2"});
  REQUIRE(heron.code == kExitOk);
  const Json j = heron.json();
  CHECK(j["rule"] == "HeronCase");
  CHECK(j["verdict"] == "Reducible");
  CHECK(j["factors"].size() == 4);
  CHECK(j["product_check"] == true);
  CHECK(j["conditions"]["characteristic"] == 0);

  const auto cm = run({"classify", "--cayley-menger", "--n", "3", "--field", "Q"});
  REQUIRE(cm.code == kExitOk);
  CHECK(cm.json()["verdict"] == "Irreducible");
  CHECK(cm.json()["rule"] == "IrreducibleCM");

  const auto omega = run({"classify", "--field", "F7", "--m", "3", "--t", "3"});
  CHECK(omega.json()["rule"] == "OmegaCase");
  CHECK(omega.json()["unit"] == "5");

  const auto char2 = run({"classify", "--field", "2", "--m", "3", "--t", "1", "--a", "1"});
  CHECK(char2.json()["verdict"] == "ZeroPolynomial");

  const auto diag = run({"classify", "--field", "5", "--diagonal", "1,1"});
  CHECK(diag.json()["diagonal_case"] == 2);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"classify", "--field", "Q", "--m", "2", "--t", "2"}).code == kExitUsage);
  CHECK(run({"classify", "--field", "9", "--m", "3", "--t", "2"}).code == kExitUsage);
  CHECK(run({"classify", "--field", "2", "--cayley-menger", "--n", "3"}).code == kExitUsage);
  CHECK(run({"classify", "--field", "Q"}).code == kExitUsage);
  CHECK(run({"oracle", "--poly", "x^2+y^2", "--field", "Q"}).code == kExitUsage);
  CHECK(run({"oracle", "--poly", "x^2+", "--field", "5"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);

  const auto budget = run({"oracle", "--poly", "(1+x^2+y^2+z^2)^2-3*(1+x^4+y^4+z^4)", "--field", "7"});
  CHECK(budget.code == kExitBudget);
  CHECK(budget.json()["verdict"] == "BudgetExceeded");
}

TEST_CASE("oracle reports") {
  const auto r = run({"oracle", "--poly", "(x^2+y^2+z^2)^2-2*(x^4+y^4+z^4)", "--field", "5", "--homogeneous"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.json()["verdict"] == "Reducible");
  CHECK(r.json()["divisor"] == "x + y + z");
  const auto irr = run({"oracle", "--poly", "x^2+y^2+z^2", "--field", "5", "--jobs", "2"});
  CHECK(irr.json()["verdict"] == "Irreducible");
}

TEST_CASE("construct output re-parses") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"construct", "g", "--field", "Q", "--m", "4", "--a", "1/2", "--t", "3"},
        std::vector<std::string>{"construct", "cayley-menger", "--n", "3"},
        std::vector<std::string>{"construct", "phi", "--field", "F7", "--m", "3", "--t", "5"},
        std::vector<std::string>{"construct", "special", "--n", "2", "--rule", "eisenstein", "--terms"}}) {
    const auto r = run(args);
    REQUIRE(r.code == kExitOk);
    const Json p = r.json()["polynomial"];
    const FieldSpec field = FieldSpec::parse(p["field"].get<std::string>());
    const RingPtr ring = make_ring(field, VariableNames(p["ring"].get<std::vector<std::string>>()));
    const Polynomial parsed = parse_polynomial(p["text"].get<std::string>(), ring);
    CHECK(parsed.to_string() == p["text"].get<std::string>());
  }
  const auto g = run({"construct", "g", "--field", "Q", "--m", "3", "--a", "0", "--t", "2"});
  const Json p = g.json()["polynomial"];
  const RingPtr ring = make_ring(FieldSpec::rational(), VariableNames(p["ring"].get<std::vector<std::string>>()));
  CHECK(parse_polynomial(p["text"].get<std::string>(), ring) ==
        build_g({FieldSpec::rational(), 3, FieldElement::zero(FieldSpec::rational()),
                 FieldElement::from_integer(FieldSpec::rational(), 2)}));
  CHECK(run({"construct", "prekite", "--n", "4"}).json()["identity_check"] == true);
}

TEST_CASE("geometry and diophantine") {
  const auto solve = run({"geometry", "solve", "--known", "5,7,8", "--role", "side-given"});
  REQUIRE(solve.code == kExitOk);
  CHECK(solve.json()["solutions"][0]["value"].get<double>() == doctest::Approx(3.0));

  const auto verify = run({"geometry", "verify", "--n", "4", "--a", "2", "--samples", "200"});
  CHECK(verify.json()["passed"] == true);

  const auto d = run({"diophantine", "--bound", "10"});
  REQUIRE(d.code == kExitOk);
  bool found = false;
  const Json report = d.json();
  for (const auto& s : report["solutions"]) found = found || s["tuple"] == Json::array({3, 5, 7, 8});
  CHECK(found);
  const auto prim = run({"diophantine", "--bound", "20", "--primitive-only", "--lines"});
  CHECK(prim.out == "0 1 1 1 primitive\n3 5 7 8 primitive\n7 8 13 15 primitive\n");
}

TEST_CASE("reports are deterministic for a fixed seed") {
  const std::vector<std::string> a{"--seed", "99", "geometry", "verify", "--n", "3", "--samples", "50"};
  CHECK(run(a).out == run(a).out);
  const std::vector<std::string> b{"--seed", "100", "geometry", "verify", "--n", "3", "--samples", "50"};
  CHECK(run(a).out != run(b).out);
  const std::vector<std::string> c{"--seed", "7", "classify", "--field", "Q(w)", "--m", "3", "--t", "3"};
  CHECK(run(c).out == run(c).out);
  CHECK(run({"--timing", "diophantine", "--bound", "3"}).json().contains("timing_ms"));
  CHECK_FALSE(run({"diophantine", "--bound", "3"}).json().contains("timing_ms"));
}

TEST_CASE("pretty output is a flat table") {
  const auto r = run({"--pretty", "classify", "--field", "Q", "--m", "3", "--t", "2"});
  CHECK(r.out.find("rule  HeronCase\n") != std::string::npos);
  CHECK(r.out.find("factors[0].factor  ") != std::string::npos);
}
