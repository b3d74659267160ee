#include "cmirred/cli.hpp"

#include "cmirred/classify.hpp"
#include "cmirred/diophantine.hpp"
#include "cmirred/errors.hpp"
#include "cmirred/family.hpp"
#include "cmirred/geometry.hpp"
#include "cmirred/oracle.hpp"
#include "cmirred/poly_text.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>

namespace cmirred {

namespace {

using Json = nlohmann::ordered_json;

struct BudgetFailure {
  Json report;
};

bool is_char2_name(const std::string& s) {
  return s == "2" || s == "char2" || s == "F2" || s == "GF(2)";
}

Json polynomial_json(const Polynomial& p, bool with_terms) {
  Json j;
  j["ring"] = p.ring().variables.names();
  j["field"] = p.field().name();
  j["text"] = p.to_string();
  if (with_terms) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) terms.push_back({{"exponents", m.exponents()}, {"coefficient", c.to_string()}});
    j["terms"] = std::move(terms);
  }
  return j;
}

Json conditions_json(const RuleConditions& c) {
  Json j;
  j["characteristic"] = c.characteristic;
  if (c.m) j["m"] = *c.m;
  if (c.n) j["n"] = *c.n;
  if (c.a_is_zero) j["a_is_zero"] = *c.a_is_zero;
  if (c.t) j["t"] = *c.t;
  if (c.omega_exists) j["omega_exists"] = *c.omega_exists;
  if (c.omega) j["omega"] = *c.omega;
  if (c.discriminant) j["discriminant"] = *c.discriminant;
  return j;
}

Json verdict_json(const Verdict& v, unsigned trials, std::uint64_t seed) {
  Json j;
  j["verdict"] = verdict_kind_name(v.kind);
  j["rule"] = rule_tag_name(v.rule.tag);
  if (v.rule.diagonal_case != 0) j["diagonal_case"] = v.rule.diagonal_case;
  j["conditions"] = conditions_json(v.rule.conditions);
  if (v.closed_form) j["closed_form"] = *v.closed_form;
  if (v.certificate) {
    const auto& cert = *v.certificate;
    j["input"] = cert.input().to_string();
    j["unit"] = cert.unit().to_string();
    Json factors = Json::array();
    for (const auto& f : cert.factors()) {
      factors.push_back({{"factor", f.factor.to_string()},
                         {"multiplicity", f.multiplicity},
                         {"claim", f.claim == IrreducibilityClaim::Irreducible ? "irreducible" : "unverified"}});
    }
    j["factors"] = std::move(factors);
    j["product_check"] = verify_certificate(cert);
    j["random_identity_check"] = random_identity_test(cert.product(), cert.input(), trials, seed);
  } else {
    j["factors"] = Json::array();
  }
  return j;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

void flatten(const Json& j, const std::string& path, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out << path << "  " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

struct Globals {
  bool pretty = false;
  bool timing = false;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact reducibility classifier for the distance-relation polynomial family", "cmirred"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  app.set_version_flag("--version", kVersion);

  Globals globals;
  app.add_flag("--pretty", globals.pretty, "Print a human-readable table instead of JSON");
  app.add_flag("--timing", globals.timing, "Include elapsed time in the report");
  app.add_option("--seed", globals.seed, "Seed for all randomized checks");
  app.add_option("--jobs", globals.jobs, "Worker threads for oracle and diophantine")->check(CLI::Range(1U, 256U));

  // construct
  auto* construct = app.add_subcommand("construct", "Build a family member");
  std::string c_kind, c_field = "Q", c_a = "0", c_t = "0", c_rule = "sum";
  unsigned c_m = 3, c_n = 2;
  bool c_terms = false;
  construct->add_option("kind", c_kind, "g, f, phi, cayley-menger, prekite or special")
      ->required()
      ->check(CLI::IsMember({"g", "f", "phi", "cayley-menger", "prekite", "special"}));
  construct->add_option("--field", c_field, "Q, Q(w) or an odd prime");
  construct->add_option("--m", c_m, "Number of variables");
  construct->add_option("--n", c_n, "Simplex dimension");
  construct->add_option("--a", c_a, "Constant a");
  construct->add_option("--t", c_t, "Parameter t");
  construct->add_option("--rule", c_rule, "Edge rule for special: sum, product, squared-sum, eisenstein");
  construct->add_flag("--terms", c_terms, "Also emit the term list");

  // classify
  auto* classify = app.add_subcommand("classify", "Decide reducibility and emit a certificate");
  std::string k_field = "Q", k_a = "0", k_t, k_diagonal;
  unsigned k_m = 3, k_n = 2, k_trials = 8;
  bool k_cm = false;
  classify->add_option("--field", k_field, "Q, Q(w), an odd prime, or 2 for characteristic 2");
  classify->add_option("--m", k_m, "Number of variables");
  classify->add_option("--a", k_a, "Constant a");
  auto* k_t_opt = classify->add_option("--t", k_t, "Parameter t");
  classify->add_flag("--cayley-menger", k_cm, "Classify the Cayley-Menger determinant");
  classify->add_option("--n", k_n, "Simplex dimension for --cayley-menger");
  auto* k_diag_opt =
      classify->add_option("--diagonal", k_diagonal, "Diagonal quadratic c0 + c1 x1^2 + ...: comma list c0,c1,...");
  classify->add_option("--identity-trials", k_trials, "Random points for the certificate identity check");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Brute-force divisor search over a prime field");
  std::string o_poly, o_field;
  SearchBudget budget;
  budget.homogeneous_only = false;
  std::optional<long> o_time_ms;
  oracle->add_option("--poly", o_poly, "Polynomial text")->required();
  oracle->add_option("--field", o_field, "Odd prime")->required();
  oracle->add_option("--max-degree", budget.max_degree, "Largest candidate degree");
  oracle->add_option("--max-field-size", budget.max_field_size, "Largest field searched");
  oracle->add_option("--max-candidates", budget.max_candidates, "Candidate budget");
  oracle->add_flag("--homogeneous", budget.homogeneous_only, "Only homogeneous candidates for homogeneous input");
  oracle->add_flag("--prune", budget.prune_by_leading_form, "Prune by the leading homogeneous form");
  oracle->add_option("--time-limit-ms", o_time_ms, "Wall-clock budget");

  // geometry
  auto* geometry = app.add_subcommand("geometry", "Numeric checks of the distance relation");
  geometry->require_subcommand(1);
  auto* verify = geometry->add_subcommand("verify", "Residuals at random affine-hull points");
  unsigned g_n = 2, g_samples = 1000;
  double g_a = 1.0;
  verify->add_option("--n", g_n, "Simplex dimension");
  verify->add_option("--a", g_a, "Edge length");
  verify->add_option("--samples", g_samples, "Number of random points");
  auto* solve = geometry->add_subcommand("solve", "Solve for the fourth value of the triangle relation");
  std::string g_known, g_role = "side-unknown";
  solve->add_option("--known", g_known, "Three values v1,v2,v3")->required();
  solve->add_option("--role", g_role, "side-given or side-unknown")
      ->check(CLI::IsMember({"side-given", "side-unknown"}));

  // diophantine
  auto* dioph = app.add_subcommand("diophantine", "Integer solutions of the triangle relation");
  std::int64_t d_bound = 10;
  bool d_primitive = false, d_lines = false;
  dioph->add_option("--bound", d_bound, "Largest entry")->required();
  dioph->add_flag("--primitive-only", d_primitive, "Only tuples with gcd 1");
  dioph->add_flag("--lines", d_lines, "One tuple per line instead of JSON");


  std::vector<std::string> argv_storage{"cmirred"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto started = std::chrono::steady_clock::now();
  Json report;
  report["version"] = kVersion;
  int code = kExitOk;

  try {
    if (*construct) {
      report["subcommand"] = "construct";
      report["inputs"] = {{"kind", c_kind}, {"field", c_field}};
      const FieldSpec field = FieldSpec::parse(c_field);
      if (c_kind == "g" || c_kind == "f" || c_kind == "phi") {
        const FieldElement t = FieldElement::parse(field, c_t);
        report["inputs"]["m"] = c_m;
        report["inputs"]["t"] = c_t;
        Polynomial p = [&] {
          if (c_kind == "f") return build_f(field, c_m, t);
          if (c_kind == "phi") return build_phi(field, c_m, t);
          report["inputs"]["a"] = c_a;
          return build_g({field, c_m, FieldElement::parse(field, c_a), t});
        }();
        report["polynomial"] = polynomial_json(p, c_terms);
      } else if (c_kind == "cayley-menger") {
        report["inputs"]["n"] = c_n;
        report["polynomial"] = polynomial_json(cayley_menger(c_n, field), c_terms);
      } else if (c_kind == "prekite") {
        report["inputs"]["n"] = c_n;
        const auto r = prekite_reduction(c_n, field);
        report["polynomial"] = polynomial_json(r.reduced, c_terms);
        report["h"] = polynomial_json(r.h, c_terms);
        report["identity_check"] = true;
      } else {
        report["inputs"]["n"] = c_n;
        report["inputs"]["rule"] = c_rule;
        report["polynomial"] = polynomial_json(special_family_substitution(c_n, parse_edge_rule(c_rule), field), c_terms);
      }
    } else if (*classify) {
      report["subcommand"] = "classify";
      Json inputs{{"field", k_field}};
      const bool char2 = is_char2_name(k_field);
      Verdict verdict = [&]() -> Verdict {
        if (k_cm) {
          inputs["cayley_menger"] = true;
          inputs["n"] = k_n;
          if (char2) return classify_cayley_menger(Characteristic2{}, k_n);
          return classify_cayley_menger(FieldSpec::parse(k_field), k_n);
        }
        if (k_diag_opt->count() > 0) {
          inputs["diagonal"] = k_diagonal;
          const auto items = split_list(k_diagonal);
          if (char2) {
            std::vector<long> coeffs;
            for (const auto& s : items) coeffs.push_back(std::stol(s));
            return classify_diagonal_quadratic(Characteristic2{}, coeffs);
          }
          const FieldSpec field = FieldSpec::parse(k_field);
          std::vector<FieldElement> coeffs;
          for (const auto& s : items) coeffs.push_back(FieldElement::parse(field, s));
          return classify_diagonal_quadratic(field, coeffs);
        }
        if (k_t_opt->count() == 0) throw PreconditionError("classify needs --t, --cayley-menger or --diagonal");
        inputs["m"] = k_m;
        inputs["a"] = k_a;
        inputs["t"] = k_t;
        if (char2) return classify_g(Char2GParams{k_m, k_a, k_t});
        const FieldSpec field = FieldSpec::parse(k_field);
        return classify_g(GParams{field, k_m, FieldElement::parse(field, k_a), FieldElement::parse(field, k_t)});
      }();
      report["inputs"] = std::move(inputs);
      const Json body = verdict_json(verdict, k_trials, globals.seed);
      for (const auto& [k, v] : body.items()) report[k] = v;
    } else if (*oracle) {
      report["subcommand"] = "oracle";
      report["inputs"] = {{"poly", o_poly}, {"field", o_field}, {"max_degree", budget.max_degree},
                          {"homogeneous", budget.homogeneous_only}, {"prune", budget.prune_by_leading_form}};
      const FieldSpec field = FieldSpec::parse(o_field);
      if (field.kind() != FieldKind::Prime) throw PreconditionError("oracle needs an odd prime field");
      if (o_time_ms) budget.time_limit = std::chrono::milliseconds(*o_time_ms);
      budget.jobs = globals.jobs;
      const Polynomial p = parse_polynomial(o_poly, field);
      const SearchOutcome outcome = brute_force_factor_search(p, budget);
      if (const auto* found = std::get_if<FactorFound>(&outcome)) {
        report["verdict"] = "Reducible";
        report["divisor"] = found->divisor.to_string();
        report["quotient"] = found->quotient.to_string();
        report["candidates_tried"] = found->candidates_tried;
      } else if (const auto* none = std::get_if<NoFactorFound>(&outcome)) {
        report["verdict"] = "Irreducible";
        report["candidates_tried"] = none->candidates_tried;
      } else {
        report["verdict"] = "BudgetExceeded";
        report["reason"] = std::get<BudgetExceeded>(outcome).reason;
        code = kExitBudget;
      }
    } else if (*verify) {
      report["subcommand"] = "geometry verify";
      report["inputs"] = {{"n", g_n}, {"a", g_a}, {"samples", g_samples}, {"seed", globals.seed}};
      const RegularSimplex s = regular_simplex(g_n, g_a);
      std::mt19937_64 rng(globals.seed);
      double worst = 0;
      for (unsigned i = 0; i < g_samples; ++i) {
        const auto w = sample_affine_weights(g_n, rng);
        worst = std::max(worst, std::abs(relation_residual(s, w).residual));
      }
      report["max_residual"] = worst;
      std::vector<double> at_vertex(g_n + 1, 0.0);
      at_vertex[0] = 1.0;
      report["vertex_residual"] = relation_residual(s, at_vertex).residual;
      report["passed"] = worst < 1e-9;
    } else if (*solve) {
      report["subcommand"] = "geometry solve";
      report["inputs"] = {{"known", g_known}, {"role", g_role}};
      std::vector<double> known;
      for (const auto& s : split_list(g_known)) known.push_back(std::stod(s));
      const auto roots = solve_fourth_distance(known, g_role == "side-given" ? Role::SideGiven : Role::SideUnknown);
      Json solutions = Json::array();
      for (double r : roots) {
        std::vector<double> d = known;
        d.push_back(r);
        // a plus three distances: the first known value plays the side.
        const double residual = normalized_relation(d.front(), std::span<const double>(d).subspan(1));
        solutions.push_back({{"value", r}, {"residual", residual}});
      }
      report["solutions"] = std::move(solutions);
    } else if (*dioph) {
      report["subcommand"] = "diophantine";
      report["inputs"] = {{"bound", d_bound}, {"primitive_only", d_primitive}};
      Json tuples = Json::array();
      std::ostringstream lines;
      for (const auto& s : enumerate_solutions(d_bound, globals.jobs)) {
        if (d_primitive && !s.primitive) continue;
        tuples.push_back({{"tuple", s.values}, {"primitive", s.primitive}});
        lines << s.values[0] << ' ' << s.values[1] << ' ' << s.values[2] << ' ' << s.values[3]
              << (s.primitive ? " primitive" : "") << '\n';
      }
      if (d_lines) {
        out << lines.str();
        return kExitOk;
      }
      report["count"] = tuples.size();
      report["solutions"] = std::move(tuples);
    }
  } catch (const InternalAssertion& e) {
    err << "internal assertion: " << e.what() << '\n';
    return kExitInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: malformed number: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: number out of range: " << e.what() << '\n';
    return kExitUsage;
  }

  if (globals.timing) {
    const auto elapsed = std::chrono::steady_clock::now() - started;
    report["timing_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
  }
  if (globals.pretty) {
    flatten(report, "", out);
  } else {
    out << report.dump() << '\n';
  }
  return code;
}

}  // namespace cmirred
