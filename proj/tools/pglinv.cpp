// pglinv: classification, Q-maps, invariants and counts for the PGL_2(F_q)
// action on irreducible polynomials.
//
// Exit codes: 0 success, 1 property failure or oracle disagreement,
// 2 usage or validation error.

#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "pglinv/io.hpp"
#include "pglinv/pglinv.hpp"

using namespace pglinv;

namespace {

struct Config {
  std::uint64_t p = 2;
  unsigned s = 1;
  std::string matrix;
  int n = 0, m = 0;
  std::string method = "all";
  std::string format;
  std::string suite;
  std::uint64_t seed = 1;
  bool check = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_field(CLI::App* cmd, Config& c) {
  cmd->add_option("--p", c.p, "characteristic")->required();
  cmd->add_option("--s", c.s, "extension degree")->default_val(1);
}

// the default is filled in after parsing since all subcommands share c.format
void add_format(CLI::App* cmd, Config& c, const std::string& dflt) {
  cmd->add_option("--format", c.format, "json or tsv (default " + dflt + ")")->check(CLI::IsMember({"json", "tsv"}));
}

Mat2 matrix_arg(const Field& f, const Config& c) { return parse_matrix(f, c.matrix); }

int cmd_classify(const Config& c) {
  const Field& f = make_field(c.p, c.s);
  const json j = classify_json(matrix_arg(f, c));
  if (c.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "matrix\ttype\tparameter\torder\treduced\tconjugator\teigenvalue\n";
    auto get = [&](const char* k) { return j.contains(k) ? (j[k].is_string() ? j[k].get<std::string>() : j[k].dump()) : std::string("-"); };
    std::cout << get("matrix") << '\t' << get("type") << '\t' << get("parameter") << '\t' << get("order") << '\t'
              << get("reduced") << '\t' << get("conjugator") << '\t'
              << (j.contains("eigenvalue") ? j["eigenvalue"]["code"].dump() : "-") << "\n";
  }
  return 0;
}

int cmd_qmap(const Config& c) {
  const Field& f = make_field(c.p, c.s);
  const Mat2 A = matrix_arg(f, c);
  if (std::holds_alternative<Identity>(classify(A))) throw UsageError("qmap: the identity class has no Q-map");
  const QConstruction qc = q_map(A);
  const json j = to_json(qc, A);
  if (c.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "num\tden\tdegree\ttype\tconjugator\tfixed\n"
              << to_string(qc.map.num) << '\t' << to_string(qc.map.den) << '\t' << qc.map.degree << '\t'
              << j["type"].get<std::string>() << '\t' << j["conjugator"].get<std::string>() << '\t'
              << (j["fixed"].get<bool>() ? "yes" : "no") << "\n";
  }
  return j["fixed"].get<bool>() ? 0 : 1;
}

int cmd_invariants(const Config& c) {
  const Field& f = make_field(c.p, c.s);
  const Mat2 A = matrix_arg(f, c);
  if (std::holds_alternative<Identity>(classify(A))) throw UsageError("invariants: the identity class fixes everything");
  const auto D = static_cast<int>(proj_order(A));
  if (c.m < 1 || D * c.m <= 2) throw UsageError("invariants: need m >= 1 and D*m > 2 (D = " + std::to_string(D) + ")");
  const auto inv = generate_invariants(A, c.m);
  bool ok = true;
  if (c.check)
    for (const auto& g : inv) ok = ok && is_invariant(proj_canonical(A), g);
  if (c.format == "json") {
    json list = json::array();
    for (const auto& g : inv) list.push_back(to_string(g));
    json j{{"field", field_json(f)}, {"matrix", to_string(A)}, {"D", D}, {"m", c.m}, {"degree", D * c.m},
           {"count", inv.size()}, {"invariants", list}};
    if (c.check) j["checked"] = ok;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& g : inv) std::cout << to_string(g) << "\n";
    if (c.check) std::cout << "# check " << (ok ? "passed" : "FAILED") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_count(const Config& c) {
  const Field& f = make_field(c.p, c.s);
  const Mat2 A = matrix_arg(f, c);
  if (std::holds_alternative<Identity>(classify(A))) throw UsageError("count: the identity class fixes everything");
  if (c.n < 2) throw UsageError("count: need n >= 2");
  const bool all = c.method == "all";
  const bool want_formula = all || c.method == "formula";
  if (want_formula && c.n <= 2) throw UsageError("count: the formula holds for n > 2 only; use --method brute for n = 2");
  const std::uint64_t D = proj_order(A);
  json j{{"field", field_json(f)}, {"matrix", to_string(A)}, {"type", type_name(classify(A))}, {"D", D}, {"n", c.n}};
  std::vector<std::int64_t> values;
  if (want_formula) values.push_back(j["formula"] = count_invariants_formula(A, c.n));
  if (all || c.method == "brute") values.push_back(j["bruteforce"] = count_invariants_bruteforce(proj_canonical(A), c.n));
  if (all || c.method == "criterion") {
    if (c.n <= 2) throw UsageError("count: the criterion count needs n > 2");
    // degrees not divisible by D carry no invariants
    const std::int64_t v = c.n % D == 0 ? count_via_criterion(A, c.n / static_cast<int>(D)) : 0;
    values.push_back(j["criterion"] = v);
  }
  bool agree = true;
  for (auto v : values) agree = agree && v == values.front();
  if (all) j["agree"] = agree;
  if (c.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    auto get = [&](const char* k) { return j.contains(k) ? j[k].dump() : std::string("-"); };
    std::cout << "q\tmatrix\ttype\tD\tn\tformula\tbruteforce\tcriterion\tagree\n"
              << f.q() << '\t' << to_string(A) << '\t' << j["type"].get<std::string>() << '\t' << D << '\t' << c.n
              << '\t' << get("formula") << '\t' << get("bruteforce") << '\t' << get("criterion") << '\t'
              << (all ? (agree ? "yes" : "no") : "-") << "\n";
  }
  return agree ? 0 : 1;
}

int cmd_verify(const Config& c) {
  const Field& f = make_field(c.p, c.s);
  std::vector<std::string> suites;
  if (c.suite == "all") {
    suites = suite_names();
  } else {
    suites = {c.suite};
  }
  bool ok = true;
  json out = json::array();
  for (const auto& name : suites) {
    const auto results = run_suite(name, f, c.seed);
    ok = ok && all_pass(results);
    for (const auto& r : results) {
      if (c.format == "json") {
        json j = to_json(r);
        j["suite"] = name;
        out.push_back(j);
      } else {
        std::cout << (r.pass ? "PASS" : "FAIL") << '\t' << name << '\t' << r.name << '\t' << r.detail << "\n";
      }
    }
  }
  if (c.format == "json") std::cout << json{{"field", field_json(f)}, {"seed", c.seed}, {"pass", ok}, {"results", out}}.dump(2) << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of irreducible polynomials under PGL_2(F_q)"};
  app.require_subcommand(1);
  Config c;

  auto* classify_cmd = app.add_subcommand("classify", "type, order, reduced form and conjugator of [A]");
  add_field(classify_cmd, c);
  classify_cmd->add_option("--matrix", c.matrix, "a,b,c,d as element encodings")->required();
  add_format(classify_cmd, c, "json");

  auto* qmap_cmd = app.add_subcommand("qmap", "rational map Q_A generating the [A]-invariants");
  add_field(qmap_cmd, c);
  qmap_cmd->add_option("--matrix", c.matrix, "a,b,c,d as element encodings")->required();
  add_format(qmap_cmd, c, "json");

  auto* inv_cmd = app.add_subcommand("invariants", "all [A]-invariants of degree D*m");
  add_field(inv_cmd, c);
  inv_cmd->add_option("--matrix", c.matrix, "a,b,c,d as element encodings")->required();
  inv_cmd->add_option("--m", c.m, "degree of the generating polynomials")->required();
  inv_cmd->add_flag("--check", c.check, "re-verify each invariant directly");
  add_format(inv_cmd, c, "json");

  auto* count_cmd = app.add_subcommand("count", "number of [A]-invariants of degree n");
  add_field(count_cmd, c);
  count_cmd->add_option("--matrix", c.matrix, "a,b,c,d as element encodings")->required();
  count_cmd->add_option("--n", c.n, "degree")->required();
  count_cmd->add_option("--method", c.method, "formula, brute, criterion or all")
      ->default_val("all")
      ->check(CLI::IsMember({"formula", "brute", "criterion", "all"}));
  add_format(count_cmd, c, "json");

  auto* verify_cmd = app.add_subcommand("verify", "run a property suite");
  add_field(verify_cmd, c);
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify_cmd->add_option("--suite", c.suite, "suite name or all")->required()->check(CLI::IsMember(suites));
  verify_cmd->add_option("--seed", c.seed, "seed for randomized properties")->default_val(1);
  add_format(verify_cmd, c, "tsv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (c.format.empty()) c.format = *verify_cmd ? "tsv" : "json";

  try {
    if (*classify_cmd) return cmd_classify(c);
    if (*qmap_cmd) return cmd_qmap(c);
    if (*inv_cmd) return cmd_invariants(c);
    if (*count_cmd) return cmd_count(c);
    if (*verify_cmd) return cmd_verify(c);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
