// hermit2p: two-point evaluation codes on Hermitian curves, the quantum codes
// built from them, and oracle-backed verification of the closed forms.
//
// Subcommands:
//   curve   rational points of the affine curve, one "x,y" line per point
//   basis   monomial basis of a divisor's Riemann-Roch space, "x_exp,y_exp" lines
//   code    generator matrix of an evaluation code, JSON
//   tables  best dimensions per designed distance (csv, json or text)
//   params  parameters of one code family member (csv, json or text)
//   aqecc   asymmetric quantum code from a nested pair, JSON
//   search  every nested divisor pair up to a degree bound (csv or json)
//   verify  formula-vs-oracle sweeps; exits 2 when a mismatch is found
//
// Every subcommand writes to standard output unless --output FILE is given.
// Exit codes: 0 success, 1 usage or runtime error, 2 verification mismatch.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hermit2p/emit.hpp"
#include "hermit2p/verify.hpp"

namespace {

using namespace hermit2p;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("cannot write output file '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-point evaluation codes on Hermitian curves"};
  app.require_subcommand(1);

  unsigned q = 0;
  std::string divisor_text;
  std::string format = "csv";
  std::string output;
  std::string family = "two";
  std::string suite = "all";
  long long r = 0;
  long long r1 = 0;
  long long r2 = 0;
  long long delta_min = -1;
  long long delta_max = -1;
  long long step = 2;
  long long max_deg = -1;
  bool oracle = false;
  OracleOptions opt;
  int exit_code = 0;

  const std::string q_help = "base parameter; codes live over GF(q^2)";
  const std::string divisor_help =
      "divisor written as iP+jQ, e.g. \"35P+5Q\", \"6P-2Q\", \"3P\", \"0\" "
      "(use --divisor=-2Q for a leading minus)";
  const std::string output_help = "write to this file instead of standard output";
  const std::string budget_help =
      "largest enumerable message dimension for oracle work";
  const std::string threads_help =
      "worker threads; 0 means HERMIT2P_THREADS or all cores";

  CLI::App* curve = app.add_subcommand(
      "curve", "List the affine rational points as x,y element encodings");
  curve->add_option("--q", q, q_help)->required();
  curve->add_option("--output", output, output_help);
  curve->callback(
      [&] { write_output(output, points_to_lines(affine_points(q))); });

  CLI::App* basis = app.add_subcommand(
      "basis", "Monomial basis of the Riemann-Roch space of a divisor");
  basis->add_option("--q", q, q_help)->required();
  basis->add_option("--divisor", divisor_text, divisor_help)->required();
  basis->add_option("--output", output, output_help);
  basis->callback([&] {
    write_output(output, monomials_to_lines(
                             monomial_basis(parse_divisor(divisor_text), q)));
  });

  CLI::App* code = app.add_subcommand(
      "code", "Generator matrix of the evaluation code of a divisor, as JSON");
  code->add_option("--q", q, q_help)->required();
  code->add_option("--divisor", divisor_text, divisor_help)->required();
  code->add_option("--output", output, output_help);
  code->callback([&] {
    TwoPointDivisor g = parse_divisor(divisor_text);
    EvaluationSet d(q);
    write_output(output, code_to_json(q, g, evaluate_code(d, g)));
  });

  CLI::App* tables = app.add_subcommand(
      "tables", "Best one-point and two-point dimensions per designed distance");
  tables->add_option("--q", q, q_help)->required();
  tables->add_option("--format", format, "csv, json or text")
      ->check(CLI::IsMember({"csv", "json", "text"}));
  tables->add_option("--delta-min", delta_min,
                     "first designed distance (default q+1)");
  tables->add_option("--delta-max", delta_max,
                     "last designed distance (default q(q-1)-1)");
  tables->add_option("--step", step, "designed-distance increment (default 2)")
      ->check(CLI::PositiveNumber);
  tables->callback([&] {
    const long long dmin = delta_min >= 0 ? delta_min : q + 1;
    const long long dmax =
        delta_max >= 0 ? delta_max
                       : static_cast<long long>(q) * (q - 1) - 1;
    std::vector<TableRow> rows = parameter_table(q, dmin, dmax, step);
    std::string text = format == "json"   ? table_to_json(rows)
                       : format == "text" ? table_to_text(rows)
                                          : table_to_csv(rows);
    write_output(output, text);
  });
  tables->add_option("--output", output, output_help);

  CLI::App* params = app.add_subcommand(
      "params", "Length, dimension and distance of one code family member");
  params->add_option("--q", q, q_help)->required();
  params->add_option("--r", r, "family index, 0 <= r <= q(q+1)")->required();
  params->add_option("--family", family, "one or two (default two)")
      ->check(CLI::IsMember({"one", "two"}));
  params->add_option("--format", format, "csv, json or text")
      ->check(CLI::IsMember({"csv", "json", "text"}));
  params->add_option("--output", output, output_help);
  params->callback([&] {
    ClassicalParams p =
        family == "one" ? one_point_params(q, r) : two_point_params(q, r);
    std::string text = format == "json"   ? params_to_json(p)
                       : format == "text" ? params_to_text(p)
                                          : params_to_csv(p);
    write_output(output, text);
  });

  CLI::App* aqecc = app.add_subcommand(
      "aqecc", "Asymmetric quantum code from the nested pair at (r1, r2)");
  aqecc->add_option("--q", q, q_help)->required();
  aqecc->add_option("--r1", r1, "index of the inner code")->required();
  aqecc->add_option("--r2", r2, "index of the outer code")->required();
  aqecc->add_option("--family", family, "one or two (default two)")
      ->check(CLI::IsMember({"one", "two"}));
  aqecc->add_flag("--oracle", oracle,
                  "enumerate the true quotient weights (small q only)");
  aqecc->add_option("--budget", opt.budget, budget_help);
  aqecc->add_option("--threads", opt.threads, threads_help);
  aqecc->add_option("--output", output, output_help);
  aqecc->callback([&] {
    if (family == "one") {
      if (oracle)
        throw std::invalid_argument(
            "the one-point comparison is formula-level; --oracle applies to "
            "the two-point family");
      write_output(output, quantum_to_json(one_point_aqecc(q, r1, r2)));
      return;
    }
    AqeccDesign design = two_point_aqecc(q, r1, r2);
    if (!oracle) {
      write_output(output, quantum_to_json(design.params));
      return;
    }
    EvaluationSet d(q);
    auto pair = aqecc_code_pair(d, design);
    write_output(output,
                 quantum_to_json(css_asymmetric(pair.first, pair.second, &opt)));
  });

  CLI::App* search = app.add_subcommand(
      "search", "Enumerate nested divisor pairs and their code parameters");
  search->add_option("--q", q, q_help)->required();
  search->add_option("--max-deg", max_deg,
                     "largest outer-divisor degree (default q(q-1))");
  search->add_flag("--oracle", oracle,
                   "also enumerate the true d_x of every pair (small q only)");
  search->add_option("--budget", opt.budget, budget_help);
  search->add_option("--threads", opt.threads, threads_help);
  search->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  search->add_option("--output", output, output_help);
  search->callback([&] {
    std::vector<SearchRecord> records =
        search_nested_pairs(q, max_deg, oracle ? &opt : nullptr);
    write_output(output, format == "json" ? search_to_json(records)
                                          : search_to_csv(records));
  });

  CLI::App* verify = app.add_subcommand(
      "verify", "Check the closed forms against brute-force oracles");
  verify->add_option("--q", q, q_help + " (2 or 3)")->required();
  verify->add_option("--suite", suite,
                     "duality, distance, hermitian, aqecc or all (default all)")
      ->check(CLI::IsMember({"duality", "distance", "hermitian", "aqecc", "all"}));
  verify->add_option("--budget", opt.budget, budget_help);
  verify->add_option("--threads", opt.threads, threads_help);
  verify->add_option("--output", output, output_help);
  verify->callback([&] {
    VerifyResult result = verify_suite(q, suite, opt);
    write_output(output, result.report);
    if (!result.all_match) exit_code = 2;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const BudgetExceeded& e) {
    std::cerr << "hermit2p: enumeration budget exceeded: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "hermit2p: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
