#include "nodal/cli/checks.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace nodal::cli;

namespace {

int usage_error(const std::string &msg) {
  std::cerr << "nodalcert: " << msg << "\n";
  return 2;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Certification workbench for 15-nodal quartic surfaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  std::string json_path;
  bool no_timing = false;
  app.add_option("--json", json_path, "Write the JSON report to PATH");
  app.add_option("--seed", o.seed, "Seed for sampled points");
  app.add_option("--max-height", o.max_height, "Height bound for sampled points")->check(CLI::PositiveNumber);
  app.add_flag("--no-timing", no_timing, "Omit elapsed times from the report");

  auto *verify = app.add_subcommand("verify", "Run the verification suite");
  bool all = false;
  verify->add_flag("--all", all, "Run every check")->required();
  auto *segre = app.add_subcommand("segre", "Nodes of the Segre cubic");
  auto *cr = app.add_subcommand("cr", "Double lines and cardinal tangency of the quartic CR4");
  auto *duality = app.add_subcommand("duality", "Duality between S3 and CR4");
  duality->add_option("--samples", o.samples, "Number of sampled points");
  duality->add_option("--seed", o.seed, "Seed");
  auto *section = app.add_subcommand("section", "Hyperplane section of CR4");
  std::string coeffs = "1,2,3,5,7,11";
  section->add_option("--coeffs", coeffs, "Six hyperplane coefficients a,b,c,d,e,f");
  section->add_option("--scan-prime", o.scan_prime, "Prime for the finite-field scan");
  auto *tangent = app.add_subcommand("tangent-section", "Tangent hyperplane section (Kummer surface)");
  tangent->add_option("--seed", o.seed, "Seed");
  auto *lattice = app.add_subcommand("lattice", "Picard lattice, discriminant form and Kummer embedding");
  auto *code = app.add_subcommand("code", "Even-set code of the nodes");
  auto *invol = app.add_subcommand("involutions", "Involutions acting on Pic");
  auto *pent = app.add_subcommand("pentads", "Pentad classification");
  bool crosscheck = false;
  pent->add_flag("--crosscheck-graph", crosscheck, "Cross-check the graph criterion");
  auto *cong = app.add_subcommand("congruence", "Invariants of a congruence of lines");
  std::string bidegree = "2,3";
  cong->add_option("--bidegree", bidegree, "m,n");
  cong->add_option("--rank", o.r, "Rank r");
  auto *table = app.add_subcommand("table1", "Singular-point counts for bidegree (2,n)");
  long table_n = 0;
  table->add_option("--n", table_n, "n in [2,7]")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  Report report;
  try {
    if (*section) {
      auto v = parse_list(coeffs);
      if (v.size() != 6) return usage_error("--coeffs needs six integers");
      o.coeffs.assign(v.begin(), v.end());
    }
    if (*cong) {
      auto v = parse_list(bidegree);
      if (v.size() != 2) return usage_error("--bidegree needs m,n");
      o.m = v[0];
      o.n = v[1];
    }
  } catch (const std::invalid_argument &e) {
    return usage_error(e.what());
  }
  o.crosscheck_graph = crosscheck;
  if (*table) o.table_n = table_n;

  if (*verify) report.checks = all_checks(o);
  else if (*segre) report.checks = segre_checks(o);
  else if (*cr) report.checks = cr_checks(o);
  else if (*duality) report.checks = duality_checks(o);
  else if (*section) report.checks = section_checks(o);
  else if (*tangent) report.checks = tangent_checks(o);
  else if (*lattice) report.checks = lattice_checks(o);
  else if (*code) report.checks = code_checks(o);
  else if (*invol) report.checks = involution_checks(o);
  else if (*pent) report.checks = pentad_checks(o);
  else if (*cong) report.checks = congruence_checks(o);
  else if (*table) report.checks = table1_checks(o);

  report.seed = o.seed;
  report.timing = !no_timing;
  for (const auto &c : report.checks) {
    std::cout << (c.status == Status::pass ? "PASS " : c.status == Status::fail ? "FAIL " : "SKIP ") << c.id << ": "
              << c.summary;
    if (report.timing) std::cout << " [" << static_cast<long long>(c.elapsed_ms) << " ms]";
    std::cout << "\n";
  }
  if (!json_path.empty()) {
    std::ofstream f(json_path);
    if (!f) return usage_error("cannot write " + json_path);
    f << report.to_json().dump(2) << "\n";
  }
  return report.failed() ? 1 : 0;
}
