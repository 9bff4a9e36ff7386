#pragma once

#include "nodal/cli/report.hpp"
#include "nodal/exact/rational.hpp"

#include <optional>

namespace nodal::cli {

struct Options {
  std::uint64_t seed = 7;
  long max_height = 50;
  std::size_t samples = 200;
  std::vector<Integer> coeffs{1, 2, 3, 5, 7, 11};
  std::uint32_t scan_prime = 11;
  bool crosscheck_graph = true;
  long m = 2, n = 3, r = 1;
  std::optional<long> table_n; // all of [2,7] when empty
};

std::vector<Check> segre_checks(const Options &o);
std::vector<Check> cr_checks(const Options &o);
std::vector<Check> duality_checks(const Options &o);
std::vector<Check> section_checks(const Options &o);
std::vector<Check> tangent_checks(const Options &o);
std::vector<Check> lattice_checks(const Options &o);
std::vector<Check> code_checks(const Options &o);
std::vector<Check> involution_checks(const Options &o);
std::vector<Check> pentad_checks(const Options &o);
std::vector<Check> congruence_checks(const Options &o);
std::vector<Check> table1_checks(const Options &o);
/// Every group with default inputs, plus the sampled ones at o.seed.
std::vector<Check> all_checks(const Options &o);

/// Parses "a,b,c"; throws std::invalid_argument.
std::vector<long> parse_list(const std::string &s);

} // namespace nodal::cli
