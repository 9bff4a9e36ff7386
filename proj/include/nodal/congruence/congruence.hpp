#pragma once

#include <array>
#include <json.hpp>
#include <string>
#include <vector>

namespace nodal::congruence {

struct CongruenceInvariants {
  long m = 0, n = 0, r = 0;
  long g = 0;
  long deg_focal = 0;      // 2n(m-1) - 2r, equal to 2m + 2g - 2
  long deg_l_curve = 0;    // n(n-1)/2 + r
  long deg_P_surface = 0;  // m(m-1)/2 + r
  long deg_branch_locus = 0;
  [[nodiscard]] nlohmann::json to_json() const;
};

/// Throws std::invalid_argument for m or n below 2 or r outside [0, (m-1)(n-1)].
CongruenceInvariants invariants(long m, long n, long r);

/// Multiplicities at a point with h(x) = h.
long focal_multiplicity_rays(long h);
long focal_multiplicity_secant(const CongruenceInvariants &c, long h);

struct TwoNProfile {
  CongruenceInvariants inv;
  long branch_from_genus = 0; // 2(2g-2) + 2(m+n)
  long expected_nodes = 0;    // 18 - n
  [[nodiscard]] bool consistent() const;
  [[nodiscard]] nlohmann::json to_json() const;
};

/// n in [2,7].
TwoNProfile two_n_profile(long n);

using AlphaVector = std::array<long, 6>;

/// Sum of i^3 alpha_i = (n+2)^2 (n-1), optionally with sum alpha_i = 18 - n.
std::vector<AlphaVector> table1_solutions(long n, bool impose_count = true);
long table1_cube_target(long n);
/// Published columns for n.
std::vector<AlphaVector> table1_columns(long n);
std::string alpha_str(const AlphaVector &a);

struct Table1Report {
  long n = 0;
  std::vector<AlphaVector> with_count, without_count_sample;
  std::size_t without_count_total = 0;
  std::vector<AlphaVector> columns;
  bool columns_present = false;
  bool extra_solutions = false;
  [[nodiscard]] nlohmann::json to_json() const;
};

Table1Report table1_report(long n);

/// CSV of invariants for m, n in [lo, hi].
std::string invariant_sweep_csv(long lo, long hi);

} // namespace nodal::congruence
