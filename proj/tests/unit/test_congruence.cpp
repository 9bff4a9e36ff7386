#include "nodal/congruence/congruence.hpp"

#include <doctest.h>

#include <set>
#include <sstream>

using namespace nodal::congruence;

TEST_CASE("invariants at small bidegrees") {
  auto c = invariants(2, 3, 1);
  CHECK(c.g == 1);
  CHECK(c.deg_focal == 4);
  CHECK(c.deg_l_curve == 4);
  CHECK(c.deg_P_surface == 2);
  CHECK(c.deg_branch_locus == 10);

  auto k = invariants(2, 2, 0);
  CHECK(k.g == 1);
  CHECK(k.deg_focal == 4);

  CHECK_THROWS_AS(invariants(1, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(invariants(3, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(invariants(2, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(invariants(2, 3, -1), std::invalid_argument);
}

TEST_CASE("sweep identities and duality") {
  for (long m = 2; m <= 8; ++m)
    for (long n = 2; n <= 8; ++n)
      for (long r = 0; r <= (m - 1) * (n - 1); ++r) {
        auto c = invariants(m, n, r);
        auto d = invariants(n, m, r);
        CHECK(c.deg_focal == 2 * m + 2 * c.g - 2);
        CHECK(c.g == d.g);
        CHECK(c.deg_l_curve == d.deg_P_surface);
        CHECK(c.deg_P_surface == d.deg_l_curve);
        CHECK(c.deg_branch_locus == d.deg_branch_locus);
        CHECK(c.deg_branch_locus == 2 * (2 * c.g - 2) + 2 * (m + n));
      }
  std::istringstream csv(invariant_sweep_csv(2, 8));
  std::string line;
  std::size_t rows = 0;
  std::getline(csv, line);
  CHECK(line.rfind("m,n,r,g", 0) == 0);
  while (std::getline(csv, line)) ++rows;
  std::size_t expected = 0;
  for (long m = 2; m <= 8; ++m)
    for (long n = 2; n <= 8; ++n) expected += static_cast<std::size_t>((m - 1) * (n - 1) + 1);
  CHECK(rows == expected);
}

TEST_CASE("multiplicities") {
  CHECK(focal_multiplicity_rays(0) == 0);
  CHECK(focal_multiplicity_rays(2) == 1);
  CHECK(focal_multiplicity_rays(3) == 3);
  auto c = invariants(2, 3, 1);
  CHECK(focal_multiplicity_secant(c, 0) == 1 + 1 - 3);
  CHECK(focal_multiplicity_secant(c, 3) == 2);
}

TEST_CASE("two-n profiles") {
  for (long n = 2; n <= 7; ++n) {
    auto p = two_n_profile(n);
    CHECK(p.consistent());
    CHECK(p.inv.r == n - 2);
    CHECK(p.inv.deg_branch_locus == 2 * (2 + n));
    CHECK(p.expected_nodes == 18 - n);
  }
  CHECK_THROWS(two_n_profile(1));
  CHECK_THROWS(two_n_profile(8));
}

namespace {
// Brute force over a bounded box, independent of the recursive solver.
std::set<AlphaVector> brute(long n, bool count) {
  const long target = (n + 2) * (n + 2) * (n - 1);
  std::set<AlphaVector> out;
  AlphaVector a{};
  for (a[5] = 0; a[5] * 216 <= target; ++a[5])
    for (a[4] = 0; a[4] * 125 + a[5] * 216 <= target; ++a[4])
      for (a[3] = 0; a[3] * 64 + a[4] * 125 + a[5] * 216 <= target; ++a[3])
        for (a[2] = 0; a[2] * 27 + a[3] * 64 + a[4] * 125 + a[5] * 216 <= target; ++a[2])
          for (a[1] = 0; a[1] * 8 + a[2] * 27 + a[3] * 64 + a[4] * 125 + a[5] * 216 <= target; ++a[1]) {
            a[0] = target - (a[1] * 8 + a[2] * 27 + a[3] * 64 + a[4] * 125 + a[5] * 216);
            long s = 0;
            for (auto x : a) s += x;
            if (!count || s == 18 - n) out.insert(a);
          }
  return out;
}
} // namespace

TEST_CASE("table solver against brute force") {
  for (long n = 2; n <= 7; ++n) {
    auto with = table1_solutions(n, true);
    CHECK(std::set<AlphaVector>(with.begin(), with.end()) == brute(n, true));
    auto without = table1_solutions(n, false);
    CHECK(std::set<AlphaVector>(without.begin(), without.end()) == brute(n, false));
    auto rep = table1_report(n);
    CHECK(rep.columns_present);
  }
}
