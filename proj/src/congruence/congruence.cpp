#include "nodal/congruence/congruence.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nodal::congruence {

nlohmann::json CongruenceInvariants::to_json() const {
  auto s = [](long v) { return std::to_string(v); };
  return {{"m", s(m)},
          {"n", s(n)},
          {"r", s(r)},
          {"g", s(g)},
          {"deg_focal", s(deg_focal)},
          {"deg_l_curve", s(deg_l_curve)},
          {"deg_P_surface", s(deg_P_surface)},
          {"deg_branch_locus", s(deg_branch_locus)}};
}

CongruenceInvariants invariants(long m, long n, long r) {
  if (m < 2 || n < 2)
    throw std::invalid_argument("bidegree (" + std::to_string(m) + "," + std::to_string(n) + ") unsupported: m,n >= 2");
  if (r < 0 || r > (m - 1) * (n - 1)) throw std::invalid_argument("rank " + std::to_string(r) + " out of range");
  CongruenceInvariants c{m, n, r};
  c.g = (m - 1) * (n - 1) - r;
  c.deg_focal = 2 * n * (m - 1) - 2 * r;
  if (c.deg_focal != 2 * m + 2 * c.g - 2) throw std::logic_error("focal degree expressions disagree");
  c.deg_l_curve = n * (n - 1) / 2 + r;
  c.deg_P_surface = m * (m - 1) / 2 + r;
  c.deg_branch_locus = 4 * (m * n - r) - 2 * (m + n);
  return c;
}

long focal_multiplicity_rays(long h) { return h * (h - 1) / 2; }

long focal_multiplicity_secant(const CongruenceInvariants &c, long h) {
  return c.m * (c.m - 1) / 2 + c.r - c.n + h;
}

bool TwoNProfile::consistent() const {
  return inv.g == 1 && inv.deg_focal == 4 && branch_from_genus == inv.deg_branch_locus;
}

nlohmann::json TwoNProfile::to_json() const {
  auto j = inv.to_json();
  j["branch_from_genus"] = std::to_string(branch_from_genus);
  j["expected_nodes"] = std::to_string(expected_nodes);
  j["consistent"] = consistent();
  return j;
}

TwoNProfile two_n_profile(long n) {
  if (n < 2 || n > 7) throw std::invalid_argument("n must lie in [2,7]");
  TwoNProfile p;
  p.inv = invariants(2, n, n - 2);
  p.branch_from_genus = 2 * (2 * p.inv.g - 2) + 2 * (2 + n);
  p.expected_nodes = 18 - n;
  return p;
}

long table1_cube_target(long n) { return (n + 2) * (n + 2) * (n - 1); }

std::vector<AlphaVector> table1_solutions(long n, bool impose_count) {
  if (n < 2 || n > 7) throw std::invalid_argument("n must lie in [2,7]");
  const long target = table1_cube_target(n), count = 18 - n;
  std::vector<AlphaVector> out;
  AlphaVector a{};
  // Fill alpha_6 down to alpha_1; alpha_1 absorbs the remainder.
  auto rec = [&](auto &&self, int i, long rest, long used) -> void {
    if (i == 0) {
      a[0] = rest;
      if (!impose_count || used + rest == count) out.push_back(a);
      return;
    }
    const long cube = static_cast<long>(i + 1) * (i + 1) * (i + 1);
    for (long k = 0; k * cube <= rest; ++k) {
      if (impose_count && used + k > count) break;
      a[static_cast<std::size_t>(i)] = k;
      self(self, i - 1, rest - k * cube, used + k);
    }
    a[static_cast<std::size_t>(i)] = 0;
  };
  rec(rec, 5, target, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AlphaVector> table1_columns(long n) {
  switch (n) {
  case 2: return {{16, 0, 0, 0, 0, 0}};
  case 3: return {{10, 5, 0, 0, 0, 0}};
  case 4: return {{6, 6, 2, 0, 0, 0}};
  case 5: return {{3, 6, 3, 1, 0, 0}};
  case 6: return {{1, 4, 6, 0, 1, 0}, {0, 8, 0, 4, 0, 0}};
  case 7: return {{0, 0, 10, 0, 0, 1}};
  default: throw std::invalid_argument("n must lie in [2,7]");
  }
}

std::string alpha_str(const AlphaVector &a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

nlohmann::json Table1Report::to_json() const {
  auto list = [](const std::vector<AlphaVector> &v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto &x : v) a.push_back(alpha_str(x));
    return a;
  };
  return {{"n", std::to_string(n)},
          {"cube_target", std::to_string(table1_cube_target(n))},
          {"count_target", std::to_string(18 - n)},
          {"solutions_with_count", list(with_count)},
          {"solutions_without_count_total", std::to_string(without_count_total)},
          {"solutions_without_count_first", list(without_count_sample)},
          {"table_columns", list(columns)},
          {"columns_present", columns_present},
          {"extra_solutions", extra_solutions}};
}

Table1Report table1_report(long n) {
  Table1Report r;
  r.n = n;
  r.with_count = table1_solutions(n, true);
  auto all = table1_solutions(n, false);
  r.without_count_total = all.size();
  r.without_count_sample.assign(all.begin(), all.begin() + static_cast<long>(std::min<std::size_t>(all.size(), 20)));
  r.columns = table1_columns(n);
  r.columns_present = std::all_of(r.columns.begin(), r.columns.end(), [&](const AlphaVector &c) {
    return std::find(r.with_count.begin(), r.with_count.end(), c) != r.with_count.end();
  });
  r.extra_solutions = r.with_count.size() > r.columns.size();
  return r;
}

std::string invariant_sweep_csv(long lo, long hi) {
  std::ostringstream os;
  os << "m,n,r,g,deg_focal,deg_l_curve,deg_P_surface,deg_branch_locus\n";
  for (long m = std::max(lo, 2L); m <= hi; ++m)
    for (long n = std::max(lo, 2L); n <= hi; ++n)
      for (long r = 0; r <= (m - 1) * (n - 1); ++r) {
        auto c = invariants(m, n, r);
        os << c.m << ',' << c.n << ',' << c.r << ',' << c.g << ',' << c.deg_focal << ',' << c.deg_l_curve << ','
           << c.deg_P_surface << ',' << c.deg_branch_locus << '\n';
      }
  return os.str();
}

} // namespace nodal::congruence
