#include "nodal/varieties/fp_scan.hpp"

#include <algorithm>
#include <set>

namespace nodal::varieties {

namespace {

using Row = std::vector<std::uint64_t>;

void canonicalize(FpPoint &x, std::uint32_t p) {
  auto it = std::find_if(x.begin(), x.end(), [](std::uint32_t c) { return c != 0; });
  if (it == x.end()) throw BadPrime("point reduces to zero modulo " + std::to_string(p));
  std::uint64_t inv = inv_mod(*it, p);
  for (auto &c : x) c = static_cast<std::uint32_t>(c * inv % p);
}

/// Kernel basis of an integer matrix over F_p, and its rank.
std::pair<std::vector<Row>, std::size_t> kernel_mod(std::vector<Row> a, std::size_t n, std::uint64_t p) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < a.size(); ++c) {
    std::size_t q = r;
    while (q < a.size() && a[q][c] == 0) ++q;
    if (q == a.size()) continue;
    std::swap(a[q], a[r]);
    std::uint64_t inv = inv_mod(static_cast<std::uint32_t>(a[r][c]), static_cast<std::uint32_t>(p));
    for (auto &x : a[r]) x = x * inv % p;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      std::uint64_t f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) a[i][j] = (a[i][j] + (p - f) * a[r][j]) % p;
    }
    piv.push_back(c);
    ++r;
  }
  std::vector<Row> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (std::find(piv.begin(), piv.end(), f) != piv.end()) continue;
    Row v(n, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = (p - a[i][f]) % p;
    basis.push_back(v);
  }
  return {basis, r};
}

Row reduce_row(const QVector &v, std::uint32_t p) {
  Row r;
  for (const auto &x : v) r.push_back(reduce_mod(x, p));
  return r;
}

void check_prime(std::uint32_t p) {
  if (p < 5) throw BadPrime("scan prime must be at least 5");
  if (!is_prime(p)) throw BadPrime(std::to_string(p) + " is not prime");
  if (p >= (1u << 16)) throw BadPrime("scan prime must be below 65536");
}

/// Singular points of G(a) on P^{k-1}(F_p): G and all its partials vanish.
ScanResult scan_form(const MultiPoly &g, std::uint32_t p, simd::Kernel kernel) {
  const std::size_t k = g.num_vars();
  std::vector<simd::PackedPoly> polys{simd::PackedPoly(mod_p(g, p))};
  for (std::size_t j = 0; j < k; ++j) polys.emplace_back(mod_p(partial(g, j), p));

  ScanResult res{p, 0, kernel, {}};
  constexpr std::size_t batch = 1024;
  simd::PointBatch pts{k, 0, {}};
  std::vector<FpPoint> pending;
  std::vector<std::uint64_t> val;
  std::vector<bool> alive;

  auto flush = [&] {
    if (pending.empty()) return;
    const std::size_t m = pending.size();
    pts.count = m;
    pts.coords.assign(k * m, 0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t v = 0; v < k; ++v) pts.coords[v * m + i] = pending[i][v];
    alive.assign(m, true);
    val.resize(m);
    for (const auto &f : polys) {
      simd::eval_batch(f, pts, val, kernel);
      for (std::size_t i = 0; i < m; ++i) alive[i] = alive[i] && val[i] == 0;
    }
    for (std::size_t i = 0; i < m; ++i)
      if (alive[i]) res.points.push_back(pending[i]);
    res.scanned += m;
    pending.clear();
  };

  for (std::size_t lead = 0; lead < k; ++lead) {
    const std::size_t free = k - lead - 1;
    FpPoint x(k, 0);
    x[lead] = 1;
    std::vector<std::uint32_t> digits(free, 0);
    for (;;) {
      for (std::size_t i = 0; i < free; ++i) x[lead + 1 + i] = digits[i];
      pending.push_back(x);
      if (pending.size() == batch) flush();
      std::size_t i = 0;
      while (i < free && ++digits[i] == p) digits[i++] = 0;
      if (i == free) break;
    }
  }
  flush();
  return res;
}

} // namespace

FpPoint reduce_point(const ProjectivePoint &x, std::uint32_t p) {
  FpPoint r;
  for (const auto &c : x.integral()) r.push_back(reduce_mod(c, p));
  canonicalize(r, p);
  return r;
}

ScanResult singular_scan_fp(const Hypersurface &v, std::uint32_t p, std::optional<simd::Kernel> kernel) {
  check_prime(p);
  const std::size_t n = v.num_vars();
  std::vector<Row> rows;
  for (std::size_t i = 0; i < v.constraints().rows(); ++i) rows.push_back(reduce_row(primitive(v.constraints().row(i)), p));
  auto [basis, r] = kernel_mod(rows, n, p);
  if (r != v.constraints().rows()) throw BadPrime("constraints drop rank modulo " + std::to_string(p));
  // G(a) = F(sum a_j b_j) with the basis lifted to integers; reduction commutes with substitution.
  QMatrix lift(n, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) lift(i, j) = static_cast<long>(basis[j][i]);
  MultiPoly g = substitute_linear(v.form(), LinearMap(lift));
  ScanResult res = scan_form(g, p, kernel.value_or(simd::best_kernel()));
  std::set<FpPoint> amb;
  for (const auto &a : res.points) {
    FpPoint u(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t s = 0;
      for (std::size_t j = 0; j < a.size(); ++j) s = (s + std::uint64_t{a[j]} * basis[j][i]) % p;
      u[i] = static_cast<std::uint32_t>(s);
    }
    canonicalize(u, p);
    amb.insert(u);
  }
  res.points.assign(amb.begin(), amb.end());
  return res;
}

ScanResult singular_scan_fp(const SectionModel &m, std::uint32_t p, std::optional<simd::Kernel> kernel) {
  check_prime(p);
  std::vector<Row> cols;
  for (std::size_t j = 0; j < m.chart.cols(); ++j) cols.push_back(reduce_row(m.chart.column(j), p));
  if (kernel_mod(cols, m.chart.rows(), p).second != m.chart.cols())
    throw BadPrime("chart drops rank modulo " + std::to_string(p));
  std::set<FpPoint> reduced;
  for (const auto &node : m.nodes) reduced.insert(reduce_point(node.chart_point, p));
  if (reduced.size() != m.nodes.size())
    throw BadPrime("certified nodes collide modulo " + std::to_string(p));
  ScanResult res = scan_form(m.quartic3, p, kernel.value_or(simd::best_kernel()));
  std::sort(res.points.begin(), res.points.end());
  return res;
}

} // namespace nodal::varieties
