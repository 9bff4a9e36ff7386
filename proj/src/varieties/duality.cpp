#include "nodal/varieties/duality.hpp"

#include "nodal/varieties/loci.hpp"

#include <set>

namespace nodal::varieties {

DualityResult duality_image(const ProjectivePoint &z) {
  static const Hypersurface s3 = build_variety(Kind::segre);
  static const Hypersurface cr = build_variety(Kind::cr);
  const QVector &x = z.coords();
  if (x.size() != 6) throw std::invalid_argument("duality_image: need 6 coordinates");
  if (!s3.in_ambient(x) || !evaluate(s3.form(), x).is_zero())
    throw NotOnVariety("duality_image: point not on S3: " + z.str());
  Rational mean;
  QVector y(6);
  for (std::size_t i = 0; i < 6; ++i) {
    y[i] = x[i] * x[i];
    mean += y[i];
  }
  mean /= Rational(6);
  for (auto &c : y) c -= mean;
  if (is_zero(y)) throw SingularPoint("duality_image: node of S3, image undefined: " + z.str());
  ProjectivePoint img(y);
  return {img, evaluate(cr.form(), img.coords())};
}

long Draw::operator()(long lo, long hi) {
  // Rejection keeps the draw uniform and identical on every platform.
  auto range = static_cast<std::uint64_t>(hi - lo) + 1;
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % range, r;
  do r = gen_();
  while (r >= limit);
  return lo + static_cast<long>(r % range);
}

std::vector<ProjectivePoint> sample_segre_points(std::size_t count, std::uint64_t seed, long max_height) {
  const auto &triples = configs::all_triples();
  std::set<ProjectivePoint> nodes;
  for (const auto &t : triples) nodes.insert(ProjectivePoint(segre_node(t)));
  Draw draw(seed);
  std::set<ProjectivePoint> seen;
  std::vector<ProjectivePoint> out;
  long height = 1;
  std::size_t misses = 0;
  while (out.size() < count) {
    if (misses > 50) {
      if (height >= max_height) throw std::runtime_error("sample_segre_points: height bound exhausted");
      ++height;
      misses = 0;
    }
    QVector p = segre_node(triples[static_cast<std::size_t>(draw(0, 9))]);
    QVector v(6);
    Rational sum;
    for (std::size_t i = 0; i < 5; ++i) {
      v[i] = draw(-height, height);
      sum += v[i];
    }
    v[5] = -sum;
    Rational fv, pv2;
    for (std::size_t i = 0; i < 6; ++i) {
      fv += v[i] * v[i] * v[i];
      pv2 += p[i] * v[i] * v[i];
    }
    QVector z(6);
    for (std::size_t i = 0; i < 6; ++i) z[i] = fv * p[i] - Rational(3) * pv2 * v[i];
    if (fv.is_zero() || is_zero(z)) {
      ++misses;
      continue;
    }
    ProjectivePoint zp(z);
    if (nodes.count(zp) || !seen.insert(zp).second) {
      ++misses;
      continue;
    }
    out.push_back(zp);
  }
  return out;
}

MultiPoly cardinal_quadric(const configs::Triple &t) {
  auto comp = t.complement();
  auto u = [](int i) { return MultiPoly::variable(6, static_cast<std::size_t>(i - 1)); };
  const auto &a = t.elems;
  return u(a[0]) * u(a[1]) + u(a[0]) * u(a[2]) + u(a[1]) * u(a[2]) - u(comp[0]) * u(comp[1]) -
         u(comp[0]) * u(comp[2]) - u(comp[1]) * u(comp[2]);
}

CardinalRestriction cardinal_restriction(const configs::Triple &t) {
  static const Hypersurface cr = build_variety(Kind::cr);
  QMatrix eq(2, 6);
  QVector h = cardinal_vector(t);
  for (std::size_t j = 0; j < 6; ++j) {
    eq(0, j) = 1;
    eq(1, j) = h[j];
  }
  QMatrix chart = integral_nullspace(eq);
  MultiPoly r = substitute_linear(cr.form(), LinearMap(chart));
  auto sq = perfect_square_factor(r);
  if (!sq) throw std::runtime_error("cardinal restriction is not a square for " + t.str());
  return {t, chart, r, sq->first, sq->second};
}

} // namespace nodal::varieties
