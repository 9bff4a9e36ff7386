#include "nodal/configs/incidence.hpp"
#include "nodal/exact/poly_json.hpp"
#include "nodal/varieties/duality.hpp"
#include "nodal/varieties/fp_scan.hpp"
#include "nodal/varieties/loci.hpp"
#include "nodal/varieties/section.hpp"

#include <doctest.h>

#include <set>

using namespace nodal;
using namespace nodal::varieties;
using configs::Duad;
using configs::Syntheme;
using configs::Triple;

namespace {

QVector ints(std::initializer_list<long> xs) {
  QVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::vector<Integer> reference_coeffs() { return {1, 2, 3, 5, 7, 11}; }

const SectionModel &reference_section() {
  static const SectionModel m = hyperplane_section(reference_coeffs());
  return m;
}

} // namespace

TEST_CASE("model equations") {
  auto s3 = build_variety(Kind::segre);
  auto cr = build_variety(Kind::cr);
  CHECK(s3.projective_dim() == 4);
  CHECK(cr.projective_dim() == 4);
  CHECK(evaluate(s3.form(), ints({1, 1, 1, -1, -1, -1})) == 0);
  CHECK(s3.in_ambient(ints({1, 1, 1, -1, -1, -1})));
  CHECK(evaluate(cr.form(), ints({2, 2, -1, -1, -1, -1})) == 0);
  for (const auto &g : configs::symmetric_group()) {
    auto p = coordinate_perm(g.images());
    CHECK(permute_variables(s3.form(), p) == s3.form());
    CHECK(permute_variables(cr.form(), p) == cr.form());
  }
}

TEST_CASE("special loci orbits") {
  auto s = special_loci(Kind::segre);
  auto c = special_loci(Kind::cr);
  CHECK(s.nodes.size() == 10);
  CHECK(s.planes.size() == 15);
  CHECK(c.double_lines.size() == 15);
  CHECK(c.line_points.size() == 15);
  CHECK(c.cardinal.size() == 10);
  auto cr = build_variety(Kind::cr);
  for (const auto &lp : c.line_points) {
    CHECK(evaluate(cr.form(), lp.point.coords()) == 0);
    CHECK(cr.in_ambient(lp.point.coords()));
  }
}

TEST_CASE("line-intersection point of duad 12") {
  const Duad d(1, 2);
  std::optional<LinearSubspace> meet;
  int through = 0;
  for (const auto &s : configs::all_synthemes()) {
    if (!s.contains(d)) continue;
    ++through;
    meet = meet ? meet->intersect(double_line(s)) : double_line(s);
  }
  CHECK(through == 3);
  REQUIRE(meet->dim() == 1);
  CHECK(ProjectivePoint(meet->basis().column(0)) == ProjectivePoint(ints({-2, -2, 1, 1, 1, 1})));
  CHECK(ProjectivePoint(line_point(d)) == ProjectivePoint(ints({-2, -2, 1, 1, 1, 1})));
  // The printed variant violates the ambient relation.
  CHECK_FALSE(build_variety(Kind::cr).in_ambient(ints({-2, 2, 1, 1, 1, 1})));
}

TEST_CASE("double lines meet iff their synthemes share a duad") {
  auto c = special_loci(Kind::cr);
  for (const auto &a : c.double_lines)
    for (const auto &b : c.double_lines) {
      if (a.label == b.label) continue;
      Syntheme sa = configs::all_synthemes()[0], sb = sa;
      for (const auto &s : configs::all_synthemes()) {
        if (s.str() == a.label) sa = s;
        if (s.str() == b.label) sb = s;
      }
      bool share = false;
      for (const auto &d : sa.duads) share = share || sb.contains(d);
      CHECK((a.space.intersect(b.space).dim() == 1) == share);
    }
}

TEST_CASE("special loci are S6-stable") {
  auto s = special_loci(Kind::segre);
  auto c = special_loci(Kind::cr);
  auto point_set = [](const std::vector<LabeledPoint> &v) {
    std::set<ProjectivePoint> out;
    for (const auto &x : v) out.insert(x.point);
    return out;
  };
  auto space_set = [](const std::vector<LabeledSubspace> &v) {
    std::set<LinearSubspace> out;
    for (const auto &x : v) out.insert(x.space);
    return out;
  };
  const auto nodes = point_set(s.nodes), lpts = point_set(c.line_points), card = point_set(c.cardinal);
  const auto planes = space_set(s.planes), lines = space_set(c.double_lines);
  for (const auto &g : configs::symmetric_group()) {
    auto p = coordinate_perm(g.images());
    auto moved_pts = [&](const std::set<ProjectivePoint> &x) {
      std::set<ProjectivePoint> y;
      for (const auto &q : x) y.insert(ProjectivePoint(permute(q.coords(), p)));
      return y == x;
    };
    auto moved_spaces = [&](const std::set<LinearSubspace> &x) {
      std::set<LinearSubspace> y;
      for (const auto &q : x) y.insert(permute(q, p));
      return y == x;
    };
    CHECK(moved_pts(nodes));
    CHECK(moved_pts(lpts));
    CHECK(moved_pts(card));
    CHECK(moved_spaces(planes));
    CHECK(moved_spaces(lines));
  }
}

TEST_CASE("node certification") {
  auto s3 = build_variety(Kind::segre);
  auto r = certify_ordinary_node(s3, ProjectivePoint(ints({1, 1, 1, -1, -1, -1})));
  REQUIRE(std::holds_alternative<NodeCertificate>(r));
  const auto &c = std::get<NodeCertificate>(r);
  CHECK(c.hessian_rank == 4);
  CHECK(c.is_ordinary);
  CHECK(revalidate(s3, c).ok);
  auto smooth = certify_ordinary_node(s3, ProjectivePoint(ints({1, -1, 0, 0, 0, 0})));
  REQUIRE(std::holds_alternative<NodeFailure>(smooth));
  CHECK(std::get<NodeFailure>(smooth).reason == NodeFailure::Reason::smooth);
  auto off = certify_ordinary_node(s3, ProjectivePoint(ints({1, 2, -3, 0, 0, 0})));
  REQUIRE(std::holds_alternative<NodeFailure>(off));
  CHECK(std::get<NodeFailure>(off).reason == NodeFailure::Reason::not_on_variety);
  CHECK_THROWS_AS(certify_ordinary_node(s3, ProjectivePoint(ints({1, 0, 0, 0, 0, 0}))), std::invalid_argument);
  for (const auto &n : special_loci(Kind::segre).nodes) {
    auto rn = certify_ordinary_node(s3, n.point);
    REQUIRE(std::holds_alternative<NodeCertificate>(rn));
    CHECK(std::get<NodeCertificate>(rn).hessian_rank == 4);
    CHECK(revalidate(s3, std::get<NodeCertificate>(rn)).ok);
  }
}

TEST_CASE("double lines of CR4") {
  auto cr = build_variety(Kind::cr);
  for (const auto &l : special_loci(Kind::cr).double_lines) CHECK(verify_double_line(cr, l.space).holds());
  auto zs = sample_segre_points(2, 99, 50);
  QVector a = duality_image(zs[0]).image.coords(), b = duality_image(zs[1]).image.coords();
  auto generic = LinearSubspace::from_span(QMatrix::from_columns({a, b}, 6));
  CHECK_FALSE(verify_double_line(cr, generic).holds());
  auto off = LinearSubspace::from_span(QMatrix::from_columns({ints({1, 0, 0, 0, 0, 0}), a}, 6));
  CHECK_THROWS(verify_double_line(cr, off));
}

TEST_CASE("duality map") {
  auto d = duality_image(ProjectivePoint(ints({1, -1, 0, 0, 0, 0})));
  CHECK(d.image == ProjectivePoint(ints({2, 2, -1, -1, -1, -1})));
  CHECK(d.on_cr());
  CHECK_THROWS_AS(duality_image(ProjectivePoint(ints({1, 1, 1, -1, -1, -1}))), SingularPoint);
  CHECK_THROWS_AS(duality_image(ProjectivePoint(ints({1, 2, -3, 0, 0, 0}))), NotOnVariety);
  auto zs = sample_segre_points(200, 7, 50);
  CHECK(zs.size() == 200);
  CHECK(std::set<ProjectivePoint>(zs.begin(), zs.end()).size() == 200);
  for (const auto &z : zs) CHECK(duality_image(z).cr_value == 0);
  // Same seed, same points.
  CHECK(sample_segre_points(5, 7, 50) == std::vector<ProjectivePoint>(zs.begin(), zs.begin() + 5));
}

TEST_CASE("planes map onto the syntheme lines") {
  auto s = special_loci(Kind::segre);
  auto c = special_loci(Kind::cr);
  for (const auto &pl : s.planes) {
    const LinearSubspace *line = nullptr;
    for (const auto &l : c.double_lines)
      if (l.label == pl.label) line = &l.space;
    REQUIRE(line);
    std::set<ProjectivePoint> images;
    for (auto [x, y, z] : {std::array<long, 3>{1, 2, 5}, {3, -1, 4}, {2, 7, -3}, {1, 0, 2}}) {
      QVector v = pl.space.basis() * ints({x, y, z});
      auto img = duality_image(ProjectivePoint(v)).image;
      CHECK(line->contains(img.coords()));
      images.insert(img);
    }
    CHECK(images.size() >= 2);
  }
}

TEST_CASE("nodes are dual to cardinal hyperplanes") {
  auto s = special_loci(Kind::segre);
  auto c = special_loci(Kind::cr);
  for (const auto &n : s.nodes) {
    bool found = false;
    for (const auto &h : c.cardinal)
      if (h.label == n.label) found = (h.point == n.point);
    CHECK(found);
  }
}

TEST_CASE("cardinal restrictions are squares") {
  for (const auto &t : configs::all_triples()) {
    auto r = cardinal_restriction(t);
    CHECK(r.scale * r.root * r.root == r.restricted);
    auto q = substitute_linear(cardinal_quadric(t), LinearMap(r.chart));
    CHECK(scale_factor(q, r.root));
  }
  auto cr = build_variety(Kind::cr);
  QMatrix eq{{1, 1, 1, 1, 1, 1}, {1, 2, 3, 5, 7, 11}};
  auto chart = integral_nullspace(eq);
  CHECK_FALSE(perfect_square_factor(substitute_linear(cr.form(), LinearMap(chart))));
}

TEST_CASE("reference hyperplane section") {
  const auto &m = reference_section();
  REQUIRE(m.nodes.size() == 15);
  auto x = m.surface();
  for (const auto &n : m.nodes) {
    CHECK(n.certificate.hessian_rank == 3);
    CHECK(n.certificate.is_ordinary);
    CHECK(revalidate(x, n.certificate).ok);
    CHECK(double_line(*n.line).contains(n.point.coords()));
    CHECK(dot(QVector{1, 2, 3, 5, 7, 11}, n.point.coords()) == 0);
  }
  REQUIRE(m.tropes.size() == 10);
  for (const auto &t : m.tropes) {
    CHECK(t.nodes.size() == 6);
    CHECK(t.scale * t.conic * t.conic == t.restricted);
    for (std::size_t i = 0; i < m.nodes.size(); ++i) {
      bool on = std::find(t.nodes.begin(), t.nodes.end(), i) != t.nodes.end();
      CHECK(on == configs::trope_contains(t.triple, *m.nodes[i].line));
    }
  }
  auto inc = m.incidence();
  REQUIRE(inc.type());
  CHECK(inc.type()->str() == "(15_4,10_6)");
  auto iso = configs::incidence_isomorphic(inc, configs::trope_incidence_model());
  REQUIRE(iso);
  CHECK(configs::check_relabeling(inc, configs::trope_incidence_model(), *iso));
  auto j = m.to_json();
  CHECK(j["nodes"].size() == 15);
  CHECK(j["tropes"].size() == 10);
  CHECK(poly_from_json(j["quartic3"]) == m.quartic3);
}

TEST_CASE("genericity failures are named") {
  auto cond = [](std::vector<Integer> c) {
    try {
      hyperplane_section(c);
    } catch (const GenericityFailure &e) {
      return e.condition();
    }
    return std::string("none");
  };
  CHECK(cond({1, 1, 1, -1, -1, -1}) == "cardinal");
  CHECK(cond({3, 3, 3, 1, 1, 1}) == "cardinal");
  CHECK(cond({2, 2, 2, 2, 2, 2}) == "ambient");
  CHECK(cond({1, -1, 0, 0, 0, 0}) == "contains-double-line");
  CHECK(cond({1, 0, 2, 0, 0, 0}) == "line-intersection-point");
  CHECK(cond({1, 2, 3, 5, 7, 11}) == "none");
}

TEST_CASE("tangent section has sixteen nodes") {
  auto m = sampled_tangent_section(2024, 50);
  REQUIRE(m.nodes.size() == 16);
  CHECK_FALSE(m.nodes.back().line);
  auto x = m.surface();
  for (const auto &n : m.nodes) {
    CHECK(n.certificate.is_ordinary);
    CHECK(revalidate(x, n.certificate).ok);
  }
  // The sixteenth node is the point of tangency.
  QVector u = m.chart * m.nodes.back().chart_point.coords();
  CHECK(ProjectivePoint(u) == m.nodes.back().point);
  CHECK_THROWS_AS(tangent_section(ProjectivePoint(line_point(Duad(1, 2)))), SingularPoint);
  auto on_line = double_line(Syntheme(Duad(1, 2), Duad(3, 4), Duad(5, 6))).basis() * ints({2, 5});
  CHECK_THROWS_AS(tangent_section(ProjectivePoint(on_line)), SingularPoint);
  CHECK_THROWS_AS(tangent_section(ProjectivePoint(ints({1, -1, 0, 0, 0, 0}))), NotOnVariety);
}

TEST_CASE("F_p scans") {
  auto s3 = build_variety(Kind::segre);
  auto cr = build_variety(Kind::cr);
  auto nodes = special_loci(Kind::segre).nodes;
  for (std::uint32_t p : {7u, 11u, 13u}) {
    auto r = singular_scan_fp(s3, p);
    std::set<FpPoint> expect;
    for (const auto &n : nodes) expect.insert(reduce_point(n.point, p));
    CHECK(r.points.size() == 10);
    CHECK(std::set<FpPoint>(r.points.begin(), r.points.end()) == expect);
  }
  {
    const std::uint32_t p = 7;
    auto r = singular_scan_fp(cr, p);
    std::set<FpPoint> lines;
    for (const auto &l : special_loci(Kind::cr).double_lines) {
      QVector b0 = l.space.basis().column(0), b1 = l.space.basis().column(1);
      for (long s = 0; s <= static_cast<long>(p); ++s) {
        QVector v(6);
        for (std::size_t i = 0; i < 6; ++i)
          v[i] = s == static_cast<long>(p) ? b1[i] : b0[i] + Rational(s) * b1[i];
        FpPoint x;
        for (auto &c : v) x.push_back(reduce_mod(c, p));
        bool zero = std::all_of(x.begin(), x.end(), [](auto c) { return c == 0; });
        if (!zero) lines.insert(reduce_point(ProjectivePoint(v), p));
      }
    }
    CHECK(lines.size() == 90);
    CHECK(r.points.size() == 90);
    CHECK(std::set<FpPoint>(r.points.begin(), r.points.end()) == lines);
  }
  // Every prime below 23 puts the reference hyperplane through a line-intersection point.
  const auto &m = reference_section();
  {
    auto r = singular_scan_fp(m, 23);
    std::set<FpPoint> expect;
    for (const auto &n : m.nodes) expect.insert(reduce_point(n.chart_point, 23));
    CHECK(r.points.size() == 15);
    CHECK(std::set<FpPoint>(r.points.begin(), r.points.end()) == expect);
    CHECK_THROWS_AS(singular_scan_fp(m, 11), BadPrime);
    CHECK(singular_scan_fp(m.surface(), 11).points.size() == 13);
  }
  auto good = hyperplane_section({10, 1, 0, 14, -13, 3});
  for (std::uint32_t p : {7u, 11u, 13u}) {
    auto r = singular_scan_fp(good, p);
    std::set<FpPoint> expect;
    for (const auto &n : good.nodes) expect.insert(reduce_point(n.chart_point, p));
    CHECK(r.points.size() == 15);
    CHECK(std::set<FpPoint>(r.points.begin(), r.points.end()) == expect);
  }
  CHECK_THROWS_AS(singular_scan_fp(s3, 3), BadPrime);
  CHECK_THROWS_AS(singular_scan_fp(s3, 9), BadPrime);
}

TEST_CASE("scan kernels agree") {
  auto cr = build_variety(Kind::cr);
  auto a = singular_scan_fp(cr, 11, simd::Kernel::scalar);
  auto b = singular_scan_fp(cr, 11);
  CHECK(a.points == b.points);
  CHECK(a.scanned == b.scanned);
  CHECK(a.scanned == (11 * 11 * 11 * 11 * 11 - 1) / 10);
}
