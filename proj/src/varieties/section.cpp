#include "nodal/varieties/section.hpp"

#include "nodal/exact/poly_json.hpp"
#include "nodal/varieties/duality.hpp"
#include "nodal/varieties/loci.hpp"

namespace nodal::varieties {

namespace {

const Hypersurface &cr4() {
  static const Hypersurface v = build_variety(Kind::cr);
  return v;
}

QVector to_q(const std::vector<Integer> &c) {
  QVector v;
  for (const auto &x : c) v.emplace_back(x);
  return v;
}

/// Part of c orthogonal to the all-ones vector, scaled by 6.
QVector traceless(const QVector &c) {
  Rational s;
  for (const auto &x : c) s += x;
  QVector t(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) t[i] = Rational(6) * c[i] - s;
  return t;
}

ProjectivePoint to_chart(const QMatrix &chart, const QVector &u) {
  auto a = solve(chart, u);
  if (!a) throw std::logic_error("point is not in the chart span");
  return ProjectivePoint(*a);
}

SectionModel build(const std::vector<Integer> &coeffs, const std::optional<ProjectivePoint> &tangency) {
  if (coeffs.size() != 6) throw std::invalid_argument("hyperplane needs 6 coefficients");
  QVector c = to_q(coeffs), ct = traceless(c);
  if (is_zero(ct))
    throw GenericityFailure("ambient", "hyperplane coefficients are proportional to (1,...,1)");
  for (const auto &t : configs::all_triples())
    if (proportional(ct, cardinal_vector(t)))
      throw GenericityFailure("cardinal", "H is the cardinal hyperplane H(" + t.str() +
                                              "), tangent along a quadric");
  for (const auto &s : configs::all_synthemes()) {
    LinearSubspace l = double_line(s);
    if (is_zero(l.basis().transpose() * c))
      throw GenericityFailure("contains-double-line", "H contains the double line " + s.str());
  }
  for (const auto &d : configs::all_duads())
    if (dot(c, line_point(d)).is_zero())
      throw GenericityFailure("line-intersection-point", "H passes through line-intersection point (" +
                                                             d.str() + ")");

  SectionModel m;
  m.coeffs = coeffs;
  QMatrix eq(2, 6);
  for (std::size_t j = 0; j < 6; ++j) {
    eq(0, j) = 1;
    eq(1, j) = c[j];
  }
  m.chart = integral_nullspace(eq);
  m.quartic3 = substitute_linear(cr4().form(), LinearMap(m.chart));
  Hypersurface x = m.surface();

  auto add_node = [&](std::optional<configs::Syntheme> s, const QVector &u) {
    ProjectivePoint cp = to_chart(m.chart, u);
    auto r = certify_ordinary_node(x, cp);
    const std::string where = s ? "node on line " + s->str() : "tangency point";
    if (auto *f = std::get_if<NodeFailure>(&r))
      throw GenericityFailure("node", where + " is not singular on the section: " + f->what());
    auto &cert = std::get<NodeCertificate>(r);
    if (!cert.is_ordinary)
      throw GenericityFailure("tangency", "H is tangent to CR4 at the " + where + " (Hessian rank " +
                                              std::to_string(cert.hessian_rank) + ")");
    m.nodes.push_back({s, ProjectivePoint(u), cp, std::move(cert)});
  };
  for (const auto &s : configs::all_synthemes()) {
    LinearSubspace l = double_line(s);
    LinearSubspace h = LinearSubspace::from_equations(eq);
    LinearSubspace meet = l.intersect(h);
    if (meet.dim() != 1) throw std::logic_error("double line meets H in a non-point");
    add_node(s, meet.basis().column(0));
  }
  if (tangency) add_node(std::nullopt, tangency->coords());

  for (const auto &t : configs::all_triples()) {
    QVector row = m.chart.transpose() * cardinal_vector(t);
    QMatrix plane = integral_nullspace(QMatrix::from_rows({row}));
    if (plane.cols() != 3) throw std::logic_error("cardinal plane degenerates in the chart");
    MultiPoly r = substitute_linear(m.quartic3, LinearMap(plane));
    auto sq = perfect_square_factor(r);
    if (!sq) throw GenericityFailure("trope", "restriction to cardinal plane " + t.str() + " is not a square");
    TropeRecord tr{t, plane, r, sq->first, sq->second, {}};
    for (std::size_t i = 0; i < m.nodes.size(); ++i) {
      const QVector &a = m.nodes[i].chart_point.coords();
      if (!dot(row, a).is_zero()) continue;
      auto w = solve(plane, a);
      if (w && evaluate(tr.conic, *w).is_zero()) tr.nodes.push_back(i);
    }
    if (tr.nodes.size() != 6)
      throw GenericityFailure("trope", "conic of trope " + t.str() + " passes through " +
                                           std::to_string(tr.nodes.size()) + " nodes");
    m.tropes.push_back(std::move(tr));
  }
  return m;
}

} // namespace

Hypersurface SectionModel::surface() const { return {"X_H", quartic3, QMatrix(0, 4)}; }

configs::IncidenceStructure SectionModel::incidence() const {
  std::vector<std::string> pl, bl;
  for (const auto &n : nodes) pl.push_back(n.label());
  for (const auto &t : tropes) bl.push_back(t.triple.str());
  std::vector<std::vector<bool>> inc(nodes.size(), std::vector<bool>(tropes.size(), false));
  for (std::size_t b = 0; b < tropes.size(); ++b)
    for (auto i : tropes[b].nodes) inc[i][b] = true;
  return {pl, bl, inc};
}

nlohmann::json SectionModel::to_json() const {
  nlohmann::json j;
  std::vector<std::string> cs;
  for (const auto &x : coeffs) cs.push_back(x.get_str());
  j["hyperplane"] = cs;
  j["chart"] = nodal::to_json(chart);
  j["quartic3"] = nodal::to_json(quartic3, default_var_names(4, "t"));
  j["nodes"] = nlohmann::json::array();
  for (const auto &n : nodes)
    j["nodes"].push_back({{"label", n.label()},
                          {"point", nodal::to_json(n.point.integral())},
                          {"chart_point", nodal::to_json(n.chart_point.integral())},
                          {"hessian_rank", n.certificate.hessian_rank},
                          {"ordinary", n.certificate.is_ordinary}});
  j["tropes"] = nlohmann::json::array();
  for (const auto &t : tropes) {
    std::vector<std::string> incident;
    for (auto i : t.nodes) incident.push_back(nodes[i].label());
    j["tropes"].push_back({{"label", t.triple.str()},
                           {"scale", t.scale.str()},
                           {"conic", nodal::to_json(t.conic, default_var_names(3, "s"))},
                           {"nodes", incident}});
  }
  return j;
}

SectionModel hyperplane_section(const std::vector<Integer> &coeffs) { return build(coeffs, std::nullopt); }

SectionModel tangent_section(const ProjectivePoint &q) {
  const QVector &u = q.coords();
  if (u.size() != 6 || !cr4().in_ambient(u) || !evaluate(cr4().form(), u).is_zero())
    throw NotOnVariety("tangent_section: point not on CR4: " + q.str());
  QVector g = gradient_at(cr4().form(), u);
  QVector gt = traceless(g);
  if (is_zero(gt)) throw SingularPoint("tangent_section: point is singular on CR4: " + q.str());
  QVector c = primitive(gt);
  std::vector<Integer> coeffs;
  for (const auto &x : c) coeffs.push_back(x.num());
  return build(coeffs, q);
}

SectionModel sampled_tangent_section(std::uint64_t seed, long max_height) {
  for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
    auto zs = sample_segre_points(1, seed + attempt * 0x9e3779b97f4a7c15ULL, max_height);
    try {
      return tangent_section(duality_image(zs.front()).image);
    } catch (const GenericityFailure &) {
    } catch (const SingularPoint &) {
    }
  }
  throw std::runtime_error("no certifiable tangent section found for this seed");
}

} // namespace nodal::varieties
