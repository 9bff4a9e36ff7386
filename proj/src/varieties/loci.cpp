#include "nodal/varieties/loci.hpp"

#include <map>
#include <stdexcept>

namespace nodal::varieties {

using configs::Duad;
using configs::Perm;
using configs::Syntheme;
using configs::Triple;

QVector segre_node(const Triple &t) {
  QVector v(6);
  for (int i = 1; i <= 6; ++i) v[i - 1] = t.contains(i) ? 1 : -1;
  return v;
}

QVector cardinal_vector(const Triple &t) { return segre_node(t); }

LinearSubspace segre_plane(const Syntheme &s) {
  std::vector<QVector> cols;
  for (const auto &d : s.duads) {
    QVector v(6);
    v[d.a - 1] = 1;
    v[d.b - 1] = -1;
    cols.push_back(v);
  }
  return LinearSubspace::from_span(QMatrix::from_columns(cols, 6));
}

LinearSubspace double_line(const Syntheme &s) {
  // (a,a,b,b,c,c) with a+b+c = 0 in the pairing of s.
  std::vector<QVector> cols;
  for (int k = 1; k <= 2; ++k) {
    QVector v(6);
    for (const auto &i : {s.duads[0].a, s.duads[0].b}) v[i - 1] = 1;
    for (const auto &i : {s.duads[k].a, s.duads[k].b}) v[i - 1] = -1;
    cols.push_back(v);
  }
  return LinearSubspace::from_span(QMatrix::from_columns(cols, 6));
}

QVector line_point(const Duad &d) {
  QVector v(6, Rational(1));
  v[d.a - 1] = -2;
  v[d.b - 1] = -2;
  return v;
}

namespace {

template <class Obj, class Label, class Move, class Name>
std::vector<std::pair<std::string, Obj>> orbit(const Obj &seed, const Label &seed_label, Move move,
                                               Name name) {
  std::map<Obj, std::string> seen;
  for (const Perm &g : configs::symmetric_group()) {
    Obj o = move(coordinate_perm(g.images()), seed);
    std::string l = name(configs::act(g, seed_label));
    auto [it, fresh] = seen.emplace(o, l);
    if (!fresh && it->second != l) throw std::logic_error("orbit labels are not equivariant: " + l);
  }
  std::map<std::string, Obj> by_label;
  for (auto &[o, l] : seen)
    if (!by_label.emplace(l, o).second) throw std::logic_error("two loci share label " + l);
  std::vector<std::pair<std::string, Obj>> out(by_label.begin(), by_label.end());
  return out;
}

auto move_point = [](const std::vector<std::size_t> &p, const ProjectivePoint &x) {
  return ProjectivePoint(permute(x.coords(), p));
};
auto move_space = [](const std::vector<std::size_t> &p, const LinearSubspace &s) { return permute(s, p); };
auto label = [](const auto &x) { return x.str(); };

std::vector<LabeledPoint> points(const std::vector<std::pair<std::string, ProjectivePoint>> &v) {
  std::vector<LabeledPoint> out;
  for (const auto &[l, p] : v) out.push_back({l, p});
  return out;
}

std::vector<LabeledSubspace> spaces(const std::vector<std::pair<std::string, LinearSubspace>> &v) {
  std::vector<LabeledSubspace> out;
  for (const auto &[l, s] : v) out.push_back({l, s});
  return out;
}

} // namespace

SpecialLoci special_loci(Kind kind) {
  SpecialLoci s{kind, {}, {}, {}, {}, {}};
  const Triple t0({1, 2, 3});
  const Syntheme s0(Duad(1, 2), Duad(3, 4), Duad(5, 6));
  const Duad d0(1, 2);
  if (kind == Kind::segre) {
    s.nodes = points(orbit(ProjectivePoint(segre_node(t0)), t0, move_point, label));
    s.planes = spaces(orbit(segre_plane(s0), s0, move_space, label));
  } else {
    s.double_lines = spaces(orbit(double_line(s0), s0, move_space, label));
    s.line_points = points(orbit(ProjectivePoint(line_point(d0)), d0, move_point, label));
    s.cardinal = points(orbit(ProjectivePoint(cardinal_vector(t0)), t0, move_point, label));
  }
  return s;
}

} // namespace nodal::varieties
