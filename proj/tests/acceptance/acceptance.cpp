// One line per acceptance criterion; exit status 1 if any criterion fails.
#include "nodal/congruence/congruence.hpp"
#include "nodal/configs/incidence.hpp"
#include "nodal/exact/modpoly.hpp"
#include "nodal/involutions/involutions.hpp"
#include "nodal/lattice/lattice.hpp"
#include "nodal/pentads/pentads.hpp"
#include "nodal/surface/code.hpp"
#include "nodal/surface/kummer.hpp"
#include "nodal/surface/picard.hpp"
#include "nodal/varieties/duality.hpp"
#include "nodal/varieties/fp_scan.hpp"
#include "nodal/varieties/loci.hpp"
#include "nodal/varieties/section.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace nodal;
using namespace nodal::varieties;
using configs::Duad;
using configs::Triple;

namespace {

constexpr std::uint64_t kSeed = 7;

struct Outcome {
  bool pass = true;
  std::ostringstream why;
  void require(bool ok, const std::string &what) {
    if (!ok) {
      pass = false;
      why << " [" << what << "]";
    }
  }
};

// Oracles below work on plain modular or rational arithmetic and use no library routine
// beyond the number types.

long mod(long x, long p) { return ((x % p) + p) % p; }

// Projective points of P^5(F_p) with coordinate sum 0, first nonzero coordinate 1.
std::vector<std::array<long, 6>> sum_zero_points(long p) {
  std::vector<std::array<long, 6>> out;
  std::array<long, 6> u{};
  long total = 1;
  for (int i = 0; i < 5; ++i) total *= p;
  for (long code = 1; code < total; ++code) {
    long c = code;
    for (int i = 0; i < 5; ++i) u[i] = c % p, c /= p;
    auto first = std::find_if(u.begin(), u.begin() + 5, [](long x) { return x != 0; });
    if (*first != 1) continue;
    long s = 0;
    for (int i = 0; i < 5; ++i) s += u[i];
    u[5] = mod(-s, p);
    out.push_back(u);
  }
  return out;
}

// Gradient proportional to (1,...,1) modulo p, including zero.
bool constant_vector(const std::array<long, 6> &g, long p) {
  for (int i = 1; i < 6; ++i)
    if (mod(g[i] - g[0], p)) return false;
  return true;
}

std::size_t oracle_segre_scan(long p) {
  std::size_t n = 0;
  for (const auto &z : sum_zero_points(p)) {
    long f = 0;
    std::array<long, 6> g{};
    for (int i = 0; i < 6; ++i) f += z[i] * z[i] % p * z[i], g[i] = 3 * z[i] * z[i];
    n += mod(f, p) == 0 && constant_vector(g, p);
  }
  return n;
}

long cr_value_mod(const std::array<long, 6> &u, long p, std::array<long, 6> *grad) {
  long s2 = 0, s4 = 0;
  for (long x : u) s2 = mod(s2 + x * x, p), s4 = mod(s4 + x * x % p * x % p * x, p);
  if (grad)
    for (int i = 0; i < 6; ++i) (*grad)[i] = mod(16 * (u[i] * u[i] % p * u[i]) - 4 * s2 * u[i], p);
  return mod(4 * s4 - s2 * s2, p);
}

std::size_t oracle_cr_scan(long p) {
  std::size_t n = 0;
  for (const auto &u : sum_zero_points(p)) {
    std::array<long, 6> g{};
    n += cr_value_mod(u, p, &g) == 0 && constant_vector(g, p);
  }
  return n;
}

// Singular points of CR4 cut by the hyperplane c: gradient in span of (1..1) and c.
std::size_t oracle_section_scan(const std::array<long, 6> &c, long p) {
  std::size_t n = 0;
  for (const auto &u : sum_zero_points(p)) {
    long h = 0;
    for (int i = 0; i < 6; ++i) h += c[i] * u[i];
    if (mod(h, p)) continue;
    std::array<long, 6> g{};
    if (cr_value_mod(u, p, &g)) continue;
    // rank of {g, 1, c} at most 2 modulo p: all 3x3 minors vanish.
    bool dependent = true;
    for (int i = 0; i < 6 && dependent; ++i)
      for (int j = i + 1; j < 6 && dependent; ++j)
        for (int k = j + 1; k < 6 && dependent; ++k) {
          long m = g[i] * (c[k] - c[j]) - g[j] * (c[k] - c[i]) + g[k] * (c[j] - c[i]);
          dependent = mod(m, p) == 0;
        }
    n += dependent;
  }
  return n;
}

Rational cr_form(const QVector &u) {
  Rational s2, s4;
  for (const auto &x : u) s2 += x * x, s4 += x * x * x * x;
  return Rational(4) * s4 - s2 * s2;
}

Rational sum(const QVector &u) {
  Rational s;
  for (const auto &x : u) s += x;
  return s;
}

Rational cube_sum(const QVector &u) {
  Rational s;
  for (const auto &x : u) s += x * x * x;
  return s;
}

QVector ints(std::initializer_list<long> xs) {
  QVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Divisor pairing on (eta, E12..E56) with Gram diag(4, -2, ..., -2).
Rational pair_NQ(const surface::DivisorClass &a, const surface::DivisorClass &b) {
  Rational s = Rational(4) * a[0] * b[0];
  for (std::size_t i = 1; i < surface::kRank; ++i) s -= Rational(2) * a[i] * b[i];
  return s;
}

lattice::ZMatrix zmul(const lattice::ZMatrix &a, const lattice::ZMatrix &b) {
  lattice::ZMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k) c(i, j) += a(i, k) * b(k, j);
  return c;
}

lattice::ZMatrix ztranspose(const lattice::ZMatrix &a) {
  lattice::ZMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

bool is_identity(const lattice::ZMatrix &a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

std::size_t fixed_rank(const lattice::ZMatrix &a) {
  QMatrix d(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) d(i, j) = Rational(Integer(a(i, j) - (i == j ? 1 : 0)));
  return a.rows() - rank(d);
}

// Independent involution check: M^T G M = G, M^2 = I.
bool oracle_involution(const lattice::ZMatrix &g, const lattice::ZMatrix &m) {
  return zmul(zmul(ztranspose(m), g), m) == g && is_identity(zmul(m, m));
}

const surface::PicardModel &pic() {
  static const surface::PicardModel m = surface::picard_lattice();
  return m;
}

const pentads::Classification &classes() {
  static const pentads::Classification c = pentads::classify_all();
  return c;
}

void c1(Outcome &o) {
  auto s3 = build_variety(Kind::segre);
  std::set<ProjectivePoint> expect;
  std::array<long, 6> v{1, 1, 1, -1, -1, -1};
  std::sort(v.begin(), v.end());
  do expect.insert(ProjectivePoint(ints({v[0], v[1], v[2], v[3], v[4], v[5]})));
  while (std::next_permutation(v.begin(), v.end()));
  auto nodes = special_loci(Kind::segre).nodes;
  std::set<ProjectivePoint> got;
  std::size_t certified = 0;
  for (const auto &n : nodes) {
    got.insert(n.point);
    auto r = certify_ordinary_node(s3, n.point);
    if (auto *c = std::get_if<NodeCertificate>(&r))
      certified += c->is_ordinary && c->hessian_rank == 4 && revalidate(s3, *c).ok;
    o.require(sum(n.point.coords()) == 0 && cube_sum(n.point.coords()) == 0, "node off S3");
  }
  o.require(expect.size() == 10 && got == expect, "node set is not the orbit of (1,1,1,-1,-1,-1)");
  o.require(certified == 10, "certified " + std::to_string(certified));
  auto scan = singular_scan_fp(s3, 11).points.size();
  auto oracle = oracle_segre_scan(11);
  o.require(scan == 10 && oracle == 10, "F_11 scan " + std::to_string(scan) + ", oracle " + std::to_string(oracle));
  o.why << " nodes " << certified << "/10, F_11 scan " << scan << " (oracle " << oracle << ")";
}

void c2(Outcome &o) {
  auto cr = build_variety(Kind::cr);
  std::size_t lines = 0;
  for (const auto &l : special_loci(Kind::cr).double_lines) lines += verify_double_line(cr, l.space).holds();
  auto scan = singular_scan_fp(cr, 7).points.size();
  auto oracle = oracle_cr_scan(7);
  o.require(lines == 15, "double lines " + std::to_string(lines));
  o.require(scan == 90 && oracle == 90, "F_7 scan");
  o.why << " double lines " << lines << "/15, F_7 scan " << scan << " (oracle " << oracle << ", 15*8-30 = 90)";
}

void c3(Outcome &o) {
  auto zs = sample_segre_points(200, kSeed, 50);
  std::size_t exact = 0;
  for (const auto &z : zs) {
    const auto &x = z.coords();
    Rational s2;
    for (const auto &t : x) s2 += t * t;
    QVector y(6);
    for (std::size_t i = 0; i < 6; ++i) y[i] = x[i] * x[i] - s2 / Rational(6);
    bool on = sum(x) == 0 && cube_sum(x) == 0 && cr_form(y) == 0 && duality_image(z).image == ProjectivePoint(y);
    exact += on;
  }
  o.require(zs.size() == 200 && exact == 200, "samples on CR4 " + std::to_string(exact));
  // Plane z_a = -z_b, z_c = -z_d, z_e = -z_f maps into u_a = u_b, u_c = u_d, u_e = u_f.
  std::size_t planes = 0;
  auto loci = special_loci(Kind::cr);
  for (const auto &s : configs::all_synthemes()) {
    std::set<ProjectivePoint> imgs;
    bool inside = true;
    for (auto [a, b, c] : {std::array<long, 3>{1, 2, -2}, {3, 1, 5}, {2, -7, 1}}) {
      long t[3] = {a, b, c};
      QVector z(6);
      for (std::size_t k = 0; k < 3; ++k) {
        z[static_cast<std::size_t>(s.duads[k].a - 1)] = Rational(t[k]);
        z[static_cast<std::size_t>(s.duads[k].b - 1)] = Rational(-t[k]);
      }
      auto y = duality_image(ProjectivePoint(z)).image;
      for (const auto &d : s.duads) inside = inside && y.coords()[d.a - 1] == y.coords()[d.b - 1];
      auto it = std::find_if(loci.double_lines.begin(), loci.double_lines.end(), [&](const auto &l) { return l.label == s.str(); });
      inside = inside && it != loci.double_lines.end() && it->space.contains(y.coords());
      imgs.insert(y);
    }
    planes += inside && imgs.size() >= 2;
  }
  o.require(planes == 15, "planes " + std::to_string(planes));
  // The node with +1 on abc has cardinal hyperplane u_a+u_b+u_c = u_d+u_e+u_f.
  std::size_t cardinal = 0;
  for (const auto &t : configs::all_triples()) {
    QVector v(6, Rational(-1));
    for (int e : t.elems) v[static_cast<std::size_t>(e - 1)] = Rational(1);
    auto it = std::find_if(loci.cardinal.begin(), loci.cardinal.end(), [&](const auto &h) { return h.label == t.str(); });
    cardinal += it != loci.cardinal.end() && it->point == ProjectivePoint(v) && ProjectivePoint(segre_node(t)) == ProjectivePoint(v);
  }
  o.require(cardinal == 10, "cardinal duals " + std::to_string(cardinal));
  o.why << " samples " << exact << "/200 exact, planes " << planes << "/15, node duals " << cardinal << "/10";
}

void c4(Outcome &o) {
  std::size_t squares = 0;
  for (const auto &t : configs::all_triples()) {
    auto r = cardinal_restriction(t);
    squares += r.scale * r.root * r.root == r.restricted;
  }
  // On u1+u2+u3 = u4+u5+u6 = 0: CR4 / Q^2 is one constant, Q = u1u2+u1u3+u2u3-u4u5-u4u6-u5u6.
  auto r = cardinal_restriction(Triple({1, 2, 3}));
  std::mt19937_64 g(kSeed);
  std::uniform_int_distribution<long> d(-20, 20);
  std::optional<Rational> ratio, root_ratio;
  bool constant = true, matches_root = true;
  for (int k = 0; k < 40; ++k) {
    long a = d(g), b = d(g), c = d(g), e = d(g);
    QVector u = ints({a, b, -a - b, c, e, -c - e});
    Rational q = u[0] * u[1] + u[0] * u[2] + u[1] * u[2] - u[3] * u[4] - u[3] * u[5] - u[4] * u[5];
    if (q == 0) continue;
    Rational f = cr_form(u) / (q * q);
    if (!ratio) ratio = f;
    constant = constant && f == *ratio;
    // The library root, evaluated at the chart coordinates of u, is a fixed multiple of Q.
    auto w = solve(r.chart, u);
    if (!w) {
      matches_root = false;
      continue;
    }
    Rational kr = evaluate(r.root, *w) / q;
    if (!root_ratio) root_ratio = kr;
    matches_root = matches_root && kr != 0 && kr == *root_ratio;
  }
  o.require(squares == 10, "squares " + std::to_string(squares));
  o.require(constant && ratio && *ratio != 0, "CR4/Q^2 not constant on H(123)");
  o.require(matches_root, "root for 123 not proportional to Q");
  o.why << " squares " << squares << "/10, CR4 = " << (ratio ? ratio->str() : "?") << " Q^2 on H(123)";
}

void c5(Outcome &o) {
  const std::array<long, 6> cl{1, 2, 3, 5, 7, 11};
  auto m = hyperplane_section({1, 2, 3, 5, 7, 11});
  auto x = m.surface();
  std::size_t nodes = 0;
  for (const auto &n : m.nodes) {
    Rational h;
    for (std::size_t i = 0; i < 6; ++i) h += Rational(cl[i]) * n.point.coords()[i];
    nodes += n.certificate.is_ordinary && revalidate(x, n.certificate).ok && h == 0 && cr_form(n.point.coords()) == 0;
  }
  // Trope of abc: nodes in the cardinal hyperplane u_a+u_b+u_c = 0.
  std::size_t tropes = 0;
  for (const auto &t : configs::all_triples()) {
    std::size_t on = 0;
    for (const auto &n : m.nodes) {
      Rational s;
      for (int e : t.elems) s += n.point.coords()[static_cast<std::size_t>(e - 1)];
      on += s == 0;
    }
    tropes += on == 6;
  }
  auto inc = m.incidence();
  auto iso = configs::incidence_isomorphic(inc, configs::trope_incidence_model());
  bool iso_ok = iso && configs::check_relabeling(inc, configs::trope_incidence_model(), *iso);
  o.require(m.nodes.size() == 15 && nodes == 15, "nodes " + std::to_string(nodes));
  o.require(m.tropes.size() == 10 && tropes == 10, "tropes through 6 nodes " + std::to_string(tropes));
  o.require(iso_ok, "incidence not isomorphic to the model");
  std::string scan;
  try {
    auto r = singular_scan_fp(m, 11);
    scan = std::to_string(r.points.size());
    o.require(r.points.size() == 15, "F_11 scan " + scan);
  } catch (const BadPrime &e) {
    scan = std::string("bad reduction: ") + e.what();
    o.require(false, "F_11 scan: " + scan);
  }
  auto oracle = oracle_section_scan(cl, 11);
  o.require(oracle == 15, "F_11 oracle scan " + std::to_string(oracle));
  o.why << " nodes " << nodes << "/15, tropes " << tropes << "/10, incidence " << (iso_ok ? "iso" : "non-iso") << ", F_11 scan "
        << scan << ", oracle finds " << oracle << " singular points";
}

void c6(Outcome &o) {
  auto m = sampled_tangent_section(kSeed, 50);
  auto x = m.surface();
  std::size_t nodes = 0;
  for (const auto &n : m.nodes) {
    Rational h;
    for (std::size_t i = 0; i < 6; ++i) h += Rational(m.coeffs[i]) * n.point.coords()[i];
    nodes += n.certificate.is_ordinary && revalidate(x, n.certificate).ok && h == 0 && cr_form(n.point.coords()) == 0;
  }
  o.require(m.nodes.size() == 16 && nodes == 16, "nodes " + std::to_string(nodes));
  o.why << " nodes " << nodes << "/" << m.nodes.size();
}

void c7(Outcome &o) {
  // Span over F_2 of the half-integrality patterns of all fifteen sigma(E_x).
  std::set<surface::Word> span{0};
  for (const auto &d : configs::all_duads()) {
    auto w = surface::word_of(surface::sigma_E(d));
    std::set<surface::Word> more = span;
    for (auto s : span) more.insert(static_cast<surface::Word>(s ^ w));
    span = std::move(more);
  }
  std::map<int, int> enumerator;
  for (auto w : span) ++enumerator[std::popcount(static_cast<unsigned>(w & 0xFFFE))];
  const std::map<int, int> expected{{0, 1}, {6, 10}, {8, 15}, {10, 6}};
  auto code = surface::even_set_code();
  int dim = std::countr_zero(span.size());
  o.require(span.size() == 32 && code.dimension == 5, "dimension");
  o.require(enumerator == expected && code.node_weight_enumerator == expected, "enumerator");
  o.why << " dimension " << dim << ", enumerator {";
  for (auto [w, k] : enumerator) o.why << w << ":" << k << (w == 10 ? "" : ", ");
  o.why << "}";
}

std::multiset<Rational> q_multiset(const std::vector<QVector> &gens, const std::vector<Integer> &orders,
                                   const std::function<Rational(const QVector &)> &norm, int sign) {
  std::multiset<Rational> out;
  std::vector<long> k(gens.size(), 0);
  while (true) {
    QVector v(gens.front().size());
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) v[j] += Rational(k[i]) * gens[i][j];
    out.insert(lattice::reduce_mod(Rational(sign) * norm(v), 2));
    std::size_t i = 0;
    while (i < k.size() && ++k[i] == orders[i].get_si()) k[i++] = 0;
    if (i == k.size()) break;
  }
  return out;
}

void c8(Outcome &o) {
  const auto &m = pic();
  // Gram of Pic from its basis rows in (eta, E) coordinates.
  QMatrix g(16, 16);
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = 0; j < 16; ++j) {
      surface::DivisorClass a, b;
      for (std::size_t k = 0; k < 16; ++k) a[k] = m.basis(i, k), b[k] = m.basis(j, k);
      g(i, j) = pair_NQ(a, b);
      o.require(g(i, j).is_integer() && Integer(m.lattice.gram()(i, j)) == g(i, j).num(), "gram entry");
    }
  Rational det = determinant(g);
  o.require(det == 128 || det == -128, "|det| " + det.str());
  auto dp = lattice::discriminant_group(m.lattice);
  auto target = surface::transcendental_candidate();
  auto dt = lattice::discriminant_group(target);
  o.require(dp.invariant_factors == std::vector<Integer>{2, 2, 2, 2, 2, 4} && dt.invariant_factors == dp.invariant_factors,
            "invariant factors");
  auto qp = q_multiset(dp.generators, dp.invariant_factors, [&](const QVector &v) { return m.lattice.norm(v); }, 1);
  auto qt_plus = q_multiset(dt.generators, dt.invariant_factors, [&](const QVector &v) { return target.norm(v); }, 1);
  auto qt_minus = q_multiset(dt.generators, dt.invariant_factors, [&](const QVector &v) { return target.norm(v); }, -1);
  auto cmp = surface::compare_discriminants(m);
  bool match = (qp == qt_minus && cmp.match_minus) || (qp == qt_plus && cmp.match_plus);
  o.require(match, "no q-compatible isomorphism");
  o.require(m.lattice.rank() == 16, "rank");
  o.why << " rank " << m.lattice.rank() << ", |det| " << Integer(abs(det.num())).get_str() << ", factors (2,2,2,2,2,4), q matches "
        << (qp == qt_minus ? "-q" : qp == qt_plus ? "q" : "neither") << " of U(2)+U(2)+A1(2)+A1";
}

void c9(Outcome &o) {
  auto k = surface::kummer_model();
  auto r = surface::kummer_embedding_check(pic(), k);
  // Pairings of images agree with the (eta, E) pairings on all basis pairs.
  const auto &kg = k.node_lattice;
  std::size_t agree = 0, total = 0;
  std::vector<surface::DivisorClass> basis;
  for (std::size_t i = 0; i < 16; ++i) {
    surface::DivisorClass d;
    for (std::size_t j = 0; j < 16; ++j) d[j] = pic().basis(i, j);
    basis.push_back(d);
  }
  for (const auto &a : basis)
    for (const auto &b : basis) {
      ++total;
      agree += kg.pair(surface::embed(a), surface::embed(b)) == pair_NQ(a, b);
    }
  o.require(r.holds() && r.image_is_complement && r.det_image == r.det_complement, "embedding check");
  o.require(agree == total, "pairings " + std::to_string(agree) + "/" + std::to_string(total));
  o.why << " embedding certified: " << (r.holds() ? "yes" : "no") << ", pairings " << agree << "/" << total << ", |det| image "
        << r.det_image.get_str() << " = complement " << r.det_complement.get_str();
}

void c10(Outcome &o) {
  const auto &m = pic();
  const auto &g = m.lattice.gram();
  auto sigma = involutions::sigma_star(m);
  auto rey = involutions::tau_rey_star(m);
  std::size_t pent = 0, pent_rank = 0;
  lattice::ZMatrix tau_c;
  for (const auto &pc : classes().pentads) {
    std::vector<Duad> nodes(pc.pentad.begin(), pc.pentad.end());
    auto t = involutions::tau_pentad_star(m, nodes);
    pent += oracle_involution(g, t.matrix);
    pent_rank += fixed_rank(t.matrix) == 15;
    if (nodes == involutions::goepel_C()) tau_c = t.matrix;
  }
  std::size_t images = 0;
  for (const auto &i : rey.images) images += i.holds;
  bool conj = tau_c.rows() == 16 && zmul(zmul(sigma.matrix, rey.iso.matrix), sigma.matrix) == tau_c;
  Integer tr = 0;
  for (std::size_t i = 0; i < 16; ++i) tr += rey.iso.matrix(i, i);
  Integer lef = 2 + tr - 6; // -1 on the rank-6 transcendental lattice
  o.require(oracle_involution(g, sigma.matrix), "sigma");
  o.require(oracle_involution(g, rey.iso.matrix) && fixed_rank(rey.iso.matrix) == 15, "tau_Rey");
  o.require(pent == 3003 && pent_rank == 3003, "pentad reflections");
  o.require(images == 6 && rey.images.size() == 6, "image formulas");
  o.require(conj, "sigma tau_Rey sigma != tau_Goepel");
  o.require(lef == 10, "Lefschetz " + lef.get_str());
  o.why << " sigma, tau_Rey and " << pent << "/3003 tau_P integral involutions; rank 15 for " << pent_rank
        << " pentads; image formulas " << images << "/6; conjugation " << (conj ? "holds" : "fails") << "; Lefschetz 2 + "
        << tr.get_str() << " - 6 = " << lef.get_str();
}

void c11(Outcome &o) {
  using surface::DivisorClass;
  auto eta = DivisorClass::eta();
  auto B = surface::B_tilde();
  auto D = surface::degree20_class();
  // The three expressions of the degree 10 class, rebuilt from E and sigma(E).
  DivisorClass sumC_E, sumL, sumC;
  for (const auto &x : surface::C_nodes()) sumC_E = sumC_E + DivisorClass::node(x), sumC = sumC + DivisorClass::node(x) + surface::sigma_E(x);
  for (const auto &x : surface::L_nodes()) sumL = sumL + DivisorClass::node(x) + surface::sigma_E(x);
  DivisorClass e1 = eta + surface::eta_star() - sumC_E, e2 = Rational(1, 2) * sumL, e3 = Rational(1, 2) * sumC;
  o.require(e1 == e2 && e2 == e3 && B == e1, "degree 10 class expressions");
  o.require(pair_NQ(B, B) == 10 && pair_NQ(B, eta) == 10, "B~ degrees");
  o.require(pair_NQ(D, D) == 20, "(4eta*-eta)^2");
  std::size_t pencils = 0, admissible = 0;
  for (const auto &pc : classes().pentads) {
    if (!pc.admissible) continue;
    ++admissible;
    auto r = pentads::pencil_classes(pc.pentad);
    bool ok = r.pencils.size() == 5;
    for (std::size_t i = 0; i < r.pencils.size(); ++i) {
      ok = ok && pair_NQ(r.pencils[i], r.pencils[i]) == 0 && pair_NQ(r.pencils[i], eta) == 8;
      for (std::size_t j = i + 1; j < r.pencils.size(); ++j) ok = ok && pair_NQ(r.pencils[i], r.pencils[j]) == 2;
    }
    pencils += ok;
  }
  o.require(pencils == admissible && admissible > 0, "pentad pencils");
  o.why << " B~^2 = " << pair_NQ(B, B).str() << ", B~.eta = " << pair_NQ(B, eta).str() << ", (4eta*-eta)^2 = " << pair_NQ(D, D).str()
        << ", degree 10 class norm " << pair_NQ(e1, e1).str() << " with 3 equal expressions, F-classes ok for " << pencils << "/"
        << admissible << " admissible pentads";
}

void c12(Outcome &o) {
  const auto &cl = classes();
  // Goepel pentads recounted from trope node sets: no trope holds three pentad nodes.
  std::size_t goepel = 0, total = 0;
  const auto &duads = configs::all_duads();
  for (unsigned mask = 0; mask < (1u << 15); ++mask) {
    if (std::popcount(mask) != 5) continue;
    ++total;
    std::size_t worst = 0;
    for (const auto &t : pentads::tropes()) {
      std::size_t on = 0;
      for (std::size_t i = 0; i < 15; ++i)
        if (mask >> i & 1u) on += t.contains(duads[i]);
      worst = std::max(worst, on);
    }
    goepel += worst < 3;
  }
  auto ex = pentads::classify(pentads::make_pentad({Duad(1, 5), Duad(2, 3), Duad(3, 4), Duad(3, 5), Duad(4, 5)}));
  std::set<std::string> on;
  for (const auto &t : ex.trope_triples) on.insert(t.trope.str());
  auto g = pentads::graph_criterion_crosscheck(cl);
  o.require(cl.pentads.size() == 3003 && total == 3003, "pentad count");
  o.require(cl.goepel_count == 6 && goepel == 6, "Goepel count");
  o.require(ex.trope_triples.size() == 3 && on == std::set<std::string>{"12", "15", "23"}, "example trope-triples");
  std::size_t covered = 0;
  for (const auto &r : g.readings) covered += r.agree + r.disagree == 3003;
  o.require(!g.readings.empty() && covered == g.readings.size(), "graph cross-check");
  o.why << " " << total << " pentads, " << goepel << " Goepel, example trope-triples on sigma(E12), sigma(E15), sigma(E23): "
        << (on == std::set<std::string>{"12", "15", "23"} ? "yes" : "no") << ", graph report over " << g.readings.size()
        << " readings";
}

void c13(Outcome &o) {
  auto c = congruence::invariants(2, 3, 1);
  auto p = congruence::two_n_profile(3);
  o.require(c.deg_focal == 4 && c.deg_l_curve == 4 && c.deg_P_surface == 2 && c.deg_branch_locus == 10, "(2,3,1) invariants");
  o.require(p.expected_nodes == 15 && p.consistent(), "(2,3) profile");
  const std::map<long, std::vector<congruence::AlphaVector>> columns{
      {2, {{16, 0, 0, 0, 0, 0}}}, {3, {{10, 5, 0, 0, 0, 0}}}, {4, {{6, 6, 2, 0, 0, 0}}},
      {5, {{3, 6, 3, 1, 0, 0}}},  {6, {{1, 4, 6, 0, 1, 0}, {0, 8, 0, 4, 0, 0}}}, {7, {{0, 0, 10, 0, 0, 1}}}};
  std::size_t present = 0, wanted = 0;
  for (const auto &[n, cols] : columns) {
    auto sols = congruence::table1_solutions(n);
    for (const auto &s : sols) {
      long cubes = 0, count = 0;
      for (long i = 1; i <= 6; ++i) cubes += i * i * i * s[static_cast<std::size_t>(i - 1)], count += s[static_cast<std::size_t>(i - 1)];
      o.require(cubes == (n + 2) * (n + 2) * (n - 1) && count == 18 - n, "solver output violates the sums");
    }
    for (const auto &col : cols) {
      ++wanted;
      present += std::find(sols.begin(), sols.end(), col) != sols.end();
    }
  }
  o.require(present == wanted, "table columns");
  o.why << " (2,3,1): focal " << c.deg_focal << ", |l| " << c.deg_l_curve << ", P " << c.deg_P_surface << ", branch "
        << c.deg_branch_locus << ", nodes " << p.expected_nodes << "; table columns present " << present << "/" << wanted;
}

} // namespace

int main() {
  const std::vector<std::pair<int, void (*)(Outcome &)>> criteria{
      {1, c1}, {2, c2}, {3, c3}, {4, c4}, {5, c5}, {6, c6}, {7, c7}, {8, c8}, {9, c9}, {10, c10}, {11, c11}, {12, c12}, {13, c13}};
  int failed = 0;
  for (auto [id, f] : criteria) {
    Outcome o;
    try {
      f(o);
    } catch (const std::exception &e) {
      o.pass = false;
      o.why << " [exception: " << e.what() << "]";
    }
    failed += !o.pass;
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << o.why.str() << std::endl;
  }
  return failed ? 1 : 0;
}
