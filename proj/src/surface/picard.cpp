#include "nodal/surface/picard.hpp"

#include "nodal/exact/poly_json.hpp"

#include <stdexcept>

namespace nodal::surface {

using lattice::ZMatrix;
using lattice::ZVector;

ClassInvariants class_invariants(const DivisorClass &d) {
  ClassInvariants c{norm(d), degree(d), false};
  try {
    c.pic_integral = even_set_code().contains(word_of(d));
  } catch (const std::domain_error &) {
    c.pic_integral = false;
  }
  return c;
}

std::optional<ZVector> PicardModel::pic_coordinates(const DivisorClass &d) const {
  ZVector out;
  for (std::size_t j = 0; j < kRank; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < kRank; ++i) s += d[i] * basis_inverse(i, j);
    if (!s.is_integer()) return std::nullopt;
    out.push_back(s.num());
  }
  return out;
}

DivisorClass PicardModel::from_pic(const ZVector &c) const {
  DivisorClass d;
  for (std::size_t i = 0; i < kRank; ++i)
    for (std::size_t j = 0; j < kRank; ++j) d[j] += Rational(c[i]) * basis(i, j);
  return d;
}

ZMatrix PicardModel::pic_matrix(const QMatrix &s) const {
  const QMatrix m = basis_inverse.transpose() * s * basis.transpose();
  for (std::size_t i = 0; i < kRank; ++i)
    for (std::size_t j = 0; j < kRank; ++j)
      if (!m(i, j).is_integer())
        throw std::domain_error("map sends Pic basis vector " + std::to_string(j) + " outside Pic");
  return ZMatrix::from_rational(m);
}

QMatrix PicardModel::n_matrix(const ZMatrix &m) const {
  return basis.transpose() * m.to_rational() * basis_inverse.transpose();
}

ZMatrix PicardModel::s6_matrix(const configs::Perm &g) const {
  QMatrix p(kRank, kRank);
  p(0, 0) = 1;
  for (const auto &x : configs::all_duads()) p(coord(configs::act(g, x)), coord(x)) = 1;
  return pic_matrix(p);
}

nlohmann::json PicardModel::to_json() const {
  nlohmann::json j = lattice.to_json();
  j["index_over_N"] = index.get_str();
  j["basis_in_eta_E"] = nlohmann::json::array();
  for (std::size_t i = 0; i < kRank; ++i) j["basis_in_eta_E"].push_back(nodal::to_json(basis.row(i)));
  std::vector<std::string> manifest;
  for (std::size_t i = 0; i < kRank; ++i) manifest.push_back(basis_label(i));
  j["coordinate_manifest"] = manifest;
  return j;
}

PicardModel picard_lattice() {
  PicardModel m;
  m.code = even_set_code();
  std::vector<QVector> glues;
  for (const auto &d : code_basis_duads()) glues.push_back(sigma_E(d).coords);
  auto o = lattice::overlattice(node_lattice(), glues);
  m.lattice = o.lattice;
  m.basis = o.basis;
  m.index = o.index;
  auto inv = inverse(m.basis);
  if (!inv) throw std::logic_error("Pic basis is singular");
  m.basis_inverse = *inv;
  return m;
}

std::map<std::string, DivisorClass> standard_classes() {
  std::map<std::string, DivisorClass> c;
  c["eta"] = DivisorClass::eta();
  c["eta*"] = eta_star();
  for (const auto &x : configs::all_duads()) {
    c["E" + x.str()] = DivisorClass::node(x);
    c["sigma(E" + x.str() + ")"] = sigma_E(x);
  }
  c["sigma(eta)"] = sigma_eta();
  c["B~"] = B_tilde();
  c["r_Rey"] = reye_root();
  c["4eta*-eta"] = degree20_class();
  for (const auto &x : L_nodes()) c["F" + x.str()] = reye_pencil(x);
  DivisorClass half_sum;
  for (int a = 1; a <= 5; ++a) {
    c["F" + std::to_string(a)] = conic_pencil(a);
    half_sum = half_sum + Rational(1, 2) * conic_pencil(a);
  }
  c["(F1+...+F5)/2"] = half_sum;
  return c;
}

std::vector<ClassIdentity> standard_identities() {
  const auto eta = DivisorClass::eta();
  const auto sum_L = DivisorClass::sum(L_nodes()), sum_C = DivisorClass::sum(C_nodes());
  DivisorClass sL, sC, sigL, sigC;
  for (const auto &x : L_nodes()) sL = sL + DivisorClass::node(x) + sigma_E(x), sigL = sigL + sigma_E(x);
  for (const auto &y : C_nodes()) sC = sC + DivisorClass::node(y) + sigma_E(y), sigC = sigC + sigma_E(y);
  const Rational half(1, 2);
  std::vector<ClassIdentity> v;
  v.push_back({"B~ = (1/2) sum_L (E + sigma E)", B_tilde(), half * sL});
  v.push_back({"B~ = (1/2) sum_C (E + sigma E)", B_tilde(), half * sC});
  v.push_back({"B~ = eta + eta* - sum_C E", B_tilde(), eta + eta_star() - sum_C});
  v.push_back({"sum (E + sigma E) = 4 B~", sL + sC, Rational(4) * B_tilde()});
  v.push_back({"sum (E + sigma E) = 10 eta - 2 sum_L E - 4 sum_C E", sL + sC,
               Rational(10) * eta - Rational(2) * sum_L - Rational(4) * sum_C});
  v.push_back({"2 eta* = 3 eta - sum_L E", Rational(2) * eta_star(), Rational(3) * eta - sum_L});
  v.push_back({"r_Rey = 2 eta* - eta", reye_root(), Rational(2) * eta_star() - eta});
  v.push_back({"4 eta* - eta = 5 eta - 2 sum_L E", degree20_class(), Rational(5) * eta - Rational(2) * sum_L});
  DivisorClass sumF, sumFx;
  for (int a = 1; a <= 5; ++a) sumF = sumF + conic_pencil(a);
  for (const auto &x : L_nodes()) sumFx = sumFx + reye_pencil(x);
  v.push_back({"(F1+...+F5)/2 = 5 eta - sum_C E - 2 sum_L E", half * sumF, Rational(5) * eta - sum_C - Rational(2) * sum_L});
  v.push_back({"(F1+...+F5)/2 = sum_L sigma E + sum_C E", half * sumF, sigL + sum_C});
  v.push_back({"sum_L F_x = 3 (4 eta* - eta)", sumFx, Rational(3) * degree20_class()});
  for (int a = 1; a <= 5; ++a) {
    DivisorClass fiber = Rational(2) * DivisorClass::node(Duad(a, 6));
    for (int b = 1; b <= 5; ++b)
      if (b != a) fiber = fiber + sigma_E(Duad(a, b));
    v.push_back({"F" + std::to_string(a) + " = 2 E" + std::to_string(a) + "6 + sum sigma(E" + std::to_string(a) + "b)",
                 conic_pencil(a), fiber});
  }
  return v;
}

lattice::IntegerLattice transcendental_candidate() {
  using lattice::direct_sum;
  using lattice::named_lattice;
  return direct_sum(direct_sum(direct_sum(named_lattice("U(2)"), named_lattice("U(2)")), named_lattice("A1(2)")),
                    named_lattice("A1"));
}

std::vector<DivisorClass> listed_discriminant_generators() {
  auto S = [](std::initializer_list<const char *> ds) {
    DivisorClass d;
    for (auto s : ds) d = d + DivisorClass::node(Duad::parse(s));
    return Rational(1, 2) * d;
  };
  return {Rational(1, 4) * DivisorClass::eta() - S({"14", "25", "35", "56"}), S({"13", "16", "26", "36"}),
          S({"13", "25", "34", "56"}), S({"13", "24", "12", "46"}), S({"13", "35", "16", "56"}),
          S({"14", "24", "16", "26"})};
}

nlohmann::json DiscriminantComparison::to_json() const {
  auto match = [](const std::optional<lattice::FormMatch> &m) -> nlohmann::json {
    if (!m) return nullptr;
    return {{"sign", m->sign}, {"images", m->images}};
  };
  return {{"pic", pic.to_json()},
          {"target", target.to_json()},
          {"groups_isomorphic", groups_isomorphic},
          {"match_minus_q", match(match_minus)},
          {"match_plus_q", match(match_plus)},
          {"listed_generators_in_dual", listed_in_dual}};
}

DiscriminantComparison compare_discriminants(const PicardModel &m) {
  DiscriminantComparison c;
  c.pic = lattice::discriminant_group(m.lattice);
  c.target = lattice::discriminant_group(transcendental_candidate());
  c.groups_isomorphic = c.pic.invariant_factors == c.target.invariant_factors;
  c.match_minus = lattice::match_discriminant_forms(c.pic, c.target, -1);
  c.match_plus = lattice::match_discriminant_forms(c.pic, c.target, 1);

  // Pic^v in (eta,E) coordinates: v with v.b integral for each Pic basis row b.
  for (const auto &g : listed_discriminant_generators()) {
    bool in = true;
    for (std::size_t i = 0; i < kRank && in; ++i) {
      DivisorClass b;
      b.coords = m.basis.row(i);
      in = pair(g, b).is_integer();
    }
    c.listed_in_dual.push_back(in);
  }
  return c;
}

nlohmann::json class_table_json(const std::map<std::string, DivisorClass> &classes) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto &[name, d] : classes) {
    auto inv = class_invariants(d);
    nlohmann::json coords = nlohmann::json::array();
    for (const auto &x : d.doubled()) coords.push_back(x.get_str());
    j[name] = {{"coords_doubled", coords},
               {"norm", inv.norm.str()},
               {"degree", inv.degree.str()},
               {"pic_integral", inv.pic_integral}};
  }
  return j;
}

} // namespace nodal::surface
