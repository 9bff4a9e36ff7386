#include "nodal/involutions/involutions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace nodal::involutions {

using lattice::ZMatrix;
using lattice::ZVector;
using surface::C_nodes;
using surface::coord;
using surface::kRank;
using surface::L_nodes;

DivisorClass PicIsometry::apply(const PicardModel &m, const DivisorClass &d) const {
  auto c = m.pic_coordinates(d);
  if (!c) throw std::domain_error("class not in Pic: " + d.str());
  return m.from_pic(matrix * *c);
}

nlohmann::json PicIsometry::to_json(const PicardModel &m) const {
  return {{"name", name},
          {"matrix", lattice::to_json(matrix)},
          {"preserves_form", certificate.preserves_form},
          {"order", certificate.order ? nlohmann::json(*certificate.order) : nlohmann::json(nullptr)},
          {"basis", m.to_json()["basis_in_eta_E"]}};
}

namespace {

PicIsometry certify(const PicardModel &m, std::string name, ZMatrix mat) {
  PicIsometry p{std::move(name), std::move(mat), {}};
  p.certificate = lattice::verify_isometry(m.lattice, p.matrix);
  return p;
}

PicIsometry reflection(const PicardModel &m, const std::string &name, const DivisorClass &r) {
  auto c = m.pic_coordinates(r);
  if (!c) throw std::domain_error("root not in Pic: " + r.str());
  return certify(m, name, lattice::reflection_isometry(m.lattice, *c));
}

} // namespace

PicIsometry sigma_star(const PicardModel &m) {
  QMatrix s(kRank, kRank);
  auto put = [&](std::size_t col, const DivisorClass &d) {
    for (std::size_t i = 0; i < kRank; ++i) s(i, col) = d[i];
  };
  put(0, surface::sigma_eta());
  for (const auto &x : configs::all_duads()) put(coord(x), surface::sigma_E(x));
  return certify(m, "sigma*", m.pic_matrix(s));
}

ReyeReflection tau_rey_star(const PicardModel &m) {
  const DivisorClass r = surface::reye_root();
  ReyeReflection out{reflection(m, "tau_Rey*", r), surface::norm(r), {}};
  const auto &t = out.iso;
  const auto eta = DivisorClass::eta(), sum_L = DivisorClass::sum(L_nodes());
  auto all = [&](const std::vector<Duad> &xs, auto f) {
    return std::all_of(xs.begin(), xs.end(), f);
  };
  out.images.push_back({"tau(E_x) = E_x + r, x in L", all(L_nodes(), [&](const Duad &x) {
                          return t.apply(m, DivisorClass::node(x)) == DivisorClass::node(x) + r;
                        })});
  out.images.push_back({"tau(E_y) = E_y, y in C", all(C_nodes(), [&](const Duad &y) {
                          return t.apply(m, DivisorClass::node(y)) == DivisorClass::node(y);
                        })});
  out.images.push_back({"tau(sigma E_x) = sigma E_x, x in L", all(L_nodes(), [&](const Duad &x) {
                          return t.apply(m, surface::sigma_E(x)) == surface::sigma_E(x);
                        })});
  out.images.push_back({"tau(sigma E_y) = sigma E_y + 2r, y in C", all(C_nodes(), [&](const Duad &y) {
                          return t.apply(m, surface::sigma_E(y)) == surface::sigma_E(y) + Rational(2) * r;
                        })});
  out.images.push_back({"tau(eta) = 9 eta - 4 sum_L E", t.apply(m, eta) == Rational(9) * eta - Rational(4) * sum_L});
  out.images.push_back(
      {"tau(eta*) = 3 eta* - eta", t.apply(m, surface::eta_star()) == Rational(3) * surface::eta_star() - eta});
  return out;
}

DivisorClass pentad_root(const std::vector<Duad> &p) {
  if (p.size() != 5 || std::set<Duad>(p.begin(), p.end()).size() != 5)
    throw std::invalid_argument("a pentad is five distinct nodes");
  return Rational(3) * DivisorClass::eta() - Rational(2) * DivisorClass::sum(p);
}

PicIsometry tau_pentad_star(const PicardModel &m, const std::vector<Duad> &p) {
  std::string name = "tau_P*{";
  for (std::size_t i = 0; i < p.size(); ++i) name += (i ? "," : "") + p[i].str();
  return reflection(m, name + "}", pentad_root(p));
}

std::vector<DivisorClass> pentad_pencils(const std::vector<Duad> &p) {
  pentad_root(p);
  std::vector<DivisorClass> out;
  for (const auto &x : p)
    out.push_back(Rational(2) * DivisorClass::eta() - DivisorClass::node(x) - DivisorClass::sum(p));
  return out;
}

const std::vector<Duad> &goepel_C() { return C_nodes(); }

bool RelationReport::holds() const {
  bool images = std::all_of(reye_images.begin(), reye_images.end(), [](const ImageCheck &c) { return c.holds; });
  return sigma_involutive && sigma_exchanges_families && sigma_fixes_B && conjugation_identity &&
         invariant_rank_rey == 15 && invariant_rank_goepel == 15 && lefschetz == 10 && pencils_ok &&
         reye_pencils_invariant && naturality && images;
}

nlohmann::json RelationReport::to_json() const {
  nlohmann::json imgs = nlohmann::json::array();
  for (const auto &c : reye_images) imgs.push_back({{"formula", c.name}, {"holds", c.holds}});
  return {{"sigma_involutive", sigma_involutive},
          {"sigma_exchanges_families", sigma_exchanges_families},
          {"sigma_fixes_B", sigma_fixes_B},
          {"sigma_tau_rey_sigma_equals_tau_C", conjugation_identity},
          {"invariant_rank_tau_rey", invariant_rank_rey},
          {"invariant_rank_tau_goepel", invariant_rank_goepel},
          {"trace_on_pic", trace_pic_rey.get_str()},
          {"lefschetz_number", lefschetz.get_str()},
          {"assumption", "involutions act as -1 on the rank-" + std::to_string(transcendental_rank) +
                             " transcendental lattice"},
          {"pentad_pencils_ok", pencils_ok},
          {"reye_pencils_invariant", reye_pencils_invariant},
          {"naturality", naturality},
          {"reye_images", imgs}};
}

RelationReport verify_relations(const PicardModel &m) {
  RelationReport r;
  const auto sigma = sigma_star(m);
  const auto rey = tau_rey_star(m);
  const auto goepel = tau_pentad_star(m, goepel_C());
  const ZMatrix id = ZMatrix::identity(kRank);

  r.sigma_involutive = sigma.certificate.involution() && sigma.matrix * sigma.matrix == id;
  std::set<std::vector<Integer>> E, S, imgE, imgS;
  for (const auto &x : configs::all_duads()) {
    E.insert(DivisorClass::node(x).doubled());
    S.insert(surface::sigma_E(x).doubled());
    imgE.insert(sigma.apply(m, DivisorClass::node(x)).doubled());
    imgS.insert(sigma.apply(m, surface::sigma_E(x)).doubled());
  }
  r.sigma_exchanges_families = imgE == S && imgS == E;
  r.sigma_fixes_B = sigma.apply(m, surface::B_tilde()) == surface::B_tilde();
  r.conjugation_identity = sigma.matrix * rey.iso.matrix * sigma.matrix == goepel.matrix;

  r.invariant_rank_rey = lattice::invariant_rank(rey.iso.matrix);
  r.invariant_rank_goepel = lattice::invariant_rank(goepel.matrix);
  r.trace_pic_rey = lattice::trace(rey.iso.matrix);
  r.lefschetz = 2 + r.trace_pic_rey - r.transcendental_rank;

  const auto pencils = pentad_pencils(goepel_C());
  r.pencils_ok = true;
  for (std::size_t i = 0; i < pencils.size(); ++i) {
    if (surface::norm(pencils[i]) != 0) r.pencils_ok = false;
    for (std::size_t j = i + 1; j < pencils.size(); ++j)
      if (surface::pair(pencils[i], pencils[j]) != 2) r.pencils_ok = false;
  }
  r.reye_pencils_invariant = std::all_of(L_nodes().begin(), L_nodes().end(), [&](const Duad &x) {
    return rey.iso.apply(m, surface::reye_pencil(x)) == surface::reye_pencil(x);
  });

  // Naturality on the generators of S6 and a spread of pentads.
  r.naturality = true;
  const auto &duads = configs::all_duads();
  for (const auto &g : configs::s6_generators()) {
    const ZMatrix pg = m.s6_matrix(g), pgi = m.s6_matrix(g.inverse());
    for (std::size_t s = 0; s < 15; ++s) {
      std::vector<Duad> p, gp;
      for (std::size_t k = 0; k < 5; ++k) p.push_back(duads[(s + 3 * k) % 15]);
      for (const auto &x : p) gp.push_back(configs::act(g, x));
      if (pg * tau_pentad_star(m, p).matrix * pgi != tau_pentad_star(m, gp).matrix) r.naturality = false;
    }
  }
  r.reye_images = rey.images;
  return r;
}

} // namespace nodal::involutions
