#include "nodal/surface/kummer.hpp"

#include <bit>
#include <stdexcept>

namespace nodal::surface {

using configs::all_duads;
using lattice::ZMatrix;
using lattice::ZVector;

namespace {

unsigned mask_of(std::size_t alpha) {
  if (alpha == 0) return 0;
  const auto &d = all_duads().at(alpha - 1);
  return (1u << (d.a - 1)) | (1u << (d.b - 1));
}

std::size_t index_of_mask(unsigned m) {
  if (std::popcount(m) > 2) m = ~m & 63u;
  if (m == 0) return 0;
  int a = std::countr_zero(m) + 1;
  int b = 32 - std::countl_zero(m);
  return 1 + configs::index_of(Duad(a, b));
}

const std::vector<std::size_t> &kappa() {
  static const std::vector<std::size_t> k = [] {
    std::vector<std::size_t> v{0};
    for (int a = 1; a <= 5; ++a) v.push_back(1 + configs::index_of(Duad(a, 6)));
    return v;
  }();
  return k;
}

} // namespace

std::size_t kummer_add(std::size_t alpha, std::size_t beta) { return index_of_mask(mask_of(alpha) ^ mask_of(beta)); }

std::string kummer_label(std::size_t alpha) { return alpha == 0 ? "0" : all_duads().at(alpha - 1).str(); }

QVector KummerModel::node(std::size_t alpha) const {
  QVector v(1 + kKummerIndices);
  v[1 + alpha] = 1;
  return v;
}

std::optional<ZVector> KummerModel::pic_coordinates(const QVector &v) const {
  ZVector out;
  for (std::size_t j = 0; j < v.size(); ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * basis_inverse(i, j);
    if (!s.is_integer()) return std::nullopt;
    out.push_back(s.num());
  }
  return out;
}

bool KummerModel::incident(std::size_t alpha, std::size_t beta) const {
  return node_lattice.pair(node(alpha), tropes[beta]) == 1;
}

KummerModel kummer_model() {
  KummerModel k;
  const std::size_t n = 1 + kKummerIndices;
  ZMatrix g(n, n);
  g(0, 0) = 4;
  std::vector<std::string> labels{"eta"};
  for (std::size_t a = 0; a < kKummerIndices; ++a) g(1 + a, 1 + a) = -2, labels.push_back("N" + kummer_label(a));
  k.node_lattice = lattice::IntegerLattice(g, labels);
  for (std::size_t beta = 0; beta < kKummerIndices; ++beta) {
    QVector t(n);
    t[0] = Rational(1, 2);
    for (auto kap : kappa()) t[1 + kummer_add(beta, kap)] -= Rational(1, 2);
    k.tropes.push_back(t);
  }
  k.pic = lattice::overlattice(k.node_lattice, k.tropes);
  auto inv = inverse(k.pic.basis);
  if (!inv) throw std::logic_error("Kummer basis is singular");
  k.basis_inverse = *inv;
  return k;
}

QVector embed(const DivisorClass &d) {
  QVector v(1 + kKummerIndices);
  v[0] = d[0];
  for (std::size_t i = 1; i < kRank; ++i) v[1 + i] = d[i];
  return v;
}

nlohmann::json KummerEmbeddingCheck::to_json() const {
  return {{"incidence_rule", incidence_rule},
          {"trope_sizes", trope_sizes},
          {"pairing_preserved", pairing_preserved},
          {"images_in_pic", images_in_pic},
          {"orthogonal_to_N0", orthogonal_to_N0},
          {"sigma_ab_to_tropes", sigma_ab_to_tropes},
          {"sigma_a6_split", sigma_a6_split},
          {"gram_equal", gram_equal},
          {"image_is_complement", image_is_complement},
          {"det_image", det_image.get_str()},
          {"det_complement", det_complement.get_str()},
          {"failures", failures}};
}

KummerEmbeddingCheck kummer_embedding_check(const PicardModel &pic, const KummerModel &k) {
  KummerEmbeddingCheck c;
  const auto &L = k.node_lattice;
  auto fail = [&](const std::string &s) { c.failures.push_back(s); };

  c.incidence_rule = c.trope_sizes = true;
  for (std::size_t beta = 0; beta < kKummerIndices; ++beta) {
    std::size_t count = 0;
    for (std::size_t alpha = 0; alpha < kKummerIndices; ++alpha) {
      bool rule = false;
      for (auto kap : kappa()) rule = rule || kummer_add(alpha, beta) == kap;
      const bool inc = k.incident(alpha, beta);
      count += inc;
      if (inc != rule) {
        c.incidence_rule = false;
        fail("N" + kummer_label(alpha) + ".T" + kummer_label(beta) + " disagrees with the incidence rule");
      }
    }
    if (count != 6) {
      c.trope_sizes = false;
      fail("T" + kummer_label(beta) + " has " + std::to_string(count) + " nodes");
    }
  }

  // Generators: eta, E_x, and the five code classes.
  std::vector<std::pair<std::string, DivisorClass>> gens{{"eta", DivisorClass::eta()}};
  for (const auto &x : all_duads()) gens.push_back({"E" + x.str(), DivisorClass::node(x)});
  for (const auto &x : code_basis_duads()) gens.push_back({"sigma(E" + x.str() + ")", sigma_E(x)});
  const QVector n0 = k.node(0);
  c.pairing_preserved = c.orthogonal_to_N0 = c.images_in_pic = true;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const QVector fi = embed(gens[i].second);
    if (!k.pic_coordinates(fi)) c.images_in_pic = false, fail("image of " + gens[i].first + " not in Kummer Pic");
    if (!L.pair(fi, n0).is_zero()) c.orthogonal_to_N0 = false, fail("image of " + gens[i].first + " meets N0");
    for (std::size_t j = 0; j <= i; ++j)
      if (L.pair(fi, embed(gens[j].second)) != pair(gens[i].second, gens[j].second)) {
        c.pairing_preserved = false;
        fail("pairing of " + gens[i].first + " and " + gens[j].first + " changes");
      }
  }

  c.sigma_ab_to_tropes = c.sigma_a6_split = true;
  for (const auto &x : all_duads()) {
    const std::size_t ix = 1 + configs::index_of(x);
    if (!x.contains(6)) {
      if (embed(sigma_E(x)) != k.tropes[ix]) c.sigma_ab_to_tropes = false, fail("sigma(E" + x.str() + ") -> T");
    } else {
      QVector expect = k.tropes[ix];
      for (std::size_t i = 0; i < expect.size(); ++i) expect[i] += k.tropes[0][i] + n0[i];
      if (embed(sigma_E(x)) != expect) c.sigma_a6_split = false, fail("sigma(E" + x.str() + ") -> T + T0 + N0");
    }
  }

  // Image of the Pic basis in Kummer Pic coordinates, against the complement of N0.
  ZMatrix image(1 + kKummerIndices, kRank);
  for (std::size_t j = 0; j < kRank; ++j) {
    DivisorClass b;
    b.coords = pic.basis.row(j);
    auto coords = k.pic_coordinates(embed(b));
    if (!coords) {
      fail("Pic basis vector " + std::to_string(j) + " leaves Kummer Pic");
      return c;
    }
    for (std::size_t i = 0; i < coords->size(); ++i) image(i, j) = (*coords)[i];
  }
  const auto &KP = k.pic.lattice;
  const ZMatrix gram_image = image.transpose() * KP.gram() * image;
  c.gram_equal = gram_image == pic.lattice.gram();
  if (!c.gram_equal) fail("induced Gram differs from Pic Gram");
  auto n0_pic = k.pic_coordinates(n0);
  if (!n0_pic) {
    fail("N0 not in Kummer Pic");
    return c;
  }
  auto perp = lattice::orthogonal_complement(KP, {*n0_pic});
  c.det_image = abs(lattice::determinant(gram_image));
  c.det_complement = abs(perp.lattice.det());
  c.image_is_complement = perp.lattice.rank() == kRank && c.orthogonal_to_N0 && c.det_image == c.det_complement;
  if (!c.image_is_complement) fail("image is not the full orthogonal complement of N0");
  return c;
}

} // namespace nodal::surface
