#pragma once

#include "nodal/lattice/lattice.hpp"
#include "nodal/surface/picard.hpp"

#include <json.hpp>
#include <string>
#include <vector>

namespace nodal::surface {

/// Index group: 0 and the fifteen duads, as even subsets of [1,6] modulo complement.
/// Element 0 is the empty set, element 1 + index_of(d) is the duad d.
inline constexpr std::size_t kKummerIndices = 16;
std::size_t kummer_add(std::size_t alpha, std::size_t beta);
std::string kummer_label(std::size_t alpha);

/// Coordinates: 0 = eta, 1 + alpha = N_alpha.
struct KummerModel {
  lattice::IntegerLattice node_lattice; // <4> + A1^16
  lattice::Overlattice pic;
  std::vector<QVector> tropes; // T_beta, beta = 0..15
  QMatrix basis_inverse;

  [[nodiscard]] QVector node(std::size_t alpha) const;
  [[nodiscard]] std::optional<lattice::ZVector> pic_coordinates(const QVector &v) const;
  [[nodiscard]] bool incident(std::size_t alpha, std::size_t beta) const; // N_alpha . T_beta = 1
};

KummerModel kummer_model();

/// eta -> eta, E_x -> N_x, extended linearly.
QVector embed(const DivisorClass &d);

struct KummerEmbeddingCheck {
  bool incidence_rule = false;      // N_alpha.T_beta = 1 iff alpha+beta in {0,16,...,56}
  bool trope_sizes = false;         // six nodes per trope
  bool pairing_preserved = false;
  bool images_in_pic = false;
  bool orthogonal_to_N0 = false;
  bool sigma_ab_to_tropes = false;  // sigma(E_ab) -> T_ab
  bool sigma_a6_split = false;      // sigma(E_a6) -> T_a6 + T_0 + N_0
  bool gram_equal = false;
  bool image_is_complement = false;
  Integer det_image, det_complement;
  std::vector<std::string> failures;
  [[nodiscard]] bool holds() const { return failures.empty(); }
  [[nodiscard]] nlohmann::json to_json() const;
};

KummerEmbeddingCheck kummer_embedding_check(const PicardModel &pic, const KummerModel &k);

} // namespace nodal::surface
