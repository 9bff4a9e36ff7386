#pragma once

#include "nodal/lattice/lattice.hpp"
#include "nodal/surface/picard.hpp"

#include <json.hpp>
#include <string>
#include <vector>

namespace nodal::involutions {

using configs::Duad;
using surface::DivisorClass;
using surface::PicardModel;

struct PicIsometry {
  std::string name;
  lattice::ZMatrix matrix; // on the Pic basis, columns are images
  lattice::IsometryCertificate certificate;

  /// Image of a Pic class.
  [[nodiscard]] DivisorClass apply(const PicardModel &m, const DivisorClass &d) const;
  [[nodiscard]] nlohmann::json to_json(const PicardModel &m) const;
};

struct ImageCheck {
  std::string name;
  bool holds = false;
};

/// Defined on (eta, E_x) and certified integral on Pic.
PicIsometry sigma_star(const PicardModel &m);

struct ReyeReflection {
  PicIsometry iso;
  Rational root_norm;
  std::vector<ImageCheck> images; // the six image formulas
};
ReyeReflection tau_rey_star(const PicardModel &m);

/// r_P = 3 eta - 2 sum_P E.
DivisorClass pentad_root(const std::vector<Duad> &p);
PicIsometry tau_pentad_star(const PicardModel &m, const std::vector<Duad> &p);

/// F_i = 2 eta - 2 E_i - sum_{j != i} E_j.
std::vector<DivisorClass> pentad_pencils(const std::vector<Duad> &p);

const std::vector<Duad> &goepel_C();

struct RelationReport {
  bool sigma_involutive = false;
  bool sigma_exchanges_families = false;
  bool sigma_fixes_B = false;
  bool conjugation_identity = false; // sigma tau_Rey sigma = tau_C
  std::size_t invariant_rank_rey = 0, invariant_rank_goepel = 0;
  Integer trace_pic_rey;
  int transcendental_rank = 6;
  Integer lefschetz; // 2 + tr(Pic) - rank(T), assuming -1 on T
  bool pencils_ok = false;           // F_i^C norms 0, pairings 2
  bool reye_pencils_invariant = false;
  bool naturality = false;           // g tau_P g^-1 = tau_gP on generators and a pentad sample
  std::vector<ImageCheck> reye_images;
  [[nodiscard]] bool holds() const;
  [[nodiscard]] nlohmann::json to_json() const;
};

RelationReport verify_relations(const PicardModel &m);

} // namespace nodal::involutions
