#pragma once

#include "nodal/lattice/lattice.hpp"
#include "nodal/surface/code.hpp"
#include "nodal/surface/divisor.hpp"

#include <json.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nodal::surface {

struct ClassInvariants {
  Rational norm, degree;
  bool pic_integral = false;
};

/// Integrality decided through the even-set code.
ClassInvariants class_invariants(const DivisorClass &d);

/// Pic(Y) as the overlattice of N glued by the code generators.
struct PicardModel {
  lattice::IntegerLattice lattice;
  QMatrix basis;         // rows: Pic basis in (eta, E) coordinates
  QMatrix basis_inverse; // basis^-1
  Integer index;         // [Pic : N]
  EvenSetCode code;

  /// Coordinates on the Pic basis, or nullopt when the class is not in Pic. Uses the lattice, not the code.
  [[nodiscard]] std::optional<lattice::ZVector> pic_coordinates(const DivisorClass &d) const;
  [[nodiscard]] DivisorClass from_pic(const lattice::ZVector &c) const;
  /// Matrix on the Pic basis of the Q-linear map whose columns are images of eta, E12, ..., E56.
  /// Throws std::domain_error when the map does not preserve Pic.
  [[nodiscard]] lattice::ZMatrix pic_matrix(const QMatrix &n_columns) const;
  [[nodiscard]] QMatrix n_matrix(const lattice::ZMatrix &m) const;
  [[nodiscard]] lattice::ZMatrix s6_matrix(const configs::Perm &g) const;
  [[nodiscard]] nlohmann::json to_json() const;
};

PicardModel picard_lattice();

/// Every named class of the model.
std::map<std::string, DivisorClass> standard_classes();

struct ClassIdentity {
  std::string name;
  DivisorClass lhs, rhs;
  [[nodiscard]] bool holds() const { return lhs == rhs; }
};

std::vector<ClassIdentity> standard_identities();

struct DiscriminantComparison {
  lattice::DiscriminantForm pic, target;
  bool groups_isomorphic = false;
  std::optional<lattice::FormMatch> match_minus, match_plus;
  /// Membership in Pic^v of each of the six listed vectors.
  std::vector<bool> listed_in_dual;
  [[nodiscard]] nlohmann::json to_json() const;
};

/// Compares with U(2)+U(2)+A1(2)+A1.
DiscriminantComparison compare_discriminants(const PicardModel &m);
lattice::IntegerLattice transcendental_candidate();
std::vector<DivisorClass> listed_discriminant_generators();

nlohmann::json class_table_json(const std::map<std::string, DivisorClass> &classes);

} // namespace nodal::surface
