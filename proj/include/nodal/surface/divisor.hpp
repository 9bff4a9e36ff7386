#pragma once

#include "nodal/configs/combinatorics.hpp"
#include "nodal/exact/matrix.hpp"
#include "nodal/lattice/lattice.hpp"

#include <json.hpp>
#include <string>
#include <vector>

namespace nodal::surface {

using configs::Duad;

/// Coordinate 0 is eta, coordinate 1 + index_of(d) is E_d; duads in the order 12,13,...,56.
inline constexpr std::size_t kRank = 16;
std::size_t coord(const Duad &d);
std::string basis_label(std::size_t i);

/// Duads avoiding 6 (the ten lines' nodes) and containing 6.
const std::vector<Duad> &L_nodes();
const std::vector<Duad> &C_nodes();

/// Rational class on the basis (eta, E_x).
struct DivisorClass {
  QVector coords = QVector(kRank);

  static DivisorClass eta();
  static DivisorClass node(const Duad &d);
  static DivisorClass sum(const std::vector<Duad> &ds);

  Rational &operator[](std::size_t i) { return coords[i]; }
  const Rational &operator[](std::size_t i) const { return coords[i]; }
  friend DivisorClass operator+(DivisorClass a, const DivisorClass &b);
  friend DivisorClass operator-(DivisorClass a, const DivisorClass &b);
  friend DivisorClass operator*(const Rational &s, DivisorClass a);
  friend bool operator==(const DivisorClass &, const DivisorClass &) = default;

  /// Twice the coordinates, as integers; throws if a coordinate is outside (1/2)Z.
  [[nodiscard]] std::vector<Integer> doubled() const;
  [[nodiscard]] std::string str() const;
};

/// Pairing through diag(4, -2 x 15).
Rational pair(const DivisorClass &a, const DivisorClass &b);
inline Rational norm(const DivisorClass &a) { return pair(a, a); }
inline Rational degree(const DivisorClass &a) { return pair(a, DivisorClass::eta()); }

/// N = <4> + A1^15 with labels eta, E12, ..., E56.
lattice::IntegerLattice node_lattice();

/// S6 acts by relabeling nodes and fixes eta.
DivisorClass act(const configs::Perm &g, const DivisorClass &d);

// Named classes.
DivisorClass sigma_E(const Duad &x);
DivisorClass sigma_eta();
DivisorClass eta_star();
DivisorClass B_tilde();
DivisorClass reye_root();
/// F_x = eta* - E_x for x avoiding 6.
DivisorClass reye_pencil(const Duad &x);
/// F_a, a in [1,5]: the pencil through the conic of a6.
DivisorClass conic_pencil(int a);
DivisorClass degree20_class();

} // namespace nodal::surface
