#pragma once

#include "nodal/exact/matrix.hpp"
#include "nodal/exact/multipoly.hpp"

#include <compare>
#include <string>
#include <vector>

namespace nodal::varieties {

/// Point of projective space, stored with first nonzero coordinate 1.
class ProjectivePoint {
public:
  explicit ProjectivePoint(QVector coords);

  [[nodiscard]] const QVector &coords() const { return x_; }
  [[nodiscard]] std::size_t size() const { return x_.size(); }
  /// Primitive integer representative with first nonzero entry positive.
  [[nodiscard]] QVector integral() const { return primitive(x_); }
  [[nodiscard]] std::string str() const;
  friend bool operator==(const ProjectivePoint &, const ProjectivePoint &) = default;
  friend auto operator<=>(const ProjectivePoint &a, const ProjectivePoint &b) { return a.x_ <=> b.x_; }

private:
  QVector x_;
};

/// Vector subspace of Q^n, kept both as row-reduced equations and as a basis.
class LinearSubspace {
public:
  static LinearSubspace from_equations(const QMatrix &rows);
  /// Columns of `basis` span the subspace.
  static LinearSubspace from_span(const QMatrix &basis);

  [[nodiscard]] std::size_t ambient_dim() const { return n_; }
  [[nodiscard]] std::size_t dim() const { return basis_.cols(); }
  [[nodiscard]] const QMatrix &equations() const { return eqs_; }
  /// Primitive integral basis as columns; n x dim.
  [[nodiscard]] const QMatrix &basis() const { return basis_; }
  [[nodiscard]] LinearMap parametrization() const { return LinearMap(basis_); }
  [[nodiscard]] bool contains(const QVector &v) const;
  [[nodiscard]] bool contains(const LinearSubspace &o) const;
  [[nodiscard]] LinearSubspace intersect(const LinearSubspace &o) const;
  friend bool operator==(const LinearSubspace &a, const LinearSubspace &b) {
    return a.n_ == b.n_ && a.eqs_ == b.eqs_;
  }
  friend bool operator<(const LinearSubspace &a, const LinearSubspace &b);

private:
  LinearSubspace(std::size_t n, QMatrix eqs, QMatrix basis)
      : n_(n), eqs_(std::move(eqs)), basis_(std::move(basis)) {}
  std::size_t n_;
  QMatrix eqs_;
  QMatrix basis_;
};

/// Coordinate permutation: (g.u)[perm[i]] = u[i].
QVector permute(const QVector &u, const std::vector<std::size_t> &perm);
LinearSubspace permute(const LinearSubspace &s, const std::vector<std::size_t> &perm);

} // namespace nodal::varieties
