#pragma once

#include "nodal/exact/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace nodal {

using QVector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<QVector> &rows, std::size_t cols = 0);
  static QMatrix from_columns(const std::vector<QVector> &cols, std::size_t rows = 0);

  [[nodiscard]] std::size_t rows() const { return r_; }
  [[nodiscard]] std::size_t cols() const { return c_; }
  Rational &operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Rational &operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  [[nodiscard]] QVector row(std::size_t i) const;
  [[nodiscard]] QVector column(std::size_t j) const;
  [[nodiscard]] QMatrix transpose() const;
  [[nodiscard]] bool is_zero() const;

  friend QMatrix operator*(const QMatrix &a, const QMatrix &b);
  friend QVector operator*(const QMatrix &a, const QVector &v);
  friend QMatrix operator+(const QMatrix &a, const QMatrix &b);
  friend QMatrix operator-(const QMatrix &a, const QMatrix &b);
  friend QMatrix operator*(const Rational &s, QMatrix m);
  friend bool operator==(const QMatrix &, const QMatrix &) = default;

private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Rational> a_;
};

struct RowEchelon {
  QMatrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by rational elimination.
RowEchelon rref(QMatrix m);
std::size_t rank(const QMatrix &m);
/// Rank via Bareiss elimination on an integer rescaling; shares no code with rref.
std::size_t rank_fraction_free(const QMatrix &m);
/// Columns form a basis of the kernel; one column per free variable of the rref.
QMatrix nullspace(const QMatrix &m);
/// As nullspace, with each column scaled to a primitive integer vector.
QMatrix integral_nullspace(const QMatrix &m);
std::optional<QMatrix> inverse(const QMatrix &m);
std::optional<QVector> solve(const QMatrix &a, const QVector &b);
Rational determinant(const QMatrix &m);

Rational dot(const QVector &a, const QVector &b);
/// Scale to a primitive integer vector with first nonzero entry positive.
QVector primitive(QVector v);
bool is_zero(const QVector &v);
/// v and w span the same line (both nonzero).
bool proportional(const QVector &v, const QVector &w);

} // namespace nodal
