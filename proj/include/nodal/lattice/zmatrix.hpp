#pragma once

#include "nodal/exact/matrix.hpp"
#include "nodal/exact/rational.hpp"

#include <initializer_list>
#include <json.hpp>
#include <optional>
#include <vector>

namespace nodal::lattice {

using ZVector = std::vector<Integer>;

/// Dense row-major integer matrix.
class ZMatrix {
public:
  ZMatrix() = default;
  ZMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
  ZMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static ZMatrix identity(std::size_t n);
  static ZMatrix from_rows(const std::vector<ZVector> &rows, std::size_t cols = 0);
  /// Throws std::domain_error on a non-integral entry.
  static ZMatrix from_rational(const QMatrix &m);

  [[nodiscard]] std::size_t rows() const { return r_; }
  [[nodiscard]] std::size_t cols() const { return c_; }
  Integer &operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Integer &operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  [[nodiscard]] ZVector row(std::size_t i) const;
  [[nodiscard]] ZVector column(std::size_t j) const;
  [[nodiscard]] ZMatrix transpose() const;
  [[nodiscard]] QMatrix to_rational() const;
  [[nodiscard]] bool is_diagonal() const;
  [[nodiscard]] bool is_symmetric() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row_i += k row_j
  void add_row(std::size_t i, std::size_t j, const Integer &k);
  /// col_i += k col_j
  void add_col(std::size_t i, std::size_t j, const Integer &k);
  void negate_row(std::size_t i);

  friend ZMatrix operator*(const ZMatrix &a, const ZMatrix &b);
  friend ZVector operator*(const ZMatrix &a, const ZVector &v);
  friend ZMatrix operator-(const ZMatrix &a, const ZMatrix &b);
  friend bool operator==(const ZMatrix &, const ZMatrix &) = default;

private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Integer> a_;
};

Integer determinant(const ZMatrix &m);
Integer dot(const ZVector &a, const ZVector &b);
nlohmann::json to_json(const ZMatrix &m);
nlohmann::json to_json(const ZVector &v);

struct SmithForm {
  ZMatrix d, u, v; // u * m * v = d
  [[nodiscard]] std::vector<Integer> diagonal() const;
};

/// Re-verifies u m v = d, unimodularity, and the divisibility chain; throws std::logic_error.
SmithForm smith_normal_form(const ZMatrix &m);
/// Row-style Hermite form: nonzero rows only, positive pivots, entries above pivots reduced.
ZMatrix hermite_normal_form(const ZMatrix &m);

} // namespace nodal::lattice
