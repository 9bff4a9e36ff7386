#include "nodal/varieties/space.hpp"

#include <stdexcept>

namespace nodal::varieties {

ProjectivePoint::ProjectivePoint(QVector coords) : x_(std::move(coords)) {
  std::size_t i = 0;
  while (i < x_.size() && x_[i].is_zero()) ++i;
  if (i == x_.size()) throw std::invalid_argument("projective point with all coordinates zero");
  Rational inv = x_[i].inverse();
  for (auto &c : x_) c *= inv;
}

std::string ProjectivePoint::str() const {
  std::string s = "[";
  QVector v = integral();
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + "]";
}

namespace {

QMatrix nonzero_rows(const RowEchelon &e, std::size_t n) {
  QMatrix m(e.pivots.size(), n);
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = e.reduced(i, j);
  return m;
}

} // namespace

LinearSubspace LinearSubspace::from_equations(const QMatrix &rows) {
  const std::size_t n = rows.cols();
  QMatrix eqs = nonzero_rows(rref(rows), n);
  return {n, eqs, integral_nullspace(eqs)};
}

LinearSubspace LinearSubspace::from_span(const QMatrix &basis) {
  const std::size_t n = basis.rows();
  if (basis.cols() == 0) return from_equations(QMatrix::identity(n));
  QMatrix eqs_raw = nullspace(basis.transpose()).transpose();
  if (eqs_raw.rows() == 0) eqs_raw = QMatrix(0, n);
  return from_equations(eqs_raw);
}

bool LinearSubspace::contains(const QVector &v) const {
  if (v.size() != n_) throw std::invalid_argument("subspace membership: dimension mismatch");
  return eqs_.rows() == 0 || is_zero(eqs_ * v);
}

bool LinearSubspace::contains(const LinearSubspace &o) const {
  for (std::size_t j = 0; j < o.dim(); ++j)
    if (!contains(o.basis_.column(j))) return false;
  return true;
}

LinearSubspace LinearSubspace::intersect(const LinearSubspace &o) const {
  if (o.n_ != n_) throw std::invalid_argument("intersect: ambient mismatch");
  std::vector<QVector> rows;
  for (std::size_t i = 0; i < eqs_.rows(); ++i) rows.push_back(eqs_.row(i));
  for (std::size_t i = 0; i < o.eqs_.rows(); ++i) rows.push_back(o.eqs_.row(i));
  return from_equations(QMatrix::from_rows(rows, n_));
}

bool operator<(const LinearSubspace &a, const LinearSubspace &b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  if (a.eqs_.rows() != b.eqs_.rows()) return a.eqs_.rows() < b.eqs_.rows();
  for (std::size_t i = 0; i < a.eqs_.rows(); ++i) {
    auto c = a.eqs_.row(i) <=> b.eqs_.row(i);
    if (c != 0) return c < 0;
  }
  return false;
}

QVector permute(const QVector &u, const std::vector<std::size_t> &perm) {
  if (perm.size() != u.size()) throw std::invalid_argument("permutation length");
  QVector v(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) v[perm[i]] = u[i];
  return v;
}

LinearSubspace permute(const LinearSubspace &s, const std::vector<std::size_t> &perm) {
  std::vector<QVector> cols;
  for (std::size_t j = 0; j < s.dim(); ++j) cols.push_back(permute(s.basis().column(j), perm));
  return LinearSubspace::from_span(QMatrix::from_columns(cols, s.ambient_dim()));
}

} // namespace nodal::varieties
