#include "nodal/exact/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace nodal {

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : r_(rows.size()), c_(rows.size() ? rows.begin()->size() : 0) {
  a_.reserve(r_ * c_);
  for (const auto &row : rows) {
    if (row.size() != c_) throw std::invalid_argument("ragged matrix");
    a_.insert(a_.end(), row.begin(), row.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector> &rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  QMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector> &cols, std::size_t rows) {
  return from_rows(cols, rows).transpose();
}

QVector QMatrix::row(std::size_t i) const {
  return {a_.begin() + i * c_, a_.begin() + (i + 1) * c_};
}

QVector QMatrix::column(std::size_t j) const {
  QVector v(r_);
  for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool QMatrix::is_zero() const {
  for (const auto &x : a_)
    if (!x.is_zero()) return false;
  return true;
}

QMatrix operator*(const QMatrix &a, const QMatrix &b) {
  if (a.c_ != b.r_) throw std::invalid_argument("matrix product shape");
  QMatrix m(a.r_, b.c_);
  for (std::size_t i = 0; i < a.r_; ++i)
    for (std::size_t k = 0; k < a.c_; ++k) {
      const Rational &x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.c_; ++j)
        if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
    }
  return m;
}

QVector operator*(const QMatrix &a, const QVector &v) {
  if (a.c_ != v.size()) throw std::invalid_argument("matrix-vector shape");
  QVector w(a.r_);
  for (std::size_t i = 0; i < a.r_; ++i)
    for (std::size_t j = 0; j < a.c_; ++j)
      if (!v[j].is_zero() && !a(i, j).is_zero()) w[i] += a(i, j) * v[j];
  return w;
}

QMatrix operator+(const QMatrix &a, const QMatrix &b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix sum shape");
  QMatrix m = a;
  for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += b.a_[i];
  return m;
}

QMatrix operator-(const QMatrix &a, const QMatrix &b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix difference shape");
  QMatrix m = a;
  for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] -= b.a_[i];
  return m;
}

QMatrix operator*(const Rational &s, QMatrix m) {
  for (auto &x : m.a_) x *= s;
  return m;
}

RowEchelon rref(QMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const QMatrix &m) { return rref(m).pivots.size(); }

std::size_t rank_fraction_free(const QMatrix &m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::vector<Integer>> a(R, std::vector<Integer>(C));
  for (std::size_t i = 0; i < R; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < C; ++j) l = lcm(l, m(i, j).den());
    for (std::size_t j = 0; j < C; ++j) a[i][j] = m(i, j).num() * (l / m(i, j).den());
  }
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = r;
    while (p < R && a[p][c] == 0) ++p;
    if (p == R) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < R; ++i) {
      for (std::size_t j = c + 1; j < C; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

QMatrix nullspace(const QMatrix &m) {
  auto [red, piv] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -red(i, f);
    basis.push_back(std::move(v));
  }
  return QMatrix::from_columns(basis, m.cols());
}

QMatrix integral_nullspace(const QMatrix &m) {
  QMatrix n = nullspace(m);
  std::vector<QVector> cols;
  for (std::size_t j = 0; j < n.cols(); ++j) cols.push_back(primitive(n.column(j)));
  return QMatrix::from_columns(cols, m.cols());
}

std::optional<QMatrix> inverse(const QMatrix &m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto [red, piv] = rref(std::move(aug));
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = red(i, n + j);
  return inv;
}

std::optional<QVector> solve(const QMatrix &a, const QVector &b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve shape");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto [red, piv] = rref(std::move(aug));
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  QVector x(a.cols());
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = red(i, a.cols());
  return x;
}

Rational determinant(const QMatrix &m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  QMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    Rational inv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      Rational f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

Rational dot(const QVector &a, const QVector &b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot shape");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVector primitive(QVector v) {
  Integer l = 1, g = 0;
  for (const auto &x : v) l = lcm(l, x.den());
  for (auto &x : v) {
    x *= Rational(l);
    g = gcd(g, x.num());
  }
  if (g == 0) return v;
  int s = 0;
  for (const auto &x : v)
    if (!x.is_zero()) { s = x.sign(); break; }
  Rational f(Integer(s), g);
  for (auto &x : v) x *= f;
  return v;
}

bool is_zero(const QVector &v) {
  for (const auto &x : v)
    if (!x.is_zero()) return false;
  return true;
}

bool proportional(const QVector &v, const QVector &w) {
  if (v.size() != w.size() || is_zero(v) || is_zero(w)) return false;
  return primitive(v) == primitive(w);
}

} // namespace nodal
