#include "nodal/lattice/zmatrix.hpp"

#include <stdexcept>
#include <utility>

namespace nodal::lattice {

ZMatrix::ZMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : r_(rows.size()), c_(rows.size() ? rows.begin()->size() : 0) {
  for (const auto &row : rows) {
    if (row.size() != c_) throw std::invalid_argument("ragged matrix");
    for (long x : row) a_.emplace_back(x);
  }
}

ZMatrix ZMatrix::identity(std::size_t n) {
  ZMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ZMatrix ZMatrix::from_rows(const std::vector<ZVector> &rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  ZMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

ZMatrix ZMatrix::from_rational(const QMatrix &q) {
  ZMatrix m(q.rows(), q.cols());
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j) {
      if (!q(i, j).is_integer()) throw std::domain_error("non-integral entry " + q(i, j).str());
      m(i, j) = q(i, j).num();
    }
  return m;
}

ZVector ZMatrix::row(std::size_t i) const { return {a_.begin() + i * c_, a_.begin() + (i + 1) * c_}; }

ZVector ZMatrix::column(std::size_t j) const {
  ZVector v(r_);
  for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

ZMatrix ZMatrix::transpose() const {
  ZMatrix t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QMatrix ZMatrix::to_rational() const {
  QMatrix q(r_, c_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) q(i, j) = Rational((*this)(i, j));
  return q;
}

bool ZMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

bool ZMatrix::is_symmetric() const {
  if (r_ != c_) return false;
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = i + 1; j < c_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

void ZMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < c_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void ZMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < r_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void ZMatrix::add_row(std::size_t i, std::size_t j, const Integer &k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < c_; ++c) (*this)(i, c) += k * (*this)(j, c);
}

void ZMatrix::add_col(std::size_t i, std::size_t j, const Integer &k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < r_; ++r) (*this)(r, i) += k * (*this)(r, j);
}

void ZMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < c_; ++c) (*this)(i, c) = -(*this)(i, c);
}

ZMatrix operator*(const ZMatrix &a, const ZMatrix &b) {
  if (a.c_ != b.r_) throw std::invalid_argument("matrix product shape");
  ZMatrix m(a.r_, b.c_);
  for (std::size_t i = 0; i < a.r_; ++i)
    for (std::size_t k = 0; k < a.c_; ++k) {
      const Integer &x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.c_; ++j) m(i, j) += x * b(k, j);
    }
  return m;
}

ZVector operator*(const ZMatrix &a, const ZVector &v) {
  if (a.c_ != v.size()) throw std::invalid_argument("matrix-vector shape");
  ZVector w(a.r_);
  for (std::size_t i = 0; i < a.r_; ++i)
    for (std::size_t j = 0; j < a.c_; ++j) w[i] += a(i, j) * v[j];
  return w;
}

ZMatrix operator-(const ZMatrix &a, const ZMatrix &b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix difference shape");
  ZMatrix m = a;
  for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] -= b.a_[i];
  return m;
}

Integer determinant(const ZMatrix &m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  ZMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Integer dot(const ZVector &a, const ZVector &b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot shape");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

nlohmann::json to_json(const ZVector &v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto &x : v) a.push_back(x.get_str());
  return a;
}

nlohmann::json to_json(const ZMatrix &m) {
  nlohmann::json a = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> v;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) v.push_back(d(i, i));
  return v;
}

namespace {

Integer floor_div(const Integer &a, const Integer &b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

} // namespace

SmithForm smith_normal_form(const ZMatrix &m) {
  const std::size_t R = m.rows(), C = m.cols();
  ZMatrix d = m, u = ZMatrix::identity(R), v = ZMatrix::identity(C);
  for (std::size_t t = 0; t < std::min(R, C); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block goes to (t,t).
      std::size_t bi = R, bj = C;
      for (std::size_t i = t; i < R; ++i)
        for (std::size_t j = t; j < C; ++j)
          if (d(i, j) != 0 && (bi == R || abs(d(i, j)) < abs(d(bi, bj)))) bi = i, bj = j;
      if (bi == R) goto done;
      d.swap_rows(t, bi);
      u.swap_rows(t, bi);
      d.swap_cols(t, bj);
      v.swap_cols(t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        Integer q = floor_div(d(i, t), d(t, t));
        d.add_row(i, t, -q);
        u.add_row(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        Integer q = floor_div(d(t, j), d(t, t));
        d.add_col(j, t, -q);
        v.add_col(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = R;
      for (std::size_t i = t + 1; i < R && bad == R; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == R) break;
      d.add_row(t, bad, 1);
      u.add_row(t, bad, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
done:
  SmithForm s{d, u, v};
  if (u * m * v != d || !d.is_diagonal()) throw std::logic_error("SNF identity check failed");
  if (abs(determinant(u)) != 1 || abs(determinant(v)) != 1) throw std::logic_error("SNF transforms not unimodular");
  auto diag = s.diagonal();
  for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
    if (diag[i] == 0 && diag[i + 1] != 0) throw std::logic_error("SNF zero before nonzero");
    if (diag[i] != 0 && diag[i + 1] % diag[i] != 0) throw std::logic_error("SNF divisibility chain broken");
  }
  return s;
}

ZMatrix hermite_normal_form(const ZMatrix &m) {
  ZMatrix h = m;
  const std::size_t R = h.rows(), C = h.cols();
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    // Euclid down the column until only row r is nonzero.
    for (;;) {
      std::size_t best = R;
      for (std::size_t i = r; i < R; ++i)
        if (h(i, c) != 0 && (best == R || abs(h(i, c)) < abs(h(best, c)))) best = i;
      if (best == R) break;
      h.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < R; ++i) {
        if (h(i, c) == 0) continue;
        h.add_row(i, r, -floor_div(h(i, c), h(r, c)));
        if (h(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) h.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) h.add_row(i, r, -floor_div(h(i, c), h(r, c)));
    pivots.push_back(c);
    ++r;
  }
  ZMatrix out(r, C);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < C; ++j) out(i, j) = h(i, j);
  return out;
}

} // namespace nodal::lattice
