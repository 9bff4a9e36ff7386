#pragma once

#include "nodal/exact/matrix.hpp"
#include "nodal/exact/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace nodal {

using Exponent = std::vector<std::uint32_t>;

/// Graded lex, larger first: higher total degree, then lexicographically larger.
struct GrlexDescending {
  bool operator()(const Exponent &a, const Exponent &b) const;
};

/// Substitution x_i = sum_j m(i,j) t_j. Composition is the matrix product.
class LinearMap {
public:
  explicit LinearMap(QMatrix m) : m_(std::move(m)) {}
  static LinearMap identity(std::size_t n) { return LinearMap(QMatrix::identity(n)); }
  [[nodiscard]] const QMatrix &matrix() const { return m_; }
  [[nodiscard]] std::size_t rows() const { return m_.rows(); }
  [[nodiscard]] std::size_t cols() const { return m_.cols(); }
  /// Apply this substitution first, then `inner`: x = M (N t).
  [[nodiscard]] LinearMap then(const LinearMap &inner) const { return LinearMap(m_ * inner.m_); }

private:
  QMatrix m_;
};

class MultiPoly {
public:
  using Terms = std::map<Exponent, Rational, GrlexDescending>;

  explicit MultiPoly(std::size_t num_vars = 0) : n_(num_vars) {}
  static MultiPoly constant(std::size_t num_vars, const Rational &c);
  static MultiPoly variable(std::size_t num_vars, std::size_t i);
  static MultiPoly monomial(const Exponent &e, const Rational &c);
  static MultiPoly linear_form(const QVector &coeffs);

  [[nodiscard]] std::size_t num_vars() const { return n_; }
  [[nodiscard]] const Terms &terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] int total_degree() const;
  /// Degree when every term has the same total degree; zero polynomial has none.
  [[nodiscard]] std::optional<int> homogeneous_degree() const;
  [[nodiscard]] Rational coefficient(const Exponent &e) const;
  /// Largest term under grlex. Requires nonzero.
  [[nodiscard]] std::pair<Exponent, Rational> leading_term() const;

  void add_term(const Exponent &e, const Rational &c);

  MultiPoly &operator+=(const MultiPoly &o);
  MultiPoly &operator-=(const MultiPoly &o);
  MultiPoly &operator*=(const Rational &s);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly &b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly &b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b);
  friend MultiPoly operator*(const Rational &s, MultiPoly a) { return a *= s; }
  MultiPoly operator-() const;
  friend bool operator==(const MultiPoly &, const MultiPoly &) = default;

  [[nodiscard]] MultiPoly pow(unsigned k) const;

private:
  std::size_t n_;
  Terms terms_;
};

Rational evaluate(const MultiPoly &f, const QVector &p);
MultiPoly partial(const MultiPoly &f, std::size_t i);
std::vector<MultiPoly> gradient(const MultiPoly &f);
QVector gradient_at(const MultiPoly &f, const QVector &p);
QMatrix hessian_at(const MultiPoly &f, const QVector &p);
MultiPoly substitute_linear(const MultiPoly &f, const LinearMap &m);
/// Image of f under the coordinate permutation x_i -> x_{perm[i]}.
MultiPoly permute_variables(const MultiPoly &f, const std::vector<std::size_t> &perm);

/// f = c q^2 with q's grlex-leading coefficient 1, or none.
std::optional<std::pair<Rational, MultiPoly>> perfect_square_factor(const MultiPoly &f);

/// lambda with f = lambda g, when one exists (both nonzero).
std::optional<Rational> scale_factor(const MultiPoly &f, const MultiPoly &g);

} // namespace nodal
