#pragma once

#include "nodal/exact/multipoly.hpp"

#include <cstdint>
#include <random>

namespace nodal::testing {

inline long draw(std::mt19937_64 &g, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }

inline Rational random_rational(std::mt19937_64 &g, long bound = 9) {
  long d = draw(g, 1, bound);
  return {Integer(draw(g, -bound, bound)), Integer(d)};
}

inline QVector random_vector(std::mt19937_64 &g, std::size_t n, long bound = 9) {
  QVector v(n);
  for (auto &x : v) x = random_rational(g, bound);
  return v;
}

inline QMatrix random_matrix(std::mt19937_64 &g, std::size_t r, std::size_t c, long bound = 5) {
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(draw(g, -bound, bound));
  return m;
}

/// Random polynomial with up to `terms` terms of total degree <= deg; homogeneous if asked.
inline MultiPoly random_poly(std::mt19937_64 &g, std::size_t n, unsigned deg, int terms,
                             bool homogeneous = false) {
  MultiPoly f(n);
  for (int t = 0; t < terms; ++t) {
    Exponent e(n, 0);
    unsigned d = homogeneous ? deg : static_cast<unsigned>(draw(g, 0, deg));
    for (unsigned k = 0; k < d; ++k) ++e[static_cast<std::size_t>(draw(g, 0, static_cast<long>(n) - 1))];
    f.add_term(e, random_rational(g, 6));
  }
  return f;
}

} // namespace nodal::testing
