#include "nodal/exact/modpoly.hpp"
#include "nodal/exact/multipoly.hpp"
#include "nodal/exact/poly_json.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace nodal;
using nodal::testing::random_matrix;
using nodal::testing::random_poly;
using nodal::testing::random_vector;

namespace {

MultiPoly power_sum(std::size_t n, unsigned k) {
  MultiPoly f(n);
  for (std::size_t i = 0; i < n; ++i) f += MultiPoly::variable(n, i).pow(k);
  return f;
}

MultiPoly cr_form() {
  MultiPoly s2 = power_sum(6, 2);
  return Rational(4) * power_sum(6, 4) - s2 * s2;
}

QVector ints(std::initializer_list<long> xs) {
  QVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

} // namespace

TEST_CASE("rational canonical form") {
  Rational r(Integer(6), Integer(-4));
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(Rational().num() == 0);
  CHECK(Rational().den() == 1);
  CHECK(Rational(Integer(0), Integer(-7)).den() == 1);
  CHECK(Rational::parse("-10/4") == Rational(Integer(-5), Integer(2)));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS(Rational(Integer(1), Integer(0)));
  CHECK_THROWS(Rational(1) / Rational(0));
  CHECK_THROWS(Rational::parse("x/2"));
}

TEST_CASE("evaluate examples") {
  MultiPoly cubic = power_sum(6, 3);
  CHECK(evaluate(cubic, ints({1, 1, 1, -1, -1, -1})) == 0);
  CHECK(evaluate(cubic, ints({1, -1, 0, 0, 0, 0})) == 0);
  CHECK(evaluate(cr_form(), ints({2, 2, -1, -1, -1, -1})) == 0);
  CHECK(evaluate(cubic, ints({1, 2, 0, 0, 0, 0})) == 9);
  CHECK_THROWS(evaluate(cubic, ints({1, 2})));
}

TEST_CASE("gradient examples") {
  MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  auto g = gradient(x * x * y);
  CHECK(g[0] == Rational(2) * x * y);
  CHECK(g[1] == x * x);
  auto gc = gradient(power_sum(6, 3));
  for (std::size_t i = 0; i < 6; ++i)
    CHECK(gc[i] == Rational(3) * MultiPoly::variable(6, i).pow(2));
}

TEST_CASE("hessian examples") {
  QMatrix h = hessian_at(power_sum(6, 3), ints({1, 1, 1, -1, -1, -1}));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      CHECK(h(i, j) == (i != j ? Rational(0) : Rational(i < 3 ? 6 : -6)));
  std::mt19937_64 g(3);
  QMatrix h2 = hessian_at(power_sum(2, 2), random_vector(g, 2));
  CHECK(h2 == QMatrix{{2, 0}, {0, 2}});
}

TEST_CASE("substitute_linear basics") {
  MultiPoly f = MultiPoly::variable(2, 0) + MultiPoly::variable(2, 1);
  CHECK(substitute_linear(f, LinearMap::identity(2)) == f);
  std::mt19937_64 g(5);
  MultiPoly q = random_poly(g, 4, 4, 12, true);
  MultiPoly r = substitute_linear(q, LinearMap(random_matrix(g, 4, 3)));
  if (!r.is_zero()) CHECK(r.homogeneous_degree() == 4);
  CHECK_THROWS(substitute_linear(q, LinearMap(random_matrix(g, 3, 3))));
}

TEST_CASE("mod_p examples") {
  MultiPoly x = MultiPoly::variable(1, 0);
  ModPoly a = mod_p(Rational(Integer(1), Integer(2)) * x * x, 3);
  REQUIRE(a.terms().size() == 1);
  CHECK(a.terms()[0].coef == 2);
  CHECK(a.terms()[0].exp == Exponent{2});
  ModPoly b = mod_p(x, 2);
  CHECK(b.terms()[0].coef == 1);
  CHECK_THROWS_AS(mod_p(Rational(Integer(1), Integer(2)) * x * x, 2), BadPrime);
  CHECK_THROWS_AS(mod_p(x, 9), BadPrime);
}

TEST_CASE("mod_p commutes with evaluation") {
  std::mt19937_64 g(11);
  for (int rep = 0; rep < 50; ++rep) {
    MultiPoly f = random_poly(g, 3, 4, 8);
    QVector p = ints({nodal::testing::draw(g, -20, 20), nodal::testing::draw(g, -20, 20),
                      nodal::testing::draw(g, -20, 20)});
    const std::uint32_t P = 13;
    std::vector<std::uint32_t> pm;
    for (auto &c : p) pm.push_back(reduce_mod(c, P));
    bool ok = true;
    for (auto &[e, c] : f.terms()) ok = ok && (c.den() % P != 0);
    if (!ok) continue;
    CHECK(mod_p(f, P).evaluate(pm) == reduce_mod(evaluate(f, p), P));
  }
}

TEST_CASE("perfect_square_factor examples") {
  MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  auto s = perfect_square_factor((x + y) * (x + y));
  REQUIRE(s);
  CHECK(s->first == 1);
  CHECK(s->second == x + y);
  CHECK_FALSE(perfect_square_factor(x * x + y * y));
  MultiPoly l = Rational(2) * x + Rational(3) * y;
  auto t = perfect_square_factor(l * l);
  REQUIRE(t);
  CHECK(t->first == 4);
  CHECK(t->second == x + Rational(Integer(3), Integer(2)) * y);
  CHECK(t->first * t->second * t->second == l * l);
  CHECK_THROWS(perfect_square_factor(x * x * y));
}

TEST_CASE("perfect_square_factor property") {
  std::mt19937_64 g(17);
  for (int rep = 0; rep < 40; ++rep) {
    MultiPoly q = random_poly(g, 4, 2, 6, true);
    if (q.is_zero()) continue;
    Rational c = nodal::testing::random_rational(g);
    if (c.is_zero()) c = 3;
    MultiPoly f = c * q * q;
    auto s = perfect_square_factor(f);
    REQUIRE(s);
    CHECK(s->second.leading_term().second == 1);
    for (int k = 0; k < 10; ++k) {
      QVector p = random_vector(g, 4);
      Rational v = evaluate(s->second, p);
      CHECK(evaluate(f, p) == s->first * v * v);
    }
    // A perturbation is no longer a square.
    MultiPoly bump = f + MultiPoly::monomial({1, 1, 1, 1}, 1);
    auto b = perfect_square_factor(bump);
    if (b) CHECK(b->first * b->second * b->second == bump);
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 g(23);
  for (int rep = 0; rep < 30; ++rep) {
    MultiPoly a = random_poly(g, 3, 3, 5), b = random_poly(g, 3, 3, 5), c = random_poly(g, 3, 3, 5);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    QVector p = random_vector(g, 3);
    CHECK(evaluate(a * b, p) == evaluate(a, p) * evaluate(b, p));
  }
}

TEST_CASE("Euler identity") {
  std::mt19937_64 g(29);
  for (unsigned d = 1; d <= 5; ++d) {
    MultiPoly f = random_poly(g, 4, d, 10, true);
    QVector p = random_vector(g, 4);
    CHECK(dot(p, gradient_at(f, p)) == Rational(d) * evaluate(f, p));
  }
}

TEST_CASE("first-order expansion matches gradient") {
  std::mt19937_64 g(31);
  for (int rep = 0; rep < 20; ++rep) {
    unsigned d = static_cast<unsigned>(nodal::testing::draw(g, 1, 4));
    MultiPoly f = random_poly(g, 3, d, 8, true);
    if (f.is_zero()) continue;
    QVector p = random_vector(g, 3), v = random_vector(g, 3);
    // x = s p + t v; the s^d and s^(d-1) t coefficients are f(p) and grad f(p).v.
    QMatrix m(3, 2);
    for (std::size_t i = 0; i < 3; ++i) {
      m(i, 0) = p[i];
      m(i, 1) = v[i];
    }
    MultiPoly h = substitute_linear(f, LinearMap(m));
    CHECK(h.coefficient({d, 0}) == evaluate(f, p));
    CHECK(h.coefficient({d - 1, 1}) == dot(gradient_at(f, p), v));
  }
  // Linear f: f(p + t v) = f(p) + t grad.v exactly.
  QVector a = random_vector(g, 3), p = random_vector(g, 3), v = random_vector(g, 3);
  MultiPoly lin = MultiPoly::linear_form(a) + MultiPoly::constant(3, 7);
  Rational t = 5;
  QVector pt(3);
  for (std::size_t i = 0; i < 3; ++i) pt[i] = p[i] + t * v[i];
  CHECK(evaluate(lin, pt) == evaluate(lin, p) + t * dot(gradient_at(lin, p), v));
}

TEST_CASE("substitute_linear is functorial") {
  std::mt19937_64 g(37);
  for (int rep = 0; rep < 15; ++rep) {
    MultiPoly f = random_poly(g, 4, 3, 8);
    LinearMap M(random_matrix(g, 4, 3)), N(random_matrix(g, 3, 2));
    CHECK(substitute_linear(f, M.then(N)) == substitute_linear(substitute_linear(f, M), N));
  }
}

TEST_CASE("permute_variables agrees with evaluation") {
  std::mt19937_64 g(41);
  MultiPoly f = random_poly(g, 4, 3, 10);
  std::vector<std::size_t> perm{2, 0, 3, 1};
  QVector p = random_vector(g, 4), q(4);
  for (std::size_t i = 0; i < 4; ++i) q[perm[i]] = p[i];
  CHECK(evaluate(permute_variables(f, perm), q) == evaluate(f, p));
}

TEST_CASE("polynomial JSON round trip and order") {
  MultiPoly f = cr_form();
  auto j = to_json(f, default_var_names(6, "u"));
  CHECK(poly_from_json(j) == f);
  CHECK(j["terms"][0]["exp"] == nlohmann::json({4, 0, 0, 0, 0, 0}));
  CHECK(j["terms"][0]["num"] == "3");
  auto last = j["terms"].back();
  CHECK(last["exp"] == nlohmann::json({0, 0, 0, 0, 0, 4}));
  CHECK(j.dump() == to_json(poly_from_json(j), default_var_names(6, "u")).dump());
}

TEST_CASE("grlex order") {
  GrlexDescending lt;
  CHECK(lt({2, 0}, {1, 0}));
  CHECK(lt({2, 0}, {1, 1}));
  CHECK(lt({1, 1}, {0, 2}));
  CHECK_FALSE(lt({0, 2}, {0, 2}));
}

TEST_CASE("matrix helpers") {
  std::mt19937_64 g(43);
  for (int rep = 0; rep < 40; ++rep) {
    auto r = static_cast<std::size_t>(nodal::testing::draw(g, 1, 6));
    auto c = static_cast<std::size_t>(nodal::testing::draw(g, 1, 6));
    QMatrix a = random_matrix(g, r, c, 2);
    if (rep % 3 == 0 && r > 1)
      for (std::size_t j = 0; j < c; ++j) a(r - 1, j) = a(0, j) * Rational(3);
    CHECK(rank(a) == rank_fraction_free(a));
    QMatrix n = nullspace(a);
    CHECK(n.cols() + rank(a) == c);
    if (n.cols()) CHECK((a * n).is_zero());
    QMatrix sq = random_matrix(g, r, r, 3);
    if (auto inv = inverse(sq)) {
      CHECK(sq * *inv == QMatrix::identity(r));
      CHECK(!determinant(sq).is_zero());
    } else {
      CHECK(determinant(sq).is_zero());
    }
  }
  QVector v{Rational(Integer(2), Integer(3)), Rational(-4)};
  CHECK(primitive(v) == QVector{1, -6});
  CHECK(proportional(v, QVector{-1, 6}));
}
