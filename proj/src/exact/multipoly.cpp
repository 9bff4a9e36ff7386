#include "nodal/exact/multipoly.hpp"

#include <numeric>
#include <stdexcept>

namespace nodal {

namespace {

std::uint32_t degree_of(const Exponent &e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

void check_arity(const MultiPoly &a, const MultiPoly &b) {
  if (a.num_vars() != b.num_vars()) throw std::invalid_argument("polynomials in different rings");
}

} // namespace

bool GrlexDescending::operator()(const Exponent &a, const Exponent &b) const {
  auto da = degree_of(a), db = degree_of(b);
  if (da != db) return da > db;
  return b < a;
}

MultiPoly MultiPoly::constant(std::size_t num_vars, const Rational &c) {
  MultiPoly f(num_vars);
  f.add_term(Exponent(num_vars, 0), c);
  return f;
}

MultiPoly MultiPoly::variable(std::size_t num_vars, std::size_t i) {
  if (i >= num_vars) throw std::out_of_range("variable index");
  Exponent e(num_vars, 0);
  e[i] = 1;
  MultiPoly f(num_vars);
  f.add_term(e, 1);
  return f;
}

MultiPoly MultiPoly::monomial(const Exponent &e, const Rational &c) {
  MultiPoly f(e.size());
  f.add_term(e, c);
  return f;
}

MultiPoly MultiPoly::linear_form(const QVector &coeffs) {
  MultiPoly f(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponent e(coeffs.size(), 0);
    e[i] = 1;
    f.add_term(e, coeffs[i]);
  }
  return f;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto &[e, c] : terms_) d = std::max(d, static_cast<int>(degree_of(e)));
  return d;
}

std::optional<int> MultiPoly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  auto d = degree_of(terms_.begin()->first);
  for (const auto &[e, c] : terms_)
    if (degree_of(e) != d) return std::nullopt;
  return static_cast<int>(d);
}

Rational MultiPoly::coefficient(const Exponent &e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational{} : it->second;
}

std::pair<Exponent, Rational> MultiPoly::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return *terms_.begin();
}

void MultiPoly::add_term(const Exponent &e, const Rational &c) {
  if (e.size() != n_) throw std::invalid_argument("exponent length");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly &MultiPoly::operator+=(const MultiPoly &o) {
  check_arity(*this, o);
  for (const auto &[e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly &MultiPoly::operator-=(const MultiPoly &o) {
  check_arity(*this, o);
  for (const auto &[e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly &MultiPoly::operator*=(const Rational &s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[e, c] : terms_) c *= s;
  return *this;
}

MultiPoly operator*(const MultiPoly &a, const MultiPoly &b) {
  check_arity(a, b);
  MultiPoly r(a.n_);
  Exponent e(a.n_);
  for (const auto &[ea, ca] : a.terms_)
    for (const auto &[eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto &[e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly r = constant(n_, 1), base = *this;
  while (k) {
    if (k & 1u) r = r * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return r;
}

Rational evaluate(const MultiPoly &f, const QVector &p) {
  if (p.size() != f.num_vars()) throw std::invalid_argument("evaluate: dimension mismatch");
  std::vector<std::vector<Rational>> powers(p.size(), std::vector<Rational>{1});
  Rational s;
  for (const auto &[e, c] : f.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size() && !t.is_zero(); ++i) {
      if (e[i] == 0) continue;
      auto &pw = powers[i];
      while (pw.size() <= e[i]) pw.push_back(pw.back() * p[i]);
      t *= pw[e[i]];
    }
    s += t;
  }
  return s;
}

MultiPoly partial(const MultiPoly &f, std::size_t i) {
  if (i >= f.num_vars()) throw std::out_of_range("partial: variable index");
  MultiPoly d(f.num_vars());
  for (const auto &[e, c] : f.terms()) {
    if (e[i] == 0) continue;
    Exponent e2 = e;
    --e2[i];
    d.add_term(e2, c * Rational(e[i]));
  }
  return d;
}

std::vector<MultiPoly> gradient(const MultiPoly &f) {
  std::vector<MultiPoly> g;
  g.reserve(f.num_vars());
  for (std::size_t i = 0; i < f.num_vars(); ++i) g.push_back(partial(f, i));
  return g;
}

QVector gradient_at(const MultiPoly &f, const QVector &p) {
  QVector v;
  v.reserve(f.num_vars());
  for (const auto &g : gradient(f)) v.push_back(evaluate(g, p));
  return v;
}

QMatrix hessian_at(const MultiPoly &f, const QVector &p) {
  if (p.size() != f.num_vars()) throw std::invalid_argument("hessian_at: dimension mismatch");
  const std::size_t n = f.num_vars();
  QMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly fi = partial(f, i);
    for (std::size_t j = i; j < n; ++j) {
      Rational v = evaluate(partial(fi, j), p);
      h(i, j) = v;
      h(j, i) = v;
    }
  }
  return h;
}

MultiPoly substitute_linear(const MultiPoly &f, const LinearMap &m) {
  if (m.rows() != f.num_vars()) throw std::invalid_argument("substitute_linear: dimension mismatch");
  const std::size_t k = m.cols();
  std::vector<std::vector<MultiPoly>> powers(f.num_vars());
  for (std::size_t i = 0; i < f.num_vars(); ++i)
    powers[i].push_back(MultiPoly::constant(k, 1));
  MultiPoly out(k);
  for (const auto &[e, c] : f.terms()) {
    MultiPoly t = MultiPoly::constant(k, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto &pw = powers[i];
      if (pw.size() == 1) pw.push_back(MultiPoly::linear_form(m.matrix().row(i)));
      while (pw.size() <= e[i]) pw.push_back(pw.back() * pw[1]);
      t = t * pw[e[i]];
    }
    out += t;
  }
  return out;
}

MultiPoly permute_variables(const MultiPoly &f, const std::vector<std::size_t> &perm) {
  if (perm.size() != f.num_vars()) throw std::invalid_argument("permutation length");
  MultiPoly g(f.num_vars());
  Exponent e2(f.num_vars());
  for (const auto &[e, c] : f.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) e2[perm[i]] = e[i];
    g.add_term(e2, c);
  }
  return g;
}

std::optional<std::pair<Rational, MultiPoly>> perfect_square_factor(const MultiPoly &f) {
  if (f.is_zero()) return std::nullopt;
  auto deg = f.homogeneous_degree();
  if (!deg || *deg % 2 != 0) throw std::invalid_argument("perfect_square_factor: need even homogeneous form");
  auto [lead, c] = f.leading_term();
  Exponent half(lead.size());
  for (std::size_t i = 0; i < lead.size(); ++i) {
    if (lead[i] % 2 != 0) return std::nullopt;
    half[i] = lead[i] / 2;
  }
  MultiPoly g = c.inverse() * f;
  MultiPoly q = MultiPoly::monomial(half, 1);
  Exponent last = half;
  GrlexDescending before;
  for (;;) {
    MultiPoly r = g - q * q;
    if (r.is_zero()) return std::make_pair(c, q);
    auto [re, rc] = r.leading_term();
    Exponent t(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) {
      if (re[i] < half[i]) return std::nullopt;
      t[i] = re[i] - half[i];
    }
    if (!before(last, t)) return std::nullopt;
    q.add_term(t, rc / Rational(2));
    last = t;
  }
}

std::optional<Rational> scale_factor(const MultiPoly &f, const MultiPoly &g) {
  if (f.is_zero() || g.is_zero() || f.num_vars() != g.num_vars()) return std::nullopt;
  auto [e, c] = g.leading_term();
  Rational lambda = f.coefficient(e) / c;
  if (lambda.is_zero() || !(f - lambda * g).is_zero()) return std::nullopt;
  return lambda;
}

} // namespace nodal
