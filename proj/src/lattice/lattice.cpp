#include "nodal/lattice/lattice.hpp"

#include "nodal/exact/poly_json.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <regex>
#include <set>

namespace nodal::lattice {

namespace {

Integer floor_of(const Rational &x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
  return q;
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back("b" + std::to_string(i + 1));
  return v;
}

QMatrix gram_q(const IntegerLattice &l) { return l.gram().to_rational(); }

} // namespace

Rational reduce_mod(const Rational &x, const Rational &m) { return x - m * Rational(floor_of(x / m)); }

Signature signature(const QMatrix &s) {
  if (s.rows() != s.cols()) throw std::invalid_argument("signature of non-square matrix");
  QMatrix a = s;
  const std::size_t n = a.rows();
  Signature sig;
  auto sym_swap = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
    for (std::size_t k = 0; k < n; ++k) std::swap(a(k, i), a(k, j));
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, p).is_zero()) ++p;
    if (p == n) {
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!a(i, j).is_zero()) {
            pi = i, pj = j;
            break;
          }
      if (pi == n) {
        sig.zero += n - k;
        return sig;
      }
      // e_i -> e_i + e_j makes the diagonal entry 2 a_ij.
      for (std::size_t c = 0; c < n; ++c) a(pi, c) += a(pj, c);
      for (std::size_t r = 0; r < n; ++r) a(r, pi) += a(r, pj);
      p = pi;
    }
    sym_swap(k, p);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      Rational f = a(i, k) / a(k, k);
      for (std::size_t c = k; c < n; ++c) a(i, c) -= f * a(k, c);
      for (std::size_t r = k; r < n; ++r) a(r, i) -= f * a(r, k);
    }
    (a(k, k).sign() > 0 ? sig.positive : sig.negative)++;
  }
  return sig;
}

IntegerLattice::IntegerLattice(ZMatrix gram, std::vector<std::string> labels, Integer scale)
    : gram_(std::move(gram)), labels_(std::move(labels)), scale_(std::move(scale)) {
  if (!gram_.is_symmetric()) throw std::invalid_argument("gram matrix not symmetric");
  if (labels_.empty()) labels_ = default_labels(rank());
  if (labels_.size() != rank()) throw std::invalid_argument("label count does not match rank");
  det_ = determinant(gram_);
  sig_ = nodal::lattice::signature(gram_.to_rational());
}

IntegerLattice IntegerLattice::from_rational_gram(const QMatrix &gram, std::vector<std::string> labels) {
  Integer k = 1;
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j) k = lcm(k, gram(i, j).den());
  return IntegerLattice(ZMatrix::from_rational(Rational(k) * gram), std::move(labels), k);
}

bool IntegerLattice::is_even() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (gram_(i, i) % 2 != 0) return false;
  return true;
}

Integer IntegerLattice::pair(const ZVector &u, const ZVector &v) const { return dot(u, gram_ * v); }

Rational IntegerLattice::pair(const QVector &u, const QVector &v) const {
  return nodal::dot(u, gram_.to_rational() * v);
}

nlohmann::json IntegerLattice::to_json() const {
  return {{"rank", rank()},
          {"scale", scale_.get_str()},
          {"labels", labels_},
          {"gram", lattice::to_json(gram_)},
          {"det", det_.get_str()},
          {"signature", {sig_.positive, sig_.negative, sig_.zero}}};
}

IntegerLattice named_lattice(const std::string &name) {
  static const std::regex named(R"(^(U|A1|E8)(?:\((-?[0-9]+)\))?$)");
  static const std::regex diag(R"(^diag\(([-0-9, ]+)\)$)");
  std::smatch m;
  if (std::regex_match(name, m, diag)) {
    std::vector<long> d;
    std::string body = m[1];
    std::regex item(R"(-?[0-9]+)");
    for (auto it = std::sregex_iterator(body.begin(), body.end(), item); it != std::sregex_iterator(); ++it)
      d.push_back(std::stol(it->str()));
    if (d.empty()) throw std::invalid_argument("unknown lattice name: " + name);
    ZMatrix g(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) g(i, i) = d[i];
    return IntegerLattice(g);
  }
  if (!std::regex_match(name, m, named)) throw std::invalid_argument("unknown lattice name: " + name);
  const long k = m[2].matched ? std::stol(m[2]) : 1;
  if (k == 0) throw std::invalid_argument("zero scaling in " + name);
  ZMatrix g;
  std::vector<std::string> labels;
  if (m[1] == "U") {
    g = ZMatrix{{0, 1}, {1, 0}};
    labels = {"e", "f"};
  } else if (m[1] == "A1") {
    g = ZMatrix{{-2}};
    labels = {"r"};
  } else {
    // Bourbaki numbering: chain 1-3-4-5-6-7-8 with 2 attached to 4.
    g = ZMatrix(8, 8);
    for (std::size_t i = 0; i < 8; ++i) g(i, i) = -2;
    const std::pair<int, int> edges[] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
    for (auto [a, b] : edges) g(a, b) = g(b, a) = 1;
    for (int i = 1; i <= 8; ++i) labels.push_back("a" + std::to_string(i));
  }
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) *= k;
  return IntegerLattice(g, labels);
}

IntegerLattice direct_sum(const IntegerLattice &a, const IntegerLattice &b) {
  if (a.scale() != b.scale()) throw std::invalid_argument("direct sum of lattices with different scales");
  const std::size_t n = a.rank(), m = b.rank();
  ZMatrix g(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = a.gram()(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g(n + i, n + j) = b.gram()(i, j);
  std::vector<std::string> labels;
  for (const auto &s : a.labels()) labels.push_back("L." + s);
  for (const auto &s : b.labels()) labels.push_back("M." + s);
  return IntegerLattice(g, labels, a.scale());
}

Integer DiscriminantForm::order() const {
  Integer o = 1;
  for (const auto &d : invariant_factors) o *= d;
  return o;
}

nlohmann::json DiscriminantForm::to_json() const {
  nlohmann::json j;
  j["order"] = order().get_str();
  j["even"] = even;
  j["invariant_factors"] = nlohmann::json::array();
  for (const auto &d : invariant_factors) j["invariant_factors"].push_back(d.get_str());
  j["generators"] = nlohmann::json::array();
  for (const auto &g : generators) j["generators"].push_back(nodal::to_json(g));
  j["q_values"] = nlohmann::json::array();
  for (const auto &q : q_values) j["q_values"].push_back(q.str());
  j["b_values"] = nodal::to_json(b_values);
  return j;
}

DiscriminantForm discriminant_group(const IntegerLattice &l) {
  if (!l.nondegenerate()) throw DegenerateLattice("discriminant group of a degenerate lattice");
  const SmithForm s = smith_normal_form(l.gram());
  DiscriminantForm f;
  f.even = l.is_even();
  const Rational qmod = f.even ? 2 : 1;
  for (std::size_t i = 0; i < l.rank(); ++i) {
    const Integer &d = s.d(i, i);
    if (d == 1) continue;
    f.invariant_factors.push_back(d);
    QVector g(l.rank());
    for (std::size_t r = 0; r < l.rank(); ++r) g[r] = Rational(s.v(r, i), d);
    f.generators.push_back(std::move(g));
  }
  const std::size_t k = f.generators.size();
  f.b_values = QMatrix(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    f.q_values.push_back(reduce_mod(l.norm(f.generators[i]), qmod));
    for (std::size_t j = 0; j < k; ++j) f.b_values(i, j) = reduce_mod(l.pair(f.generators[i], f.generators[j]), 1);
  }
  return f;
}

namespace {

/// Elements of a finite abelian group as mixed-radix coordinate vectors.
struct FiniteForm {
  std::vector<long> d;
  std::vector<Rational> q;
  QMatrix b;
  Rational qmod;
  std::size_t size = 1;

  explicit FiniteForm(const DiscriminantForm &f) : q(f.q_values), b(f.b_values), qmod(f.even ? 2 : 1) {
    for (const auto &x : f.invariant_factors) {
      if (!x.fits_slong_p() || x > 1 << 20) throw std::invalid_argument("discriminant group too large");
      d.push_back(x.get_si());
      size *= d.back();
    }
  }
  std::vector<long> element(std::size_t idx) const {
    std::vector<long> c(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) c[i] = idx % d[i], idx /= d[i];
    return c;
  }
  std::size_t index(const std::vector<long> &c) const {
    std::size_t idx = 0;
    for (std::size_t i = d.size(); i-- > 0;) idx = idx * d[i] + static_cast<std::size_t>(((c[i] % d[i]) + d[i]) % d[i]);
    return idx;
  }
  Rational qv(const std::vector<long> &c) const {
    Rational s = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      s += Rational(c[i] * c[i]) * q[i];
      for (std::size_t j = i + 1; j < c.size(); ++j) s += Rational(2 * c[i] * c[j]) * b(i, j);
    }
    return reduce_mod(s, qmod);
  }
  Rational bv(const std::vector<long> &x, const std::vector<long> &y) const {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j) s += Rational(x[i] * y[j]) * b(i, j);
    return reduce_mod(s, 1);
  }
  long order(const std::vector<long> &c) const {
    long o = 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
      long g = std::gcd(c[i], d[i]);
      o = std::lcm(o, d[i] / g);
    }
    return o;
  }
  std::vector<long> add(std::vector<long> x, const std::vector<long> &y) const {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % d[i];
    return x;
  }
};

} // namespace

std::optional<FormMatch> match_discriminant_forms(const DiscriminantForm &a, const DiscriminantForm &b, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  if (a.invariant_factors != b.invariant_factors || a.even != b.even) return std::nullopt;
  const FiniteForm A(a), B(b);
  const Rational s = sign;
  // Distribution of (order, q) must agree before any search.
  std::map<std::pair<long, Rational>, std::size_t> da, db;
  std::vector<std::vector<long>> belems(B.size);
  std::vector<Rational> bq(B.size);
  for (std::size_t i = 0; i < A.size; ++i) {
    auto c = A.element(i);
    da[{A.order(c), reduce_mod(s * A.qv(c), A.qmod)}]++;
  }
  for (std::size_t i = 0; i < B.size; ++i) {
    belems[i] = B.element(i);
    bq[i] = B.qv(belems[i]);
    db[{B.order(belems[i]), bq[i]}]++;
  }
  if (da != db) return std::nullopt;

  const std::size_t k = A.d.size();
  std::vector<std::vector<std::size_t>> candidates(k);
  for (std::size_t g = 0; g < k; ++g) {
    const Rational target = reduce_mod(s * A.q[g], A.qmod);
    for (std::size_t i = 0; i < B.size; ++i)
      if (B.order(belems[i]) == A.d[g] && bq[i] == target) candidates[g].push_back(i);
  }
  std::vector<std::size_t> chosen;
  std::vector<std::vector<std::size_t>> spans{{B.index(std::vector<long>(k, 0))}};

  auto search = [&](auto &&self) -> bool {
    const std::size_t g = chosen.size();
    if (g == k) return true;
    for (std::size_t cand : candidates[g]) {
      const auto &h = belems[cand];
      bool ok = true;
      for (std::size_t j = 0; j < g && ok; ++j)
        ok = B.bv(h, belems[chosen[j]]) == reduce_mod(s * A.b(g, j), 1);
      if (!ok) continue;
      // The new image must extend the span injectively.
      std::set<std::size_t> span;
      std::vector<long> mult(k, 0);
      for (long t = 0; t < A.d[g] && ok; ++t) {
        for (std::size_t e : spans.back()) {
          auto x = B.add(belems[e], mult);
          if (!span.insert(B.index(x)).second) {
            ok = false;
            break;
          }
        }
        mult = B.add(mult, h);
      }
      if (!ok) continue;
      chosen.push_back(cand);
      spans.emplace_back(span.begin(), span.end());
      if (self(self)) return true;
      chosen.pop_back();
      spans.pop_back();
    }
    return false;
  };
  if (!search(search)) return std::nullopt;
  FormMatch fm;
  fm.sign = sign;
  for (std::size_t c : chosen) fm.images.push_back(belems[c]);
  return fm;
}

Overlattice overlattice(const IntegerLattice &l, const std::vector<QVector> &glues) {
  const std::size_t n = l.rank();
  const QMatrix g = gram_q(l);
  for (std::size_t i = 0; i < glues.size(); ++i) {
    if (glues[i].size() != n) throw std::invalid_argument("glue vector has wrong length");
    const QVector gv = g * glues[i];
    for (std::size_t j = 0; j < n; ++j)
      if (!gv[j].is_integer())
        throw IntegralityFailure("glue " + std::to_string(i) + " pairs non-integrally with " + l.labels()[j] +
                                 " (" + gv[j].str() + ")");
    for (std::size_t j = 0; j <= i; ++j) {
      Rational p = nodal::dot(glues[j], gv);
      if (!p.is_integer())
        throw IntegralityFailure("glues " + std::to_string(j) + " and " + std::to_string(i) +
                                 " pair non-integrally (" + p.str() + ")");
      if (i == j && p.num() % 2 != 0)
        throw IntegralityFailure("glue " + std::to_string(i) + " has odd norm " + p.str());
    }
  }
  Integer k = 1;
  for (const auto &v : glues) k = lcm(k, common_denominator(v));
  ZMatrix stacked(n + glues.size(), n);
  for (std::size_t i = 0; i < n; ++i) stacked(i, i) = k;
  for (std::size_t i = 0; i < glues.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) stacked(n + i, j) = (Rational(k) * glues[i][j]).num();
  const ZMatrix h = hermite_normal_form(stacked);
  if (h.rows() != n) throw std::logic_error("overlattice generator matrix lost rank");
  Overlattice out;
  out.basis = Rational(1, k) * h.to_rational();
  const ZMatrix gram = ZMatrix::from_rational(out.basis * g * out.basis.transpose());
  out.lattice = IntegerLattice(gram, {}, l.scale());
  if (l.is_even() && !out.lattice.is_even()) throw std::logic_error("overlattice lost evenness");
  Integer kn = 1;
  for (std::size_t i = 0; i < n; ++i) kn *= k;
  const Integer dh = abs(determinant(h));
  if (kn % dh != 0) throw std::logic_error("overlattice index not integral");
  out.index = kn / dh;
  if (abs(l.det()) != out.index * out.index * abs(out.lattice.det()))
    throw std::logic_error("overlattice determinant identity failed");
  return out;
}

Sublattice orthogonal_complement(const IntegerLattice &l, const std::vector<ZVector> &s) {
  const std::size_t n = l.rank();
  if (s.empty()) return {l, ZMatrix::identity(n)};
  ZMatrix a(s.size(), n);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].size() != n) throw std::invalid_argument("vector has wrong length");
    ZVector row = l.gram() * s[i];
    for (std::size_t j = 0; j < n; ++j) a(i, j) = row[j];
  }
  const SmithForm sf = smith_normal_form(a);
  std::size_t r = 0;
  for (const auto &d : sf.diagonal())
    if (d != 0) ++r;
  ZMatrix basis(n, n - r);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = r; j < n; ++j) basis(i, j - r) = sf.v(i, j);
  if (!(a * basis == ZMatrix(s.size(), n - r))) throw std::logic_error("complement basis not orthogonal");
  return {IntegerLattice(basis.transpose() * l.gram() * basis, {}, l.scale()), basis};
}

ZMatrix reflection_isometry(const IntegerLattice &l, const ZVector &r) {
  const std::size_t n = l.rank();
  if (r.size() != n) throw std::invalid_argument("root has wrong length");
  const Integer rr = l.norm(r);
  if (rr != -2 && rr != -4) throw std::invalid_argument("reflection root must have norm -2 or -4, got " + rr.get_str());
  const ZVector gr = l.gram() * r;
  ZMatrix m = ZMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Integer twice = 2 * gr[j];
    if (twice % rr != 0)
      throw IntegralityFailure("basis vector " + l.labels()[j] + " has pairing " + gr[j].get_str() +
                               " with the root");
    const Integer c = twice / rr;
    for (std::size_t i = 0; i < n; ++i) m(i, j) -= c * r[i];
  }
  return m;
}

IsometryCertificate verify_isometry(const IntegerLattice &l, const ZMatrix &m) {
  IsometryCertificate c;
  c.square = m.rows() == l.rank() && m.cols() == l.rank();
  if (!c.square) return c;
  c.preserves_form = m.transpose() * l.gram() * m == l.gram();
  const ZMatrix id = ZMatrix::identity(l.rank());
  ZMatrix p = m;
  for (int k = 1; k <= 4; ++k) {
    if (p == id) {
      c.order = k;
      break;
    }
    p = p * m;
  }
  return c;
}

std::size_t invariant_rank(const ZMatrix &m) {
  const ZMatrix d = m - ZMatrix::identity(m.rows());
  return m.rows() - nodal::rank(d.to_rational());
}

Integer trace(const ZMatrix &m) {
  Integer t = 0;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

nlohmann::json to_json(const SmithForm &s) {
  return {{"d", to_json(s.d)}, {"u", to_json(s.u)}, {"v", to_json(s.v)}};
}

} // namespace nodal::lattice
