#include "nodal/exact/modpoly.hpp"

#include <numeric>

namespace nodal {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    std::int64_t q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  if (r != 1) throw BadPrime("no inverse modulo " + std::to_string(p));
  return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

std::uint32_t reduce_mod(const Rational &r, std::uint32_t p) {
  Integer P = p;
  Integer d = r.den() % P;
  if (d == 0) throw BadPrime("prime " + std::to_string(p) + " divides a denominator");
  Integer n = r.num() % P;
  if (n < 0) n += P;
  auto nn = static_cast<std::uint64_t>(n.get_ui());
  auto di = inv_mod(static_cast<std::uint32_t>(d.get_ui()), p);
  return static_cast<std::uint32_t>(nn * di % p);
}

int ModPoly::total_degree() const {
  int d = -1;
  for (const auto &t : terms_)
    d = std::max(d, static_cast<int>(std::accumulate(t.exp.begin(), t.exp.end(), 0u)));
  return d;
}

std::uint32_t ModPoly::evaluate(std::span<const std::uint32_t> x) const {
  if (x.size() != n_) throw std::invalid_argument("ModPoly::evaluate: dimension mismatch");
  std::uint64_t s = 0;
  for (const auto &t : terms_) {
    std::uint64_t v = t.coef;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::uint32_t k = 0; k < t.exp[i]; ++k) v = v * x[i] % p_;
    s = (s + v) % p_;
  }
  return static_cast<std::uint32_t>(s);
}

ModPoly ModPoly::partial(std::size_t i) const {
  ModPoly d(p_, n_);
  for (const auto &t : terms_) {
    if (t.exp[i] == 0) continue;
    auto c = static_cast<std::uint32_t>(std::uint64_t{t.coef} * (t.exp[i] % p_) % p_);
    if (c == 0) continue;
    Exponent e = t.exp;
    --e[i];
    d.terms_.push_back({std::move(e), c});
  }
  return d;
}

ModPoly mod_p(const MultiPoly &f, std::uint32_t p) {
  if (!is_prime(p)) throw BadPrime(std::to_string(p) + " is not prime");
  ModPoly g(p, f.num_vars());
  for (const auto &[e, c] : f.terms()) {
    auto r = reduce_mod(c, p);
    if (r != 0) g.terms_.push_back({e, r});
  }
  return g;
}

} // namespace nodal
