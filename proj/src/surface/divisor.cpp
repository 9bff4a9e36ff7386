#include "nodal/surface/divisor.hpp"

#include <stdexcept>

namespace nodal::surface {

using configs::all_duads;

std::size_t coord(const Duad &d) { return 1 + configs::index_of(d); }

std::string basis_label(std::size_t i) { return i == 0 ? "eta" : "E" + all_duads().at(i - 1).str(); }

const std::vector<Duad> &L_nodes() {
  static const std::vector<Duad> v = [] {
    std::vector<Duad> out;
    for (const auto &d : all_duads())
      if (!d.contains(6)) out.push_back(d);
    return out;
  }();
  return v;
}

const std::vector<Duad> &C_nodes() {
  static const std::vector<Duad> v = [] {
    std::vector<Duad> out;
    for (const auto &d : all_duads())
      if (d.contains(6)) out.push_back(d);
    return out;
  }();
  return v;
}

DivisorClass DivisorClass::eta() {
  DivisorClass d;
  d[0] = 1;
  return d;
}

DivisorClass DivisorClass::node(const Duad &x) {
  DivisorClass d;
  d[coord(x)] = 1;
  return d;
}

DivisorClass DivisorClass::sum(const std::vector<Duad> &ds) {
  DivisorClass d;
  for (const auto &x : ds) d[coord(x)] += 1;
  return d;
}

DivisorClass operator+(DivisorClass a, const DivisorClass &b) {
  for (std::size_t i = 0; i < kRank; ++i) a[i] += b[i];
  return a;
}

DivisorClass operator-(DivisorClass a, const DivisorClass &b) {
  for (std::size_t i = 0; i < kRank; ++i) a[i] -= b[i];
  return a;
}

DivisorClass operator*(const Rational &s, DivisorClass a) {
  for (auto &x : a.coords) x *= s;
  return a;
}

std::vector<Integer> DivisorClass::doubled() const {
  std::vector<Integer> out;
  for (const auto &x : coords) {
    Rational y = Rational(2) * x;
    if (!y.is_integer()) throw std::domain_error("coordinate " + x.str() + " not in (1/2)Z");
    out.push_back(y.num());
  }
  return out;
}

std::string DivisorClass::str() const {
  std::string s;
  for (std::size_t i = 0; i < kRank; ++i) {
    if (coords[i].is_zero()) continue;
    const bool neg = coords[i].sign() < 0;
    Rational a = coords[i].abs();
    s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (a != 1) s += a.str() + "*";
    s += basis_label(i);
  }
  return s.empty() ? "0" : s;
}

Rational pair(const DivisorClass &a, const DivisorClass &b) {
  Rational s = Rational(4) * a[0] * b[0];
  for (std::size_t i = 1; i < kRank; ++i) s -= Rational(2) * a[i] * b[i];
  return s;
}

lattice::IntegerLattice node_lattice() {
  lattice::ZMatrix g(kRank, kRank);
  g(0, 0) = 4;
  std::vector<std::string> labels{basis_label(0)};
  for (std::size_t i = 1; i < kRank; ++i) g(i, i) = -2, labels.push_back(basis_label(i));
  return lattice::IntegerLattice(g, labels);
}

DivisorClass act(const configs::Perm &g, const DivisorClass &d) {
  DivisorClass out;
  out[0] = d[0];
  for (const auto &x : all_duads()) out[coord(configs::act(g, x))] = d[coord(x)];
  return out;
}

DivisorClass sigma_E(const Duad &x) {
  const auto eta = DivisorClass::eta();
  const Rational half(1, 2);
  if (!x.contains(6)) {
    // Trope through x: the duads of [1,5] disjoint from x, and a6, b6.
    std::vector<Duad> s{x, Duad(x.a, 6), Duad(x.b, 6)};
    for (const auto &d : L_nodes())
      if (d.disjoint(x)) s.push_back(d);
    return half * (eta - DivisorClass::sum(s));
  }
  const int a = x.a;
  std::vector<Duad> s;
  for (int b = 1; b <= 5; ++b)
    if (b != a) s.push_back(Duad(b, 6)), s.push_back(Duad(a, b));
  return half * (Rational(2) * eta - Rational(2) * DivisorClass::node(x) - DivisorClass::sum(s));
}

DivisorClass sigma_eta() {
  return Rational(4) * DivisorClass::eta() - DivisorClass::sum(L_nodes()) - Rational(2) * DivisorClass::sum(C_nodes());
}

DivisorClass eta_star() {
  return Rational(1, 2) * (Rational(3) * DivisorClass::eta() - DivisorClass::sum(L_nodes()));
}

DivisorClass B_tilde() {
  return Rational(1, 2) * (Rational(5) * DivisorClass::eta() - DivisorClass::sum(L_nodes()) -
                           Rational(2) * DivisorClass::sum(C_nodes()));
}

DivisorClass reye_root() { return Rational(2) * DivisorClass::eta() - DivisorClass::sum(L_nodes()); }

DivisorClass reye_pencil(const Duad &x) {
  if (x.contains(6)) throw std::invalid_argument("reye pencil index must avoid 6");
  return eta_star() - DivisorClass::node(x);
}

DivisorClass conic_pencil(int a) {
  if (a < 1 || a > 5) throw std::invalid_argument("conic pencil index must be in [1,5]");
  std::vector<Duad> halves, whole;
  for (int b = 1; b <= 5; ++b)
    if (b != a) halves.push_back(Duad(b, 6)), halves.push_back(Duad(a, b));
  for (const auto &d : L_nodes())
    if (!d.contains(a)) whole.push_back(d);
  return Rational(2) * DivisorClass::eta() - Rational(1, 2) * DivisorClass::sum(halves) - DivisorClass::sum(whole);
}

DivisorClass degree20_class() { return Rational(4) * eta_star() - DivisorClass::eta(); }

} // namespace nodal::surface
