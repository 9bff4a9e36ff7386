#include "nodal/configs/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nodal::configs {

Perm::Perm() { std::iota(img_.begin(), img_.end(), std::uint8_t{1}); }

Perm::Perm(std::array<std::uint8_t, 6> img) : img_(img) {
  auto s = img;
  std::sort(s.begin(), s.end());
  for (int i = 0; i < 6; ++i)
    if (s[i] != i + 1) throw std::invalid_argument("not a permutation of 1..6");
}

Perm Perm::parse(const std::string &cycles) {
  std::array<std::uint8_t, 6> img{1, 2, 3, 4, 5, 6};
  std::vector<int> cyc;
  bool seen[7] = {};
  for (char ch : cycles) {
    if (ch == '(') {
      cyc.clear();
    } else if (ch == ')') {
      for (std::size_t k = 0; k < cyc.size(); ++k)
        img[cyc[k] - 1] = static_cast<std::uint8_t>(cyc[(k + 1) % cyc.size()]);
    } else if (ch >= '1' && ch <= '6') {
      int v = ch - '0';
      if (seen[v]) throw std::invalid_argument("repeated point in cycles: " + cycles);
      seen[v] = true;
      cyc.push_back(v);
    } else if (ch != ' ') {
      throw std::invalid_argument("bad cycle notation: " + cycles);
    }
  }
  return Perm(img);
}

Perm operator*(const Perm &g, const Perm &h) {
  std::array<std::uint8_t, 6> img{};
  for (int i = 1; i <= 6; ++i) img[i - 1] = static_cast<std::uint8_t>(g(h(i)));
  return Perm(img);
}

Perm Perm::inverse() const {
  std::array<std::uint8_t, 6> img{};
  for (int i = 1; i <= 6; ++i) img[(*this)(i)-1] = static_cast<std::uint8_t>(i);
  return Perm(img);
}

std::string Perm::str() const {
  std::string s;
  bool done[7] = {};
  for (int i = 1; i <= 6; ++i) {
    if (done[i] || (*this)(i) == i) continue;
    s += '(';
    for (int j = i; !done[j]; j = (*this)(j)) {
      done[j] = true;
      s += static_cast<char>('0' + j);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

const std::vector<Perm> &symmetric_group() {
  static const std::vector<Perm> g = [] {
    std::vector<Perm> v;
    std::array<std::uint8_t, 6> a{1, 2, 3, 4, 5, 6};
    do v.emplace_back(a);
    while (std::next_permutation(a.begin(), a.end()));
    return v;
  }();
  return g;
}

std::array<Perm, 2> s6_generators() { return {Perm::parse("(12)"), Perm::parse("(123456)")}; }

Duad::Duad(int x, int y) {
  if (x == y || x < 1 || y < 1 || x > 6 || y > 6) throw std::invalid_argument("bad duad");
  a = std::min(x, y);
  b = std::max(x, y);
}

bool Duad::disjoint(const Duad &o) const { return !contains(o.a) && !contains(o.b); }

std::string Duad::str() const { return std::to_string(a) + std::to_string(b); }

Duad Duad::parse(const std::string &s) {
  if (s.size() != 2) throw std::invalid_argument("bad duad label: " + s);
  return {s[0] - '0', s[1] - '0'};
}

Syntheme::Syntheme(Duad x, Duad y, Duad z) : duads{x, y, z} {
  std::sort(duads.begin(), duads.end());
  if (!x.disjoint(y) || !x.disjoint(z) || !y.disjoint(z))
    throw std::invalid_argument("syntheme duads must be disjoint");
}

bool Syntheme::contains(const Duad &d) const {
  return std::find(duads.begin(), duads.end(), d) != duads.end();
}

int Syntheme::mate(int i) const {
  for (const auto &d : duads)
    if (d.contains(i)) return d.a == i ? d.b : d.a;
  throw std::logic_error("syntheme does not cover point");
}

std::string Syntheme::str() const {
  std::string s;
  for (const auto &d : duads) s += "(" + d.str() + ")";
  return s;
}

std::string Total::str() const {
  std::string s;
  for (std::size_t i = 0; i < synthemes.size(); ++i) s += (i ? " " : "") + synthemes[i].str();
  return s;
}

Triple::Triple(std::array<int, 3> s) {
  std::sort(s.begin(), s.end());
  if (s[0] < 1 || s[2] > 6 || s[0] == s[1] || s[1] == s[2]) throw std::invalid_argument("bad 3-subset");
  elems = s;
  if (s[0] != 1) elems = complement();
}

bool Triple::contains(int i) const { return std::find(elems.begin(), elems.end(), i) != elems.end(); }

std::array<int, 3> Triple::complement() const {
  std::array<int, 3> c{};
  int k = 0;
  for (int i = 1; i <= 6; ++i)
    if (!contains(i)) c[k++] = i;
  return c;
}

std::string Triple::str() const {
  std::string s;
  for (int e : elems) s += static_cast<char>('0' + e);
  return s;
}

const std::vector<Duad> &all_duads() {
  static const std::vector<Duad> v = [] {
    std::vector<Duad> d;
    for (int a = 1; a <= 6; ++a)
      for (int b = a + 1; b <= 6; ++b) d.emplace_back(a, b);
    return d;
  }();
  return v;
}

const std::vector<Syntheme> &all_synthemes() {
  static const std::vector<Syntheme> v = [] {
    std::vector<Syntheme> s;
    for (int b = 2; b <= 6; ++b) {
      std::vector<int> rest;
      for (int i = 2; i <= 6; ++i)
        if (i != b) rest.push_back(i);
      for (int j = 1; j < 4; ++j) {
        std::vector<int> r2;
        for (int k = 1; k < 4; ++k)
          if (k != j) r2.push_back(rest[k]);
        s.emplace_back(Duad(1, b), Duad(rest[0], rest[j]), Duad(r2[0], r2[1]));
      }
    }
    std::sort(s.begin(), s.end());
    return s;
  }();
  return v;
}

const std::vector<Total> &all_totals() {
  static const std::vector<Total> v = [] {
    const auto &syn = all_synthemes();
    std::vector<Total> out;
    // Five synthemes cover all duads iff they pairwise share no duad.
    std::vector<std::size_t> pick;
    auto share = [&](std::size_t i, std::size_t j) {
      for (const auto &d : syn[i].duads)
        if (syn[j].contains(d)) return true;
      return false;
    };
    auto rec = [&](auto &self, std::size_t from) -> void {
      if (pick.size() == 5) {
        Total t;
        for (std::size_t k = 0; k < 5; ++k) t.synthemes[k] = syn[pick[k]];
        out.push_back(t);
        return;
      }
      for (std::size_t i = from; i < syn.size(); ++i) {
        bool ok = true;
        for (auto j : pick) ok = ok && !share(i, j);
        if (!ok) continue;
        pick.push_back(i);
        self(self, i + 1);
        pick.pop_back();
      }
    };
    rec(rec, 0);
    return out;
  }();
  return v;
}

const std::vector<Triple> &all_triples() {
  static const std::vector<Triple> v = [] {
    std::vector<Triple> t;
    for (int b = 2; b <= 6; ++b)
      for (int c = b + 1; c <= 6; ++c) t.emplace_back(std::array<int, 3>{1, b, c});
    return t;
  }();
  return v;
}

namespace {
template <class T> std::size_t find_index(const std::vector<T> &v, const T &x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || !(*it == x)) throw std::invalid_argument("element not enumerated");
  return static_cast<std::size_t>(it - v.begin());
}
} // namespace

std::size_t index_of(const Duad &d) { return find_index(all_duads(), d); }
std::size_t index_of(const Syntheme &s) { return find_index(all_synthemes(), s); }
std::size_t index_of(const Triple &t) { return find_index(all_triples(), t); }

Duad act(const Perm &g, const Duad &d) { return {g(d.a), g(d.b)}; }

Syntheme act(const Perm &g, const Syntheme &s) {
  return {act(g, s.duads[0]), act(g, s.duads[1]), act(g, s.duads[2])};
}

Total act(const Perm &g, const Total &t) {
  Total r;
  for (std::size_t i = 0; i < 5; ++i) r.synthemes[i] = act(g, t.synthemes[i]);
  std::sort(r.synthemes.begin(), r.synthemes.end());
  return r;
}

Triple act(const Perm &g, const Triple &t) {
  return Triple({g(t.elems[0]), g(t.elems[1]), g(t.elems[2])});
}

bool trope_contains(const Triple &t, const Syntheme &s) {
  for (const auto &d : s.duads)
    if (t.contains(d.a) == t.contains(d.b)) return false;
  return true;
}

} // namespace nodal::configs
