#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace nodal::configs {

/// Permutation of {1..6}; img[i-1] is the image of i.
class Perm {
public:
  Perm();
  explicit Perm(std::array<std::uint8_t, 6> img);
  /// Cycle notation such as "(12)(345)" or "()" for the identity.
  static Perm parse(const std::string &cycles);

  [[nodiscard]] int operator()(int i) const { return img_[i - 1]; }
  /// (g * h)(i) = g(h(i)).
  friend Perm operator*(const Perm &g, const Perm &h);
  [[nodiscard]] Perm inverse() const;
  [[nodiscard]] bool is_identity() const { return *this == Perm(); }
  [[nodiscard]] std::string str() const;
  [[nodiscard]] const std::array<std::uint8_t, 6> &images() const { return img_; }
  friend auto operator<=>(const Perm &, const Perm &) = default;

private:
  std::array<std::uint8_t, 6> img_;
};

/// All 720 permutations in lexicographic order of image tuples.
const std::vector<Perm> &symmetric_group();
/// (12) and (123456).
std::array<Perm, 2> s6_generators();

struct Duad {
  int a = 1, b = 2;
  Duad() = default;
  Duad(int x, int y);
  [[nodiscard]] bool contains(int i) const { return a == i || b == i; }
  [[nodiscard]] bool disjoint(const Duad &o) const;
  [[nodiscard]] std::string str() const;
  static Duad parse(const std::string &s);
  friend auto operator<=>(const Duad &, const Duad &) = default;
};

struct Syntheme {
  std::array<Duad, 3> duads;
  Syntheme() = default;
  Syntheme(Duad x, Duad y, Duad z);
  [[nodiscard]] bool contains(const Duad &d) const;
  /// Partner of i under the matching.
  [[nodiscard]] int mate(int i) const;
  [[nodiscard]] std::string str() const;
  friend auto operator<=>(const Syntheme &, const Syntheme &) = default;
};

struct Total {
  std::array<Syntheme, 5> synthemes;
  [[nodiscard]] std::string str() const;
  friend auto operator<=>(const Total &, const Total &) = default;
};

/// 3-subset of [1,6] up to complement; stored as the half containing 1.
struct Triple {
  std::array<int, 3> elems{1, 2, 3};
  Triple() = default;
  /// Any 3-subset; canonicalized to the half containing 1.
  explicit Triple(std::array<int, 3> s);
  [[nodiscard]] bool contains(int i) const;
  [[nodiscard]] std::array<int, 3> complement() const;
  [[nodiscard]] std::string str() const;
  friend auto operator<=>(const Triple &, const Triple &) = default;
};

const std::vector<Duad> &all_duads();
const std::vector<Syntheme> &all_synthemes();
const std::vector<Total> &all_totals();
const std::vector<Triple> &all_triples();

std::size_t index_of(const Duad &d);
std::size_t index_of(const Syntheme &s);
std::size_t index_of(const Triple &t);

Duad act(const Perm &g, const Duad &d);
Syntheme act(const Perm &g, const Syntheme &s);
Total act(const Perm &g, const Total &t);
Triple act(const Perm &g, const Triple &t);

/// Syntheme s lies on trope (abc) iff each duad of s meets {a,b,c} once.
bool trope_contains(const Triple &t, const Syntheme &s);

} // namespace nodal::configs
