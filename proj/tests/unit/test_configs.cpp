#include "nodal/configs/combinatorics.hpp"
#include "nodal/configs/graph.hpp"
#include "nodal/configs/incidence.hpp"
#include "nodal/configs/orbits.hpp"

#include <doctest.h>

#include <numeric>

#include <algorithm>
#include <random>
#include <set>

using namespace nodal::configs;

TEST_CASE("enumeration sizes") {
  CHECK(all_duads().size() == 15);
  CHECK(all_synthemes().size() == 15);
  CHECK(all_totals().size() == 6);
  CHECK(all_triples().size() == 10);
  CHECK(symmetric_group().size() == 720);
}

TEST_CASE("synthemes by brute force over set partitions") {
  std::set<Syntheme> brute;
  std::array<int, 6> a{1, 2, 3, 4, 5, 6};
  do {
    if (Duad(a[0], a[1]).disjoint(Duad(a[2], a[3])))
      brute.insert(Syntheme(Duad(a[0], a[1]), Duad(a[2], a[3]), Duad(a[4], a[5])));
  } while (std::next_permutation(a.begin(), a.end()));
  CHECK(brute.size() == 15);
  CHECK(std::equal(brute.begin(), brute.end(), all_synthemes().begin()));
}

TEST_CASE("totals cover every duad once") {
  for (const auto &t : all_totals()) {
    std::multiset<Duad> seen;
    for (const auto &s : t.synthemes)
      for (const auto &d : s.duads) seen.insert(d);
    CHECK(seen.size() == 15);
    for (const auto &d : all_duads()) CHECK(seen.count(d) == 1);
  }
}

TEST_CASE("two synthemes share at most one duad") {
  const auto &syn = all_synthemes();
  for (std::size_t i = 0; i < syn.size(); ++i)
    for (std::size_t j = i + 1; j < syn.size(); ++j) {
      int shared = 0;
      for (const auto &d : syn[i].duads) shared += syn[j].contains(d);
      CHECK(shared <= 1);
    }
}

TEST_CASE("permutations") {
  Perm c = Perm::parse("(123456)");
  CHECK(c(6) == 1);
  CHECK(c.str() == "(123456)");
  CHECK((c * c.inverse()).is_identity());
  Perm g = Perm::parse("(12)(34)"), h = Perm::parse("(23)");
  CHECK((g * h)(2) == g(h(2)));
  CHECK(act(Perm::parse("(16)"), Triple({1, 2, 3})) == Triple({1, 4, 5}));
  CHECK_THROWS(Perm::parse("(11)"));
}

TEST_CASE("trope incidence model") {
  auto m = trope_incidence_model();
  auto t = m.type();
  REQUIRE(t);
  CHECK(*t == ConfigurationType{15, 4, 10, 6});
  CHECK(t->str() == "(15_4,10_6)");
  std::size_t h123 = index_of(Triple({1, 2, 3}));
  CHECK(m.block_size(h123) == 6);
  for (auto p : m.block_points(h123)) {
    Syntheme s = all_synthemes()[p];
    for (int i = 1; i <= 3; ++i) CHECK(s.mate(i) > 3);
  }
}

TEST_CASE("line incidence is a (15_3) configuration") {
  auto l = line_incidence_model();
  REQUIRE(l.type());
  CHECK(*l.type() == ConfigurationType{15, 3, 15, 3});
  CHECK(l.type()->str() == "(15_3)");
}

TEST_CASE("incidence isomorphism") {
  auto m = trope_incidence_model();
  std::mt19937_64 rng(7);
  std::vector<std::size_t> pp(15), bp(10);
  std::iota(pp.begin(), pp.end(), 0);
  std::iota(bp.begin(), bp.end(), 0);
  std::shuffle(pp.begin(), pp.end(), rng);
  std::shuffle(bp.begin(), bp.end(), rng);
  std::vector<std::vector<bool>> inc(15, std::vector<bool>(10));
  for (std::size_t p = 0; p < 15; ++p)
    for (std::size_t b = 0; b < 10; ++b) inc[pp[p]][bp[b]] = m.incident(p, b);
  IncidenceStructure shuffled(m.point_labels(), m.block_labels(), inc);
  auto r = incidence_isomorphic(m, shuffled);
  REQUIRE(r);
  CHECK(check_relabeling(m, shuffled, *r));
  CHECK_FALSE(incidence_isomorphic(m, line_incidence_model()));
  // Moving one incidence breaks the configuration.
  inc[0].flip();
  IncidenceStructure broken(m.point_labels(), m.block_labels(), inc);
  CHECK_FALSE(incidence_isomorphic(m, broken));
}

TEST_CASE("conjugacy graph n = 3") {
  auto g = conjugacy_graph(3);
  CHECK(g.size() == 15);
  for (std::size_t v = 0; v < 10; ++v) {
    CHECK(g.mark(v) == 1);
    CHECK(g.degree(v) == 5);
  }
  for (std::size_t v = 10; v < 15; ++v) {
    CHECK(g.mark(v) == 2);
    CHECK(g.degree(v) == 8);
  }
  auto v12 = *g.find("12");
  for (auto l : {"34", "35", "45", "16", "26"}) CHECK(g.multiplicity(v12, *g.find(l)) == 1);
  CHECK(g.contains_rule_edges());
  CHECK_FALSE(g.rule_edges_only());
  std::vector<std::size_t> pet(10);
  std::iota(pet.begin(), pet.end(), 0);
  auto p = g.induced(pet);
  for (std::size_t v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
  CHECK(girth(p) == 5);
  CHECK(vertex_transitive(p));
  CHECK_FALSE(vertex_transitive(g));
  CHECK_THROWS(conjugacy_graph(5));
  auto g7 = conjugacy_graph(7, {0, 0, 10, 0, 0, 1});
  CHECK(g7.multiplicity(0, 10) == 2);
  CHECK(g7.multiplicity(0, 1) == 0);
}

TEST_CASE("S6 orbits on the basic sets") {
  auto d = s6_orbits(all_duads(), [](const Perm &g, const Duad &x) { return act(g, x); });
  REQUIRE(d.size() == 1);
  CHECK(d[0].members.size() == 15);
  CHECK(d[0].stabilizer_order == 48);
  auto s = s6_orbits(all_synthemes(), [](const Perm &g, const Syntheme &x) { return act(g, x); });
  REQUIRE(s.size() == 1);
  CHECK(s[0].stabilizer_order == 48);
  auto t = s6_orbits(all_totals(), [](const Perm &g, const Total &x) { return act(g, x); });
  REQUIRE(t.size() == 1);
  CHECK(t[0].members.size() == 6);
  CHECK(t[0].stabilizer_order == 120);
  auto tr = s6_orbits(all_triples(), [](const Perm &g, const Triple &x) { return act(g, x); });
  REQUIRE(tr.size() == 1);
  CHECK(tr[0].stabilizer_order == 72);
  std::vector<int> pts{1, 2, 3, 4, 5, 6};
  CHECK_THROWS_AS(s6_orbits(pts, [](const Perm &g, int i) { return g(i) == 1 ? 1 : i; }), NotAnAction);
}
