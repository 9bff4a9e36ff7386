#include "nodal/pentads/pentads.hpp"

#include "nodal/configs/orbits.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace nodal::pentads {

using configs::all_duads;
using surface::DivisorClass;

Pentad make_pentad(std::vector<Duad> nodes) {
  if (nodes.size() != 5) throw std::invalid_argument("a pentad has five nodes");
  std::sort(nodes.begin(), nodes.end());
  if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end())
    throw std::invalid_argument("pentad nodes must be distinct");
  Pentad p;
  std::copy(nodes.begin(), nodes.end(), p.begin());
  return p;
}

std::string pentad_str(const Pentad &p) {
  std::string s = "{";
  for (std::size_t i = 0; i < 5; ++i) s += (i ? "," : "") + p[i].str();
  return s + "}";
}

Pentad act(const configs::Perm &g, const Pentad &p) {
  std::vector<Duad> v;
  for (const auto &x : p) v.push_back(configs::act(g, x));
  return make_pentad(v);
}

bool Trope::contains(const Duad &x) const { return std::find(nodes.begin(), nodes.end(), x) != nodes.end(); }

const std::vector<Trope> &tropes() {
  static const std::vector<Trope> t = [] {
    std::vector<Trope> out;
    for (const auto &ab : surface::L_nodes()) {
      Trope tr{ab, {}};
      std::size_t k = 0;
      const auto s = surface::sigma_E(ab);
      for (const auto &x : all_duads())
        if (!s[surface::coord(x)].is_zero()) tr.nodes.at(k++) = x;
      if (k != 6) throw std::logic_error("trope-conic without six nodes");
      out.push_back(tr);
    }
    return out;
  }();
  return t;
}

configs::IncidenceStructure trope_structure() {
  std::vector<std::string> points, blocks;
  for (const auto &x : all_duads()) points.push_back(x.str());
  for (const auto &t : tropes()) blocks.push_back("sigma(E" + t.label.str() + ")");
  std::vector<std::vector<bool>> inc(15, std::vector<bool>(tropes().size()));
  for (std::size_t i = 0; i < 15; ++i)
    for (std::size_t j = 0; j < tropes().size(); ++j) inc[i][j] = tropes()[j].contains(all_duads()[i]);
  return configs::IncidenceStructure(points, blocks, inc);
}

PentadClass classify(const Pentad &p) {
  PentadClass c;
  c.pentad = p;
  for (const auto &t : tropes()) {
    std::vector<Duad> on;
    for (const auto &x : p)
      if (t.contains(x)) on.push_back(x);
    c.max_on_trope = std::max(c.max_on_trope, on.size());
    for (std::size_t i = 0; i < on.size(); ++i)
      for (std::size_t j = i + 1; j < on.size(); ++j)
        for (std::size_t k = j + 1; k < on.size(); ++k) c.trope_triples.push_back({t.label, {on[i], on[j], on[k]}});
  }
  c.admissible = c.max_on_trope < 4;
  c.goepel = c.max_on_trope < 3;
  return c;
}

std::vector<std::string> fiber_hints(const PentadClass &c) {
  std::vector<std::string> out;
  for (const auto &x : c.pentad) {
    std::string s = "F" + x.str() + ":";
    bool any = false;
    for (const auto &tt : c.trope_triples)
      if (std::find(tt.nodes.begin(), tt.nodes.end(), x) != tt.nodes.end())
        s += (any ? ", " : " ") + std::string("2 sigma(E") + tt.trope.str() + ")", any = true;
    out.push_back(any ? s : s + " none");
  }
  return out;
}

namespace {

std::vector<int> degree_sequence(const Pentad &p) {
  std::vector<int> d(6, 0);
  for (const auto &x : p) ++d[x.a - 1], ++d[x.b - 1];
  std::sort(d.rbegin(), d.rend());
  return d;
}

nlohmann::json pentad_json(const Pentad &p) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto &x : p) a.push_back(x.str());
  return a;
}

} // namespace

Classification classify_all() {
  Classification out;
  std::vector<Pentad> all;
  const auto &d = all_duads();
  for (std::size_t a = 0; a < 15; ++a)
    for (std::size_t b = a + 1; b < 15; ++b)
      for (std::size_t c = b + 1; c < 15; ++c)
        for (std::size_t e = c + 1; e < 15; ++e)
          for (std::size_t f = e + 1; f < 15; ++f) all.push_back({d[a], d[b], d[c], d[e], d[f]});
  for (const auto &p : all) out.pentads.push_back(classify(p));
  auto orbits = configs::s6_orbits(all, [](const configs::Perm &g, const Pentad &p) { return act(g, p); });
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    for (auto i : orbits[o].members) out.pentads[i].orbit_id = o;
    const auto &rep = out.pentads[orbits[o].members.front()];
    OrbitRow row{o, rep.pentad, orbits[o].members.size(), rep.admissible, rep.goepel, rep.trope_triples.size(),
                 degree_sequence(rep.pentad), fiber_hints(rep)};
    for (auto i : orbits[o].members) {
      const auto &pc = out.pentads[i];
      if (pc.admissible != row.admissible || pc.goepel != row.goepel || pc.trope_triples.size() != row.trope_triple_count)
        throw std::logic_error("admissibility is not constant on an S6 orbit");
    }
    out.orbits.push_back(std::move(row));
  }
  for (const auto &pc : out.pentads) out.admissible_count += pc.admissible, out.goepel_count += pc.goepel;
  return out;
}

nlohmann::json Classification::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto &r : orbits)
    rows.push_back({{"orbit_id", r.orbit_id},
                    {"representative", pentad_json(r.representative)},
                    {"size", r.size},
                    {"admissible", r.admissible},
                    {"goepel", r.goepel},
                    {"trope_triple_count", r.trope_triple_count},
                    {"graph_degree_sequence", r.degree_sequence},
                    {"fiber_hints", r.fiber_hints}});
  return {{"pentads", pentads.size()},
          {"admissible", admissible_count},
          {"goepel", goepel_count},
          {"orbits", rows}};
}

namespace {

struct Component {
  std::size_t vertices = 0, edges = 0;
};

std::vector<Component> components(const std::vector<Duad> &edges) {
  std::vector<int> parent(7);
  for (int i = 0; i <= 6; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::set<int> used;
  for (const auto &e : edges) parent[find(e.a)] = find(e.b), used.insert(e.a), used.insert(e.b);
  std::map<int, Component> comp;
  for (int v : used) comp[find(v)].vertices++;
  for (const auto &e : edges) comp[find(e.a)].edges++;
  std::vector<Component> out;
  for (auto &[k, c] : comp) out.push_back(c);
  return out;
}

bool is_triangle(const Duad &x, const Duad &y, const Duad &z) {
  std::set<int> v{x.a, x.b, y.a, y.b, z.a, z.b};
  return v.size() == 3;
}

// Exactly a triangle component and a segment component.
bool triangle_segment_components(const std::vector<Duad> &edges) {
  auto c = components(edges);
  if (c.size() != 2) return false;
  auto has = [&](std::size_t v, std::size_t e) {
    return std::any_of(c.begin(), c.end(), [&](const Component &k) { return k.vertices == v && k.edges == e; });
  };
  return has(3, 3) && has(2, 1);
}

// Some triangle plus an edge avoiding its vertices.
bool triangle_segment_subgraph(const std::vector<Duad> &edges) {
  const std::size_t n = edges.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        if (!is_triangle(edges[i], edges[j], edges[k])) continue;
        std::set<int> tv{edges[i].a, edges[i].b, edges[j].a, edges[j].b};
        for (std::size_t l = 0; l < n; ++l)
          if (l != i && l != j && l != k && !tv.contains(edges[l].a) && !tv.contains(edges[l].b)) return true;
      }
  return false;
}

// Four edges forming a triangle plus segment, or two vertex-disjoint two-edge chains.
bool four_on_trope_shape(const std::vector<Duad> &four) {
  auto c = components(four);
  if (triangle_segment_components(four)) return true;
  return c.size() == 2 && c[0].vertices == 3 && c[0].edges == 2 && c[1].vertices == 3 && c[1].edges == 2;
}

bool triple_on_trope_shape(const std::vector<Duad> &three) {
  if (is_triangle(three[0], three[1], three[2])) return true;
  auto c = components(three);
  return c.size() == 2 && ((c[0].vertices == 3 && c[0].edges == 2 && c[1].vertices == 2) ||
                           (c[1].vertices == 3 && c[1].edges == 2 && c[0].vertices == 2));
}

std::vector<Duad> without(const Pentad &p, std::size_t i) {
  std::vector<Duad> v;
  for (std::size_t k = 0; k < 5; ++k)
    if (k != i) v.push_back(p[k]);
  return v;
}

} // namespace

nlohmann::json GraphCrosscheck::to_json() const {
  nlohmann::json r = nlohmann::json::array();
  for (const auto &g : readings)
    r.push_back({{"reading", g.name}, {"agree", g.agree}, {"disagree", g.disagree}, {"mismatches", g.mismatches}});
  return {{"readings", r}, {"triple_rule", {{"agree", triple_rule_agree}, {"disagree", triple_rule_disagree}}}};
}

GraphCrosscheck graph_criterion_crosscheck(const Classification &c) {
  using Pred = std::function<bool(const Pentad &)>;
  auto exists = [](auto f) {
    return [f](const Pentad &p) {
      for (std::size_t i = 0; i < 5; ++i)
        if (f(without(p, i))) return true;
      return false;
    };
  };
  auto every = [](auto f) {
    return [f](const Pentad &p) {
      for (std::size_t i = 0; i < 5; ++i)
        if (!f(without(p, i))) return false;
      return true;
    };
  };
  const std::vector<std::pair<std::string, Pred>> readings{
      {"some edge deletion leaves a triangle component and a segment component", exists(triangle_segment_components)},
      {"some edge deletion leaves a triangle and a disjoint segment as subgraphs", exists(triangle_segment_subgraph)},
      {"every edge deletion leaves a triangle component and a segment component", every(triangle_segment_components)},
      {"every edge deletion leaves a triangle and a disjoint segment as subgraphs", every(triangle_segment_subgraph)},
      {"no edge deletion leaves a triangle component and a segment component",
       [=](const Pentad &p) { return !exists(triangle_segment_components)(p); }},
      {"no edge deletion leaves a triangle and a disjoint segment as subgraphs",
       [=](const Pentad &p) { return !exists(triangle_segment_subgraph)(p); }},
      {"no four edges form a triangle plus segment or two disjoint two-edge chains",
       [=](const Pentad &p) { return !exists(four_on_trope_shape)(p); }},
  };
  GraphCrosscheck out;
  for (const auto &[name, pred] : readings) {
    GraphReading g{name, 0, 0, {}};
    for (const auto &pc : c.pentads) {
      if (pred(pc.pentad) == pc.admissible) {
        ++g.agree;
      } else {
        ++g.disagree;
        g.mismatches.push_back(pentad_str(pc.pentad) + (pc.admissible ? " admissible" : " not admissible"));
      }
    }
    out.readings.push_back(std::move(g));
  }
  const auto &d = all_duads();
  for (std::size_t a = 0; a < 15; ++a)
    for (std::size_t b = a + 1; b < 15; ++b)
      for (std::size_t e = b + 1; e < 15; ++e) {
        bool on = std::any_of(tropes().begin(), tropes().end(), [&](const Trope &t) {
          return t.contains(d[a]) && t.contains(d[b]) && t.contains(d[e]);
        });
        (on == triple_on_trope_shape({d[a], d[b], d[e]}) ? out.triple_rule_agree : out.triple_rule_disagree)++;
      }
  return out;
}

bool PencilRecord::holds() const {
  return norms_zero && pairings_two && degrees_eight && decompositions && half_sum_integral && half_sum_norm == 10 &&
         std::all_of(trope_identities.begin(), trope_identities.end(), [](const TropeIdentity &t) { return t.holds(); });
}

PencilRecord pencil_classes(const Pentad &p) {
  const auto c = classify(p);
  if (!c.admissible) throw std::invalid_argument("pentad " + pentad_str(p) + " is not admissible");
  PencilRecord r;
  const auto eta = DivisorClass::eta();
  const std::vector<Duad> nodes(p.begin(), p.end());
  for (const auto &x : p) r.pencils.push_back(Rational(2) * eta - DivisorClass::node(x) - DivisorClass::sum(nodes));
  r.norms_zero = r.pairings_two = r.degrees_eight = r.decompositions = true;
  for (std::size_t i = 0; i < 5; ++i) {
    const auto &f = r.pencils[i];
    r.norms_zero = r.norms_zero && surface::norm(f) == 0;
    r.degrees_eight = r.degrees_eight && surface::degree(f) == 8;
    for (std::size_t j = i + 1; j < 5; ++j) r.pairings_two = r.pairings_two && surface::pair(f, r.pencils[j]) == 2;
    // Every split of the other four nodes into two pairs.
    std::vector<std::size_t> o;
    for (std::size_t k = 0; k < 5; ++k)
      if (k != i) o.push_back(k);
    const std::size_t splits[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    for (const auto &s : splits) {
      auto part = [&](std::size_t u, std::size_t v) {
        return eta - DivisorClass::node(p[i]) - DivisorClass::node(p[o[u]]) - DivisorClass::node(p[o[v]]);
      };
      r.decompositions = r.decompositions && part(s[0], s[1]) + part(s[2], s[3]) == f;
    }
  }
  for (const auto &f : r.pencils) r.half_sum = r.half_sum + Rational(1, 2) * f;
  r.half_sum_norm = surface::norm(r.half_sum);
  r.half_sum_integral = std::all_of(r.half_sum.coords.begin(), r.half_sum.coords.end(),
                                    [](const Rational &x) { return x.is_integer(); });
  for (const auto &tt : c.trope_triples) {
    DivisorClass lhs = eta, rhs = Rational(2) * surface::sigma_E(tt.trope);
    for (const auto &x : tt.nodes) lhs = lhs - DivisorClass::node(x);
    const auto &tr = *std::find_if(tropes().begin(), tropes().end(), [&](const Trope &t) { return t.label == tt.trope; });
    for (const auto &x : tr.nodes)
      if (std::find(tt.nodes.begin(), tt.nodes.end(), x) == tt.nodes.end()) rhs = rhs + DivisorClass::node(x);
    r.trope_identities.push_back({tt, lhs, rhs});
  }
  return r;
}

} // namespace nodal::pentads
