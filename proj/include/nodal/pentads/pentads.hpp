#pragma once

#include "nodal/configs/incidence.hpp"
#include "nodal/surface/divisor.hpp"

#include <array>
#include <json.hpp>
#include <string>
#include <vector>

namespace nodal::pentads {

using configs::Duad;
using Pentad = std::array<Duad, 5>;

/// Sorted copy; throws on repeated nodes.
Pentad make_pentad(std::vector<Duad> nodes);
std::string pentad_str(const Pentad &p);
Pentad act(const configs::Perm &g, const Pentad &p);

/// The ten trope-conics sigma(E_ab), ab in [1,5], as node sets; trope t is labeled by its duad.
struct Trope {
  Duad label;
  std::array<Duad, 6> nodes;
  [[nodiscard]] bool contains(const Duad &x) const;
};
const std::vector<Trope> &tropes();
configs::IncidenceStructure trope_structure();

struct TropeTriple {
  Duad trope;
  std::array<Duad, 3> nodes;
};

struct PentadClass {
  Pentad pentad;
  std::size_t max_on_trope = 0;
  bool admissible = false; // no trope holds 4 or more nodes
  bool goepel = false;     // no trope holds 3 or more nodes
  std::vector<TropeTriple> trope_triples;
  std::size_t orbit_id = 0;
};

PentadClass classify(const Pentad &p);

struct OrbitRow {
  std::size_t orbit_id = 0;
  Pentad representative;
  std::size_t size = 0;
  bool admissible = false, goepel = false;
  std::size_t trope_triple_count = 0;
  std::vector<int> degree_sequence; // of the graph on [1,6] with the five duads as edges
  std::vector<std::string> fiber_hints;
};

struct Classification {
  std::vector<PentadClass> pentads; // all 3003, lexicographic
  std::vector<OrbitRow> orbits;
  std::size_t admissible_count = 0, goepel_count = 0;
  [[nodiscard]] nlohmann::json to_json() const;
};

Classification classify_all();

/// For each node x_i: the tropes through x_i and two more pentad nodes (non-reduced fiber components).
std::vector<std::string> fiber_hints(const PentadClass &c);

// Graph readings of the admissibility criterion.
struct GraphReading {
  std::string name;
  std::size_t agree = 0, disagree = 0;
  std::vector<std::string> mismatches; // pentads where the reading and incidence differ
};

struct GraphCrosscheck {
  std::vector<GraphReading> readings;
  /// Three nodes lie on a trope iff their edges form a triangle, or a two-edge chain plus a disjoint segment.
  std::size_t triple_rule_agree = 0, triple_rule_disagree = 0;
  [[nodiscard]] nlohmann::json to_json() const;
};

GraphCrosscheck graph_criterion_crosscheck(const Classification &c);

struct TropeIdentity {
  TropeTriple triple;
  surface::DivisorClass lhs, rhs; // eta - E_i - E_j - E_k and 2 sigma(E_y) + the other three E
  [[nodiscard]] bool holds() const { return lhs == rhs; }
};

struct PencilRecord {
  std::vector<surface::DivisorClass> pencils; // F_i
  bool norms_zero = false, pairings_two = false, degrees_eight = false;
  bool decompositions = false; // F_i = (eta - E_i - E_j - E_k) + (eta - E_i - E_l - E_m)
  surface::DivisorClass half_sum;
  Rational half_sum_norm;
  bool half_sum_integral = false;
  std::vector<TropeIdentity> trope_identities;
  [[nodiscard]] bool holds() const;
};

/// Throws std::invalid_argument for a non-admissible pentad.
PencilRecord pencil_classes(const Pentad &p);

} // namespace nodal::pentads
