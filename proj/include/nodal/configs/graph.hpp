#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace nodal::configs {

/// Vertices marked with h(x); symmetric edge multiplicities, zero diagonal.
class MarkedGraph {
public:
  MarkedGraph(int n, std::vector<std::string> labels, std::vector<int> marks);

  [[nodiscard]] int class_n() const { return n_; }
  [[nodiscard]] std::size_t size() const { return labels_.size(); }
  [[nodiscard]] const std::vector<std::string> &labels() const { return labels_; }
  [[nodiscard]] int mark(std::size_t v) const { return marks_[v]; }
  [[nodiscard]] int multiplicity(std::size_t u, std::size_t v) const { return mult_[u][v]; }
  void set_multiplicity(std::size_t u, std::size_t v, int m);
  /// Number of neighbours, ignoring multiplicity.
  [[nodiscard]] std::size_t degree(std::size_t v) const;
  [[nodiscard]] std::optional<std::size_t> find(const std::string &label) const;
  [[nodiscard]] MarkedGraph induced(const std::vector<std::size_t> &vertices) const;
  /// Edges the rule h(x)+h(x')-n > 0 forces, with that multiplicity.
  [[nodiscard]] int rule_multiplicity(std::size_t u, std::size_t v) const;
  /// Every forced edge is present with at least the forced multiplicity.
  [[nodiscard]] bool contains_rule_edges() const;
  [[nodiscard]] bool rule_edges_only() const;
  [[nodiscard]] nlohmann::json to_json() const;

private:
  int n_;
  std::vector<std::string> labels_;
  std::vector<int> marks_;
  std::vector<std::vector<int>> mult_;
};

/// n = 3: Petersen graph on duads of [1,5] joined to K5 on {a6}.
/// Other n: vertices from the given marks and only the rule-forced edges.
MarkedGraph conjugacy_graph(int n, const std::vector<int> &alpha = {});

/// Shortest cycle length; nullopt for a forest.
std::optional<std::size_t> girth(const MarkedGraph &g);
/// Mark- and multiplicity-preserving isomorphism a -> b with u fixed to v, if any.
std::optional<std::vector<std::size_t>> graph_isomorphism(const MarkedGraph &a, const MarkedGraph &b,
                                                          std::size_t u = 0, std::size_t v = 0);
bool vertex_transitive(const MarkedGraph &g);

} // namespace nodal::configs
