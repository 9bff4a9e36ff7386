#pragma once

#include "nodal/configs/combinatorics.hpp"

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace nodal::configs {

struct ConfigurationType {
  std::size_t points, point_degree, blocks, block_size;
  friend bool operator==(const ConfigurationType &, const ConfigurationType &) = default;
  [[nodiscard]] std::string str() const;
};

class IncidenceStructure {
public:
  IncidenceStructure(std::vector<std::string> point_labels, std::vector<std::string> block_labels,
                     std::vector<std::vector<bool>> incidence);

  [[nodiscard]] std::size_t num_points() const { return points_.size(); }
  [[nodiscard]] std::size_t num_blocks() const { return blocks_.size(); }
  [[nodiscard]] const std::vector<std::string> &point_labels() const { return points_; }
  [[nodiscard]] const std::vector<std::string> &block_labels() const { return blocks_; }
  [[nodiscard]] bool incident(std::size_t p, std::size_t b) const { return inc_[p][b]; }
  [[nodiscard]] std::size_t point_degree(std::size_t p) const;
  [[nodiscard]] std::size_t block_size(std::size_t b) const;
  [[nodiscard]] std::vector<std::size_t> block_points(std::size_t b) const;
  /// Set when every point has the same degree and every block the same size.
  [[nodiscard]] std::optional<ConfigurationType> type() const;
  [[nodiscard]] nlohmann::json to_json() const;

private:
  std::vector<std::string> points_, blocks_;
  std::vector<std::vector<bool>> inc_;
};

/// Points are the 15 synthemes, blocks the 10 cardinal 3-subsets.
IncidenceStructure trope_incidence_model();
/// Points are the 15 duads, blocks the 15 synthemes containing them.
IncidenceStructure line_incidence_model();

struct Relabeling {
  std::vector<std::size_t> point_map; // A point -> B point
  std::vector<std::size_t> block_map; // A block -> B block
};

std::optional<Relabeling> incidence_isomorphic(const IncidenceStructure &a,
                                               const IncidenceStructure &b);
/// True when r carries every incidence of a to one of b and back.
bool check_relabeling(const IncidenceStructure &a, const IncidenceStructure &b, const Relabeling &r);

} // namespace nodal::configs
