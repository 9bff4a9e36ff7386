#pragma once

#include "nodal/configs/combinatorics.hpp"
#include "nodal/configs/incidence.hpp"
#include "nodal/varieties/hypersurface.hpp"

#include <json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nodal::varieties {

/// A hyperplane that fails one of the genericity conditions; `condition` names it.
class GenericityFailure : public std::runtime_error {
public:
  GenericityFailure(std::string condition, const std::string &what)
      : std::runtime_error(what), condition_(std::move(condition)) {}
  [[nodiscard]] const std::string &condition() const { return condition_; }

private:
  std::string condition_;
};

struct SectionNode {
  std::optional<configs::Syntheme> line; // empty for the tangency point
  ProjectivePoint point;                 // in the six coordinates
  ProjectivePoint chart_point;           // in the four chart coordinates
  NodeCertificate certificate;
  [[nodiscard]] std::string label() const { return line ? line->str() : "tangency"; }
};

struct TropeRecord {
  configs::Triple triple;
  QMatrix plane;        // 4 x 3 basis in chart coordinates
  MultiPoly restricted; // quartic on the plane
  Rational scale;
  MultiPoly conic;      // restricted = scale * conic^2
  std::vector<std::size_t> nodes;
};

struct SectionModel {
  std::vector<Integer> coeffs; // H: coeffs . u = 0 inside sum u = 0
  QMatrix chart;               // 6 x 4 integral basis of H
  MultiPoly quartic3;
  std::vector<SectionNode> nodes;
  std::vector<TropeRecord> tropes;

  [[nodiscard]] Hypersurface surface() const;
  /// Points are nodes, blocks are tropes.
  [[nodiscard]] configs::IncidenceStructure incidence() const;
  [[nodiscard]] nlohmann::json to_json() const;
};

/// Throws GenericityFailure naming the first violated condition.
SectionModel hyperplane_section(const std::vector<Integer> &coeffs);
/// Section by the tangent hyperplane at a smooth point q of CR4; 16 nodes.
SectionModel tangent_section(const ProjectivePoint &q);
/// Tangent section at the image of sampled S3 points, the first that certifies.
SectionModel sampled_tangent_section(std::uint64_t seed, long max_height);

} // namespace nodal::varieties
