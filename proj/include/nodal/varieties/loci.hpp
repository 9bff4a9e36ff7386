#pragma once

#include "nodal/configs/combinatorics.hpp"
#include "nodal/varieties/hypersurface.hpp"

#include <string>
#include <vector>

namespace nodal::varieties {

struct LabeledPoint {
  std::string label;
  ProjectivePoint point;
};

struct LabeledSubspace {
  std::string label;
  LinearSubspace space;
};

/// Orbits of the seed loci under coordinate permutation, labels carried along.
struct SpecialLoci {
  Kind kind;
  std::vector<LabeledPoint> nodes;             // S3: 10, by 3-subset
  std::vector<LabeledSubspace> planes;         // S3: 15, by syntheme
  std::vector<LabeledSubspace> double_lines;   // CR4: 15, by syntheme
  std::vector<LabeledPoint> line_points;       // CR4: 15, by duad
  std::vector<LabeledPoint> cardinal;          // CR4: 10 hyperplane coefficient vectors, by 3-subset
};

SpecialLoci special_loci(Kind kind);

/// Seeds of each family; the orbit construction moves these.
QVector segre_node(const configs::Triple &t);
LinearSubspace segre_plane(const configs::Syntheme &s);
LinearSubspace double_line(const configs::Syntheme &s);
QVector line_point(const configs::Duad &d);
QVector cardinal_vector(const configs::Triple &t);

} // namespace nodal::varieties
