#pragma once

#include "nodal/exact/multipoly.hpp"
#include "nodal/varieties/space.hpp"

#include <string>
#include <array>
#include <cstdint>
#include <variant>

namespace nodal::varieties {

/// Homogeneous form on the common zero locus of some linear forms.
class Hypersurface {
public:
  Hypersurface(std::string name, MultiPoly form, QMatrix constraints);

  [[nodiscard]] const std::string &name() const { return name_; }
  [[nodiscard]] const MultiPoly &form() const { return form_; }
  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] std::size_t num_vars() const { return form_.num_vars(); }
  /// Rows are the ambient linear constraints.
  [[nodiscard]] const QMatrix &constraints() const { return constraints_; }
  [[nodiscard]] const LinearSubspace &ambient() const { return ambient_; }
  /// Dimension of the projective space cut out by the constraints.
  [[nodiscard]] std::size_t projective_dim() const { return ambient_.dim() - 1; }
  [[nodiscard]] bool in_ambient(const QVector &p) const { return ambient_.contains(p); }

private:
  std::string name_;
  MultiPoly form_;
  int degree_;
  QMatrix constraints_;
  LinearSubspace ambient_;
};

enum class Kind { segre, cr };

/// Segre cubic {sum z = 0, sum z^3 = 0} or the quartic {sum u = 0, 4 sum u^4 = (sum u^2)^2}.
Hypersurface build_variety(Kind kind);
MultiPoly power_sum(std::size_t n, unsigned k);
/// Variable permutation for a permutation of {1..6}, 0-based.
std::vector<std::size_t> coordinate_perm(const std::array<std::uint8_t, 6> &images);

struct NodeCertificate {
  ProjectivePoint point;
  Rational value;              // form at the point, zero
  QVector constrained_gradient; // chart transpose times gradient, zero
  QMatrix chart;               // integral basis of the ambient, columns
  QMatrix chart_hessian;       // chart^T H chart
  std::size_t hessian_rank;
  std::size_t projective_dim;
  bool is_ordinary;
};

struct NodeFailure {
  enum class Reason { not_on_variety, smooth };
  Reason reason;
  ProjectivePoint point;
  QVector detail; // form value or constrained gradient
  [[nodiscard]] std::string what() const;
};

using NodeResult = std::variant<NodeCertificate, NodeFailure>;

/// Throws std::invalid_argument when p violates the ambient constraints.
NodeResult certify_ordinary_node(const Hypersurface &v, const ProjectivePoint &p);

struct Revalidation {
  bool value_zero;
  bool gradient_in_constraint_span;
  std::size_t hessian_rank;
  bool ok;
};

/// Recheck a certificate by a separate route: gradient against the span of the constraint
/// rows, rank by fraction-free elimination.
Revalidation revalidate(const Hypersurface &v, const NodeCertificate &c);

struct DoubleLineCertificate {
  bool form_vanishes;
  bool gradient_vanishes;
  [[nodiscard]] bool holds() const { return form_vanishes && gradient_vanishes; }
};

/// Throws std::invalid_argument when the line leaves the ambient.
DoubleLineCertificate verify_double_line(const Hypersurface &v, const LinearSubspace &line);

} // namespace nodal::varieties
