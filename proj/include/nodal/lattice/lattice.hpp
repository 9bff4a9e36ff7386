#pragma once

#include "nodal/lattice/zmatrix.hpp"

#include <json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nodal::lattice {

struct DegenerateLattice : std::domain_error {
  using std::domain_error::domain_error;
};

/// Glue or reflection data that would leave the integers; message names the culprit.
struct IntegralityFailure : std::domain_error {
  using std::domain_error::domain_error;
};

struct Signature {
  std::size_t positive = 0, negative = 0, zero = 0;
  friend bool operator==(const Signature &, const Signature &) = default;
};

Signature signature(const QMatrix &symmetric);

/// Free Z-module with an integral symmetric form. If built from rational data the
/// form is multiplied by `scale` to clear denominators.
class IntegerLattice {
public:
  IntegerLattice() = default;
  explicit IntegerLattice(ZMatrix gram, std::vector<std::string> labels = {}, Integer scale = 1);
  static IntegerLattice from_rational_gram(const QMatrix &gram, std::vector<std::string> labels = {});

  [[nodiscard]] std::size_t rank() const { return gram_.rows(); }
  [[nodiscard]] const ZMatrix &gram() const { return gram_; }
  [[nodiscard]] const std::vector<std::string> &labels() const { return labels_; }
  [[nodiscard]] const Integer &scale() const { return scale_; }
  [[nodiscard]] const Integer &det() const { return det_; }
  [[nodiscard]] const Signature &signature() const { return sig_; }
  [[nodiscard]] bool is_even() const;
  [[nodiscard]] bool nondegenerate() const { return det_ != 0; }

  [[nodiscard]] Integer pair(const ZVector &u, const ZVector &v) const;
  [[nodiscard]] Rational pair(const QVector &u, const QVector &v) const;
  [[nodiscard]] Integer norm(const ZVector &v) const { return pair(v, v); }
  [[nodiscard]] Rational norm(const QVector &v) const { return pair(v, v); }

  [[nodiscard]] nlohmann::json to_json() const;

private:
  ZMatrix gram_;
  std::vector<std::string> labels_;
  Integer scale_ = 1;
  Integer det_ = 1;
  Signature sig_;
};

/// U, U(k), A1, A1(k), E8, E8(k), diag(d1,...). Root lattices are negative definite.
IntegerLattice named_lattice(const std::string &name);
IntegerLattice direct_sum(const IntegerLattice &a, const IntegerLattice &b);

/// Discriminant group L^v/L with its quadratic and bilinear form on SNF generators.
struct DiscriminantForm {
  std::vector<Integer> invariant_factors; // the factors > 1, d1 | d2 | ...
  std::vector<QVector> generators;        // dual vectors in lattice coordinates
  std::vector<Rational> q_values;         // mod 2 for even lattices, mod 1 otherwise; in [0, modulus)
  QMatrix b_values;                       // mod 1, in [0,1)
  bool even = true;

  [[nodiscard]] Integer order() const;
  [[nodiscard]] nlohmann::json to_json() const;
};

DiscriminantForm discriminant_group(const IntegerLattice &l);

/// x mod m with representative in [0, m).
Rational reduce_mod(const Rational &x, const Rational &m);

/// Isomorphism A -> B of finite quadratic forms scaled by `sign` on the target side,
/// given by the images of A's generators in B's generator coordinates.
struct FormMatch {
  int sign = 1;
  std::vector<std::vector<long>> images;
};

std::optional<FormMatch> match_discriminant_forms(const DiscriminantForm &a, const DiscriminantForm &b, int sign);

struct Overlattice {
  IntegerLattice lattice;
  QMatrix basis; // rows: new basis vectors in coordinates of the original lattice
  Integer index;
};

/// Throws IntegralityFailure naming the offending pair.
Overlattice overlattice(const IntegerLattice &l, const std::vector<QVector> &glues);

struct Sublattice {
  IntegerLattice lattice;
  ZMatrix basis; // columns in coordinates of the ambient lattice
};

Sublattice orthogonal_complement(const IntegerLattice &l, const std::vector<ZVector> &s);

/// Columns are images of basis vectors. Requires r.r in {-2,-4}.
ZMatrix reflection_isometry(const IntegerLattice &l, const ZVector &r);

struct IsometryCertificate {
  bool square = false;
  bool preserves_form = false;
  std::optional<int> order; // smallest k <= 4 with M^k = I
  [[nodiscard]] bool involution() const { return preserves_form && order == 2; }
  [[nodiscard]] bool holds() const { return square && preserves_form; }
};

IsometryCertificate verify_isometry(const IntegerLattice &l, const ZMatrix &m);

/// Rank of the sublattice fixed by m.
std::size_t invariant_rank(const ZMatrix &m);
Integer trace(const ZMatrix &m);

nlohmann::json to_json(const SmithForm &s);

} // namespace nodal::lattice
