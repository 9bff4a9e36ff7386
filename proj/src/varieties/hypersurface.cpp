#include "nodal/varieties/hypersurface.hpp"

#include <stdexcept>

namespace nodal::varieties {

Hypersurface::Hypersurface(std::string name, MultiPoly form, QMatrix constraints)
    : name_(std::move(name)), form_(std::move(form)), degree_(0),
      constraints_(constraints.rows() ? std::move(constraints) : QMatrix(0, form_.num_vars())),
      ambient_(LinearSubspace::from_equations(constraints_)) {
  auto d = form_.homogeneous_degree();
  if (!d) throw std::invalid_argument("hypersurface form must be homogeneous and nonzero");
  degree_ = *d;
  if (constraints_.cols() != form_.num_vars()) throw std::invalid_argument("constraint width");
  if (rank(constraints_) != constraints_.rows()) throw std::invalid_argument("dependent constraints");
}

MultiPoly power_sum(std::size_t n, unsigned k) {
  MultiPoly f(n);
  for (std::size_t i = 0; i < n; ++i) f += MultiPoly::variable(n, i).pow(k);
  return f;
}

Hypersurface build_variety(Kind kind) {
  QMatrix sum(1, 6);
  for (std::size_t j = 0; j < 6; ++j) sum(0, j) = 1;
  if (kind == Kind::segre) return {"S3", power_sum(6, 3), sum};
  MultiPoly s2 = power_sum(6, 2);
  return {"CR4", Rational(4) * power_sum(6, 4) - s2 * s2, sum};
}

std::vector<std::size_t> coordinate_perm(const std::array<std::uint8_t, 6> &images) {
  std::vector<std::size_t> p(6);
  for (std::size_t i = 0; i < 6; ++i) p[i] = images[i] - 1u;
  return p;
}

std::string NodeFailure::what() const {
  switch (reason) {
  case Reason::not_on_variety: return "not on variety: form value " + detail.at(0).str() + " at " + point.str();
  case Reason::smooth: return "smooth point: constrained gradient nonzero at " + point.str();
  }
  return "unknown failure";
}

NodeResult certify_ordinary_node(const Hypersurface &v, const ProjectivePoint &p) {
  const QVector &x = p.coords();
  if (x.size() != v.num_vars()) throw std::invalid_argument("point dimension mismatch");
  if (!v.in_ambient(x)) throw std::invalid_argument("point violates ambient constraints: " + p.str());
  Rational value = evaluate(v.form(), x);
  if (!value.is_zero()) return NodeFailure{NodeFailure::Reason::not_on_variety, p, {value}};
  const QMatrix &b = v.ambient().basis();
  QVector cg = b.transpose() * gradient_at(v.form(), x);
  if (!is_zero(cg)) return NodeFailure{NodeFailure::Reason::smooth, p, cg};
  QMatrix h = b.transpose() * hessian_at(v.form(), x) * b;
  std::size_t r = rank(h);
  return NodeCertificate{p, value, cg, b, h, r, v.projective_dim(), r == v.projective_dim()};
}

Revalidation revalidate(const Hypersurface &v, const NodeCertificate &c) {
  Revalidation out{};
  const QVector &x = c.point.coords();
  out.value_zero = evaluate(v.form(), x).is_zero();
  std::vector<QVector> rows;
  for (std::size_t i = 0; i < v.constraints().rows(); ++i) rows.push_back(v.constraints().row(i));
  std::size_t base = rows.size();
  rows.push_back(gradient_at(v.form(), x));
  out.gradient_in_constraint_span = rank_fraction_free(QMatrix::from_rows(rows, v.num_vars())) == base;
  out.hessian_rank = rank_fraction_free(c.chart.transpose() * hessian_at(v.form(), x) * c.chart);
  out.ok = out.value_zero && out.gradient_in_constraint_span && out.hessian_rank == c.hessian_rank &&
           c.is_ordinary == (out.hessian_rank == v.projective_dim());
  return out;
}

DoubleLineCertificate verify_double_line(const Hypersurface &v, const LinearSubspace &line) {
  if (!v.ambient().contains(line)) throw std::invalid_argument("line leaves the ambient constraint locus");
  LinearMap param = line.parametrization();
  DoubleLineCertificate c{substitute_linear(v.form(), param).is_zero(), true};
  auto grad = gradient(v.form());
  const QMatrix &b = v.ambient().basis();
  for (std::size_t j = 0; j < b.cols() && c.gradient_vanishes; ++j) {
    MultiPoly g(v.num_vars());
    for (std::size_t i = 0; i < b.rows(); ++i)
      if (!b(i, j).is_zero()) g += b(i, j) * grad[i];
    c.gradient_vanishes = substitute_linear(g, param).is_zero();
  }
  return c;
}

} // namespace nodal::varieties
