#include "nodal/exact/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace nodal {

Rational::Rational(const Integer &n, const Integer &d) {
  if (d == 0) throw std::domain_error("zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
  std::string t(s);
  auto slash = t.find('/');
  Integer n, d = 1;
  try {
    if (slash == std::string::npos) {
      n = Integer(t);
    } else {
      n = Integer(t.substr(0, slash));
      d = Integer(t.substr(slash + 1));
    }
  } catch (const std::invalid_argument &) {
    throw std::invalid_argument("bad rational literal: " + t);
  }
  return {n, d};
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational &Rational::operator/=(const Rational &o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

std::ostream &operator<<(std::ostream &os, const Rational &r) {
  return os << r.str();
}

} // namespace nodal
