#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <gmpxx.h>
#include <iosfwd>
#include <string>
#include <string_view>

namespace nodal {

using Integer = mpz_class;

/// Reduced fraction num/den with den > 0. Zero is 0/1.
class Rational {
public:
  Rational() = default;
  template <std::signed_integral T>
  Rational(T v) : v_(static_cast<long>(v)) {}
  template <std::unsigned_integral T>
  Rational(T v) : v_(static_cast<unsigned long>(v)) {}
  Rational(const Integer &n) : v_(n) {}
  Rational(const Integer &n, const Integer &d);

  /// Accepts "a" or "a/b" with optional sign.
  static Rational parse(std::string_view s);

  [[nodiscard]] Integer num() const { return v_.get_num(); }
  [[nodiscard]] Integer den() const { return v_.get_den(); }
  [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
  [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(v_); }
  [[nodiscard]] Rational abs() const;
  [[nodiscard]] Rational inverse() const;
  [[nodiscard]] std::string str() const { return v_.get_str(); }
  [[nodiscard]] const mpq_class &raw() const { return v_; }

  Rational &operator+=(const Rational &o) { v_ += o.v_; return *this; }
  Rational &operator-=(const Rational &o) { v_ -= o.v_; return *this; }
  Rational &operator*=(const Rational &o) { v_ *= o.v_; return *this; }
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational &a, const Rational &b) {
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const Rational &a,
                                          const Rational &b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
  }

private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_{0};
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

/// Least common multiple of denominators.
template <class Range> Integer common_denominator(const Range &xs) {
  Integer l = 1;
  for (const Rational &x : xs) l = lcm(l, x.den());
  return l;
}

} // namespace nodal
