#pragma once

#include "nodal/exact/multipoly.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace nodal {

/// Raised when reduction modulo p is undefined or degenerate.
class BadPrime : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

bool is_prime(std::uint64_t n);
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);
/// Residue of r modulo p; throws BadPrime when p divides the denominator.
std::uint32_t reduce_mod(const Rational &r, std::uint32_t p);

struct ModTerm {
  Exponent exp;
  std::uint32_t coef;
};

/// Polynomial over F_p, terms in the grlex order of the source.
class ModPoly {
public:
  ModPoly(std::uint32_t p, std::size_t num_vars) : p_(p), n_(num_vars) {}

  [[nodiscard]] std::uint32_t prime() const { return p_; }
  [[nodiscard]] std::size_t num_vars() const { return n_; }
  [[nodiscard]] const std::vector<ModTerm> &terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] int total_degree() const;

  std::uint32_t evaluate(std::span<const std::uint32_t> x) const;
  [[nodiscard]] ModPoly partial(std::size_t i) const;

  friend bool operator==(const ModPoly &, const ModPoly &) = default;

private:
  friend ModPoly mod_p(const MultiPoly &f, std::uint32_t p);
  std::uint32_t p_;
  std::size_t n_;
  std::vector<ModTerm> terms_;
};

ModPoly mod_p(const MultiPoly &f, std::uint32_t p);

} // namespace nodal
