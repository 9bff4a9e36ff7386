#pragma once

#include "nodal/exact/modpoly.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace nodal::simd {

enum class Kernel { scalar, avx2, neon };

std::string_view kernel_name(Kernel k);
bool kernel_available(Kernel k);
/// Widest kernel the running CPU supports.
Kernel best_kernel();

/// Dense copy of a ModPoly for batch evaluation. Requires p < 2^16.
class PackedPoly {
public:
  explicit PackedPoly(const ModPoly &f);

  [[nodiscard]] std::uint32_t prime() const { return p_; }
  [[nodiscard]] std::size_t num_vars() const { return n_; }
  [[nodiscard]] std::size_t num_terms() const { return coef_.size(); }
  [[nodiscard]] std::uint32_t max_exp() const { return max_exp_; }
  [[nodiscard]] std::span<const std::uint64_t> coefs() const { return coef_; }
  /// Row t holds the exponents of term t.
  [[nodiscard]] std::span<const std::uint8_t> exps() const { return exp_; }
  /// floor(2^32 / p)
  [[nodiscard]] std::uint64_t barrett() const { return barrett_; }

private:
  std::uint32_t p_;
  std::size_t n_;
  std::uint32_t max_exp_ = 0;
  std::uint64_t barrett_;
  std::vector<std::uint64_t> coef_;
  std::vector<std::uint8_t> exp_;
};

/// Points stored by coordinate: coords[v * count + k] is coordinate v of point k.
struct PointBatch {
  std::size_t num_vars = 0;
  std::size_t count = 0;
  std::vector<std::uint64_t> coords;
};

/// out[k] = f(point k) mod p.
void eval_batch(const PackedPoly &f, const PointBatch &pts, std::span<std::uint64_t> out,
                Kernel k);
inline void eval_batch(const PackedPoly &f, const PointBatch &pts,
                       std::span<std::uint64_t> out) {
  eval_batch(f, pts, out, best_kernel());
}

namespace detail {
void eval_scalar(const PackedPoly &f, const PointBatch &pts, std::span<std::uint64_t> out);
void eval_avx2(const PackedPoly &f, const PointBatch &pts, std::span<std::uint64_t> out);
void eval_neon(const PackedPoly &f, const PointBatch &pts, std::span<std::uint64_t> out);
} // namespace detail

} // namespace nodal::simd
