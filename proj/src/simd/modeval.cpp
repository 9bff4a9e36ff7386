#include "nodal/simd/modeval.hpp"

#include <stdexcept>

namespace nodal::simd {

std::string_view kernel_name(Kernel k) {
  switch (k) {
  case Kernel::scalar: return "scalar";
  case Kernel::avx2: return "avx2";
  case Kernel::neon: return "neon";
  }
  return "?";
}

bool kernel_available(Kernel k) {
  switch (k) {
  case Kernel::scalar: return true;
  case Kernel::avx2:
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
  case Kernel::neon:
#if defined(__aarch64__)
    return true;
#else
    return false;
#endif
  }
  return false;
}

Kernel best_kernel() {
  static const Kernel k = kernel_available(Kernel::avx2)   ? Kernel::avx2
                          : kernel_available(Kernel::neon) ? Kernel::neon
                                                           : Kernel::scalar;
  return k;
}

PackedPoly::PackedPoly(const ModPoly &f)
    : p_(f.prime()), n_(f.num_vars()), barrett_((std::uint64_t{1} << 32) / f.prime()) {
  if (p_ >= (1u << 16)) throw std::invalid_argument("PackedPoly: prime must be below 2^16");
  for (const auto &t : f.terms()) {
    coef_.push_back(t.coef);
    for (auto e : t.exp) {
      if (e > 255) throw std::invalid_argument("PackedPoly: exponent too large");
      exp_.push_back(static_cast<std::uint8_t>(e));
      max_exp_ = std::max(max_exp_, e);
    }
  }
}

void eval_batch(const PackedPoly &f, const PointBatch &pts, std::span<std::uint64_t> out,
                Kernel k) {
  if (pts.num_vars != f.num_vars() || pts.coords.size() != pts.num_vars * pts.count ||
      out.size() != pts.count)
    throw std::invalid_argument("eval_batch: shape mismatch");
  if (!kernel_available(k)) throw std::invalid_argument("eval_batch: kernel unavailable");
  switch (k) {
  case Kernel::scalar: detail::eval_scalar(f, pts, out); break;
  case Kernel::avx2: detail::eval_avx2(f, pts, out); break;
  case Kernel::neon: detail::eval_neon(f, pts, out); break;
  }
}

namespace detail {

void eval_scalar(const PackedPoly &f, const PointBatch &pts, std::span<std::uint64_t> out) {
  const std::uint64_t p = f.prime();
  const std::size_t n = f.num_vars(), E = f.max_exp() + 1;
  std::vector<std::uint64_t> pw(n * E);
  for (std::size_t k = 0; k < pts.count; ++k) {
    for (std::size_t v = 0; v < n; ++v) {
      pw[v * E] = 1;
      for (std::size_t e = 1; e < E; ++e)
        pw[v * E + e] = pw[v * E + e - 1] * (pts.coords[v * pts.count + k] % p) % p;
    }
    std::uint64_t s = 0;
    for (std::size_t t = 0; t < f.num_terms(); ++t) {
      std::uint64_t acc = f.coefs()[t];
      for (std::size_t v = 0; v < n; ++v) acc = acc * pw[v * E + f.exps()[t * n + v]] % p;
      s = (s + acc) % p;
    }
    out[k] = s;
  }
}

} // namespace detail
} // namespace nodal::simd
