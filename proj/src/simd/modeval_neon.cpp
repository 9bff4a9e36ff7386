#include "nodal/simd/modeval.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>
#endif

#include <stdexcept>

namespace nodal::simd::detail {

#if defined(__aarch64__)

namespace {

struct NeonMod {
  uint64x2_t p, pm1;
  uint32x2_t p32, m32;

  uint64x2_t reduce(uint64x2_t x) const {
    uint64x2_t q = vshrq_n_u64(vmull_u32(vmovn_u64(x), m32), 32);
    uint64x2_t r = vsubq_u64(x, vmull_u32(vmovn_u64(q), p32));
    return vsubq_u64(r, vandq_u64(vcgtq_u64(r, pm1), p));
  }
  uint64x2_t mul(uint64x2_t a, uint64x2_t b) const {
    return reduce(vmull_u32(vmovn_u64(a), vmovn_u64(b)));
  }
  uint64x2_t add(uint64x2_t a, uint64x2_t b) const {
    uint64x2_t s = vaddq_u64(a, b);
    return vsubq_u64(s, vandq_u64(vcgtq_u64(s, pm1), p));
  }
};

} // namespace

void eval_neon(const PackedPoly &f, const PointBatch &pts, std::span<std::uint64_t> out) {
  const std::size_t n = f.num_vars(), E = f.max_exp() + 1, T = f.num_terms();
  const std::uint64_t P = f.prime();
  const NeonMod md{vdupq_n_u64(P), vdupq_n_u64(P - 1), vdup_n_u32(static_cast<std::uint32_t>(P)),
                   vdup_n_u32(static_cast<std::uint32_t>(f.barrett()))};
  std::vector<uint64x2_t> pw(n * E);
  std::size_t k = 0;
  for (; k + 2 <= pts.count; k += 2) {
    for (std::size_t v = 0; v < n; ++v) {
      uint64x2_t x = vld1q_u64(pts.coords.data() + v * pts.count + k);
      pw[v * E] = vdupq_n_u64(1);
      if (E > 1) pw[v * E + 1] = md.reduce(x);
      for (std::size_t e = 2; e < E; ++e) pw[v * E + e] = md.mul(pw[v * E + e - 1], pw[v * E + 1]);
    }
    uint64x2_t s = vdupq_n_u64(0);
    for (std::size_t t = 0; t < T; ++t) {
      uint64x2_t acc = vdupq_n_u64(f.coefs()[t]);
      const std::uint8_t *ex = f.exps().data() + t * n;
      for (std::size_t v = 0; v < n; ++v)
        if (ex[v]) acc = md.mul(acc, pw[v * E + ex[v]]);
      s = md.add(s, acc);
    }
    vst1q_u64(out.data() + k, s);
  }
  if (k < pts.count) {
    PointBatch tail{n, pts.count - k, {}};
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t j = k; j < pts.count; ++j) tail.coords.push_back(pts.coords[v * pts.count + j]);
    eval_scalar(f, tail, out.subspan(k));
  }
}

#else

void eval_neon(const PackedPoly &, const PointBatch &, std::span<std::uint64_t>) {
  throw std::logic_error("neon kernel not built for this target");
}

#endif

} // namespace nodal::simd::detail
