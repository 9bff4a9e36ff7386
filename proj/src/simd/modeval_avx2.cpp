#include "nodal/simd/modeval.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#endif

#include <stdexcept>

namespace nodal::simd::detail {

#if defined(__x86_64__) || defined(__i386__)

#define NODAL_AVX2 __attribute__((target("avx2"))) inline

namespace {

// Lanes hold residues below p < 2^16, so every product fits in 32 bits.
NODAL_AVX2 __m256i reduce(__m256i x, __m256i p, __m256i pm1, __m256i m) {
  __m256i q = _mm256_srli_epi64(_mm256_mul_epu32(x, m), 32);
  __m256i r = _mm256_sub_epi64(x, _mm256_mul_epu32(q, p));
  return _mm256_sub_epi64(r, _mm256_and_si256(_mm256_cmpgt_epi64(r, pm1), p));
}

NODAL_AVX2 __m256i load(const std::uint64_t *src) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i *>(src));
}

NODAL_AVX2 void store(std::uint64_t *dst, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i *>(dst), v);
}

} // namespace

__attribute__((target("avx2"))) void eval_avx2(const PackedPoly &f, const PointBatch &pts,
                                               std::span<std::uint64_t> out) {
  const std::size_t n = f.num_vars(), E = f.max_exp() + 1, T = f.num_terms();
  const auto P = static_cast<long long>(f.prime());
  const __m256i p = _mm256_set1_epi64x(P), pm1 = _mm256_set1_epi64x(P - 1),
                m = _mm256_set1_epi64x(static_cast<long long>(f.barrett()));
  // pw[(v * E + e) * 4 + lane] = x_v^e for the current four points.
  std::vector<std::uint64_t> pw(n * E * 4);

  std::size_t k = 0;
  for (; k + 4 <= pts.count; k += 4) {
    for (std::size_t v = 0; v < n; ++v) {
      std::uint64_t *row = pw.data() + v * E * 4;
      store(row, _mm256_set1_epi64x(1));
      if (E == 1) continue;
      __m256i x = reduce(load(pts.coords.data() + v * pts.count + k), p, pm1, m);
      __m256i acc = x;
      store(row + 4, x);
      for (std::size_t e = 2; e < E; ++e) {
        acc = reduce(_mm256_mul_epu32(acc, x), p, pm1, m);
        store(row + e * 4, acc);
      }
    }
    __m256i s = _mm256_setzero_si256();
    for (std::size_t t = 0; t < T; ++t) {
      __m256i acc = _mm256_set1_epi64x(static_cast<long long>(f.coefs()[t]));
      const std::uint8_t *ex = f.exps().data() + t * n;
      for (std::size_t v = 0; v < n; ++v)
        if (ex[v])
          acc = reduce(_mm256_mul_epu32(acc, load(pw.data() + (v * E + ex[v]) * 4)), p, pm1, m);
      s = _mm256_add_epi64(s, acc);
      s = _mm256_sub_epi64(s, _mm256_and_si256(_mm256_cmpgt_epi64(s, pm1), p));
    }
    store(out.data() + k, s);
  }
  if (k < pts.count) {
    PointBatch tail{n, pts.count - k, {}};
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t j = k; j < pts.count; ++j) tail.coords.push_back(pts.coords[v * pts.count + j]);
    eval_scalar(f, tail, out.subspan(k));
  }
}

#undef NODAL_AVX2

#else

void eval_avx2(const PackedPoly &, const PointBatch &, std::span<std::uint64_t>) {
  throw std::logic_error("avx2 kernel not built for this target");
}

#endif

} // namespace nodal::simd::detail
