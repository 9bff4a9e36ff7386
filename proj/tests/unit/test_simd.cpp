#include "nodal/simd/modeval.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace nodal;
using namespace nodal::simd;

namespace {

PointBatch random_batch(std::mt19937_64 &g, std::size_t n, std::size_t count, std::uint32_t p) {
  PointBatch b{n, count, std::vector<std::uint64_t>(n * count)};
  for (auto &x : b.coords) x = static_cast<std::uint32_t>(nodal::testing::draw(g, 0, static_cast<long>(p) - 1));
  return b;
}

std::vector<std::uint64_t> run(const PackedPoly &f, const PointBatch &b, Kernel k) {
  std::vector<std::uint64_t> out(b.count);
  eval_batch(f, b, out, k);
  return out;
}

} // namespace

TEST_CASE("scalar kernel matches ModPoly::evaluate") {
  std::mt19937_64 g(1);
  for (std::uint32_t p : {5u, 7u, 11u, 13u, 251u, 65521u}) {
    MultiPoly f = nodal::testing::random_poly(g, 5, 4, 30);
    ModPoly fm = mod_p(Rational(Integer(210)) * f, p);
    PackedPoly pk(fm);
    PointBatch b = random_batch(g, 5, 37, p);
    auto out = run(pk, b, Kernel::scalar);
    for (std::size_t k = 0; k < b.count; ++k) {
      std::vector<std::uint32_t> x(5);
      for (std::size_t v = 0; v < 5; ++v) x[v] = static_cast<std::uint32_t>(b.coords[v * b.count + k]);
      CHECK(out[k] == fm.evaluate(x));
    }
  }
}

TEST_CASE("vector kernels agree with the scalar reference") {
  std::mt19937_64 g(2);
  for (Kernel k : {Kernel::avx2, Kernel::neon}) {
    if (!kernel_available(k)) {
      MESSAGE("kernel not available here: " << kernel_name(k));
      continue;
    }
    for (int rep = 0; rep < 200; ++rep) {
      std::uint32_t p = std::vector<std::uint32_t>{5, 7, 11, 13, 101, 65521}[rep % 6];
      auto n = static_cast<std::size_t>(nodal::testing::draw(g, 1, 6));
      MultiPoly f = nodal::testing::random_poly(g, n, static_cast<unsigned>(rep % 6), 25);
      ModPoly fm = mod_p(Rational(Integer(2 * 3 * 5 * 7)) * f, p);
      PackedPoly pk(fm);
      PointBatch b = random_batch(g, n, static_cast<std::size_t>(nodal::testing::draw(g, 0, 41)), p);
      CHECK(run(pk, b, k) == run(pk, b, Kernel::scalar));
    }
  }
}

TEST_CASE("dispatch and guards") {
  CHECK(kernel_available(Kernel::scalar));
  CHECK(kernel_available(best_kernel()));
  ModPoly big = mod_p(MultiPoly::variable(1, 0), 65537);
  CHECK_THROWS(PackedPoly(big));
  PackedPoly pk(mod_p(MultiPoly::variable(2, 0), 7));
  PointBatch bad{2, 3, std::vector<std::uint64_t>(5)};
  std::vector<std::uint64_t> out(3);
  CHECK_THROWS(eval_batch(pk, bad, out, Kernel::scalar));
}
