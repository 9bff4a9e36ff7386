#pragma once

#include "nodal/exact/modpoly.hpp"
#include "nodal/simd/modeval.hpp"
#include "nodal/varieties/hypersurface.hpp"
#include "nodal/varieties/section.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace nodal::varieties {

using FpPoint = std::vector<std::uint32_t>;

struct ScanResult {
  std::uint32_t prime;
  std::size_t scanned;       // projective points visited
  simd::Kernel kernel;
  std::vector<FpPoint> points; // canonical representatives, sorted
};

/// Singular F_p-points of V: form and constrained gradient vanish. Throws BadPrime.
ScanResult singular_scan_fp(const Hypersurface &v, std::uint32_t p,
                            std::optional<simd::Kernel> kernel = std::nullopt);
/// Scan of the section quartic over P^3(F_p) in chart coordinates. Also throws BadPrime when
/// the chart or the certified nodes degenerate modulo p.
ScanResult singular_scan_fp(const SectionModel &m, std::uint32_t p,
                            std::optional<simd::Kernel> kernel = std::nullopt);

/// Canonical reduction of a rational projective point; throws BadPrime.
FpPoint reduce_point(const ProjectivePoint &x, std::uint32_t p);

} // namespace nodal::varieties
