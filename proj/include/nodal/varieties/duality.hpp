#pragma once

#include "nodal/configs/combinatorics.hpp"
#include "nodal/varieties/hypersurface.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace nodal::varieties {

class NotOnVariety : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised for a point where the requested map or construction degenerates.
class SingularPoint : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct DualityResult {
  ProjectivePoint image;
  Rational cr_value; // CR4 form at the image
  [[nodiscard]] bool on_cr() const { return cr_value.is_zero(); }
};

/// y = z^2 - (sum z^2 / 6) 1 for z on S3 away from the nodes.
DualityResult duality_image(const ProjectivePoint &z);

/// Uniform integer in [lo, hi], reproducible across platforms for a given seed.
class Draw {
public:
  explicit Draw(std::uint64_t seed) : gen_(seed) {}
  long operator()(long lo, long hi);

private:
  std::mt19937_64 gen_;
};

/// Distinct smooth rational points of S3, from lines through the nodes with random
/// integer directions of height growing up to max_height.
std::vector<ProjectivePoint> sample_segre_points(std::size_t count, std::uint64_t seed, long max_height);

struct CardinalRestriction {
  configs::Triple triple;
  QMatrix chart;       // 6 x 4 integral basis of the 3-plane
  MultiPoly restricted; // CR4 on the chart
  Rational scale;
  MultiPoly root;      // restricted = scale * root^2
};

/// Throws std::runtime_error when the restriction is not a square.
CardinalRestriction cardinal_restriction(const configs::Triple &t);
/// u1u2+u1u3+u2u3-u4u5-u4u6-u5u6 moved to the given 3-subset.
MultiPoly cardinal_quadric(const configs::Triple &t);

} // namespace nodal::varieties
