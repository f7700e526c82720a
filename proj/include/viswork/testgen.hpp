#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "viswork/polygon.hpp"

namespace viswork {

// Seeded generator families covering the reflex-structure spectrum:
//   CONVEX          r = 0 baseline
//   COMB            m top-edge chambers; windows grow linearly with m
//   DISPLACED_STAR  alternating radii, viewpoint pushed off-kernel
//   DEGENERATE      fixtures violating exactly one load precondition
enum class GenFamily { CONVEX, COMB, DISPLACED_STAR, DEGENERATE };

enum class DegenerateKind { COLLINEAR_PAIR, VERTEX_ON_P0_RAY, Q_ON_BOUNDARY };

struct GenSpec {
  GenFamily family = GenFamily::CONVEX;
  std::size_t size = 4;  // n (convex/star) or tooth count m (comb)
  std::uint64_t seed = 0;
  DegenerateKind kind = DegenerateKind::COLLINEAR_PAIR;  // DEGENERATE only
  // displaced-star shape knobs
  ExactScalar big_r{4096};
  ExactScalar small_r{1365};
  std::optional<ExactScalar> offset;  // default (big_r + small_r) / 2

  // Round-trips via parse: "comb:m=8,seed=3", "convex:n=16,seed=1",
  // "star:n=12,seed=4,offset=2730", "degenerate:kind=collinear-pair".
  static GenSpec parse(std::string_view text);
  std::string str() const;
  std::string family_name() const;
};

struct Generated {
  std::vector<Point> vertices;
  Point q;
  GenSpec spec;
  // strict-validated handle; empty for DEGENERATE (which must fail load)
  std::optional<PolygonHandle> handle;
};

// Convex polygon: distinct rational points of a circle (tangent-half-angle
// parametrization) in CCW order, q near the snapped centroid. n=4 with seed 0
// is the canonical 4x4 square with q=(2,2).
Generated gen_convex(std::size_t n, std::uint64_t seed);

// Rectangle of width 4m+2 with m square chambers on the top edge and q jittered
// inside the bottom of the middle gap; n = 4m+4, one window per chamber.
Generated gen_comb(std::size_t m, std::uint64_t seed);

// Alternating-radius star around the origin (n even, >= 6), q displaced along
// +x by `offset` plus jitter. OffsetOutside when q falls outside the polygon.
Generated gen_displaced_star(std::size_t n, const ExactScalar& big_r,
                             const ExactScalar& small_r,
                             const ExactScalar& offset, std::uint64_t seed);

// Fixed fixtures that violate exactly one named precondition.
Generated gen_degenerate(DegenerateKind kind, std::uint64_t seed);

// Dispatch on spec.family; retries DISPLACED_STAR with halved offsets until
// the viewpoint lands inside.
Generated generate(const GenSpec& spec);

}  // namespace viswork
