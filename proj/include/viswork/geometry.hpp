#pragma once

#include <optional>
#include <string>

#include "viswork/scalar.hpp"

namespace viswork {

struct Point {
  ExactScalar x;
  ExactScalar y;

  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }

  Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
  Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
  Point operator*(const ExactScalar& s) const { return {x * s, y * s}; }

  std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }
};

enum class Orientation { CW = -1, COLLINEAR = 0, CCW = 1 };

// Cross and dot products of direction vectors.
ExactScalar cross(const Point& u, const Point& v);
ExactScalar dot(const Point& u, const Point& v);

// Sign of cross(b - a, c - a): CCW when c lies left of the directed line a->b.
Orientation orient(const Point& a, const Point& b, const Point& c);

// True when u and v point the same way (cross == 0, dot > 0). Zero vectors are
// rejected by the callers below.
bool same_direction(const Point& u, const Point& v);

// Compares the CCW angular offsets of directions q->p1 and q->p2, both measured
// from the reference direction q->ref in [0, 2*pi). Returns -1/0/+1. Offsets are
// compared exactly via quadrant class and a cross product, never via angles.
// Fails InvalidQuery if any of ref, p1, p2 coincides with q.
int cmp_ccw_angle(const Point& q, const Point& ref, const Point& p1,
                  const Point& p2);

// True when direction q->p lies in the closed CCW cone from q->a to q->b.
// Equal boundary directions denote the full plane (every p passes).
// Fails InvalidQuery if a, b or p coincides with q.
bool in_cone(const Point& q, const Point& a, const Point& b, const Point& p);

enum class HitKind { PROPER_CROSSING, ENDPOINT_TOUCH };

struct RayHit {
  ExactScalar t;   // ray parameter, point = q + t * (through - q), t > 0
  Point point;
  HitKind kind;    // PROPER_CROSSING iff 0 < u < 1
  ExactScalar u;   // segment parameter in [0, 1], point = a + u * (b - a)
};

// First intersection of the open ray {q + t*(through - q) : t > 0} with segment
// [a, b]. Returns nullopt when they miss (or the segment lies behind q on the
// ray's line). Fails OverlapDegenerate when the forward ray overlaps a
// collinear segment, InvalidQuery when through == q.
std::optional<RayHit> ray_segment_intersection(const Point& q,
                                               const Point& through,
                                               const Point& a, const Point& b);

}  // namespace viswork
