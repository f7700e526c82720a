#include "viswork/geometry.hpp"

#include "viswork/errors.hpp"

namespace viswork {

ExactScalar cross(const Point& u, const Point& v) {
  return u.x * v.y - u.y * v.x;
}

ExactScalar dot(const Point& u, const Point& v) {
  return u.x * v.x + u.y * v.y;
}

Orientation orient(const Point& a, const Point& b, const Point& c) {
  int s = cross(b - a, c - a).sign();
  if (s > 0) return Orientation::CCW;
  if (s < 0) return Orientation::CW;
  return Orientation::COLLINEAR;
}

bool same_direction(const Point& u, const Point& v) {
  return cross(u, v).is_zero() && dot(u, v).sign() > 0;
}

namespace {

// Quadrant class of direction d relative to reference direction r:
//   0: same direction, 1: strictly left (offset in (0, pi)),
//   2: opposite (offset exactly pi), 3: strictly right (offset in (pi, 2*pi)).
int offset_class(const Point& r, const Point& d) {
  int c = cross(r, d).sign();
  if (c > 0) return 1;
  if (c < 0) return 3;
  return dot(r, d).sign() > 0 ? 0 : 2;
}

Point dir_from(const Point& q, const Point& p) {
  Point d = p - q;
  if (d.x.is_zero() && d.y.is_zero()) {
    fail(ErrorCode::InvalidQuery, "direction endpoint coincides with apex");
  }
  return d;
}

}  // namespace

int cmp_ccw_angle(const Point& q, const Point& ref, const Point& p1,
                  const Point& p2) {
  Point r = dir_from(q, ref);
  Point d1 = dir_from(q, p1);
  Point d2 = dir_from(q, p2);
  int c1 = offset_class(r, d1);
  int c2 = offset_class(r, d2);
  if (c1 != c2) return c1 < c2 ? -1 : 1;
  if (c1 == 0 || c1 == 2) return 0;  // both on the same ray direction
  // Same open half-turn: smaller offset comes first when d1 is right of d2.
  int s = cross(d1, d2).sign();
  if (s > 0) return -1;
  if (s < 0) return 1;
  return 0;
}

bool in_cone(const Point& q, const Point& a, const Point& b, const Point& p) {
  Point da = dir_from(q, a);
  Point db = dir_from(q, b);
  dir_from(q, p);  // validate p != q
  if (same_direction(da, db)) return true;  // full-turn cone
  return cmp_ccw_angle(q, a, p, b) <= 0;
}

std::optional<RayHit> ray_segment_intersection(const Point& q,
                                               const Point& through,
                                               const Point& a, const Point& b) {
  Point d = through - q;
  if (d.x.is_zero() && d.y.is_zero()) {
    fail(ErrorCode::InvalidQuery, "ray direction undefined: through == q");
  }
  Point e = b - a;
  Point w = a - q;
  ExactScalar denom = cross(d, e);
  if (denom.is_zero()) {
    if (!cross(d, w).is_zero()) return std::nullopt;  // parallel, off-line
    // Collinear: project both endpoints onto the ray parameter.
    ExactScalar ta = d.x.is_zero() ? w.y / d.y : w.x / d.x;
    Point wb = b - q;
    ExactScalar tb = d.x.is_zero() ? wb.y / d.y : wb.x / d.x;
    ExactScalar tmax = ta > tb ? ta : tb;
    if (tmax.sign() > 0) {
      fail(ErrorCode::OverlapDegenerate,
           "ray overlaps a collinear boundary segment");
    }
    return std::nullopt;  // segment behind the ray start
  }
  ExactScalar t = cross(w, e) / denom;
  ExactScalar u = cross(w, d) / denom;
  if (t.sign() <= 0) return std::nullopt;
  if (u.sign() < 0 || u > ExactScalar(1)) return std::nullopt;
  HitKind kind = (u.sign() > 0 && u < ExactScalar(1))
                     ? HitKind::PROPER_CROSSING
                     : HitKind::ENDPOINT_TOUCH;
  Point hit = q + d * t;
  return RayHit{t, hit, kind, u};
}

}  // namespace viswork
