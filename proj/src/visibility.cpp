#include "viswork/visibility.hpp"

#include <utility>

#include "viswork/errors.hpp"

namespace viswork {

namespace {

// Overlap of a query ray with a boundary edge is an input degeneracy, not an
// internal surprise: surface it uniformly as DegenerateInput.
std::optional<RayHit> ray_hit_checked(const Point& q, const Point& through,
                                      const Point& a, const Point& b) {
  try {
    return ray_segment_intersection(q, through, a, b);
  } catch (const VisworkError& e) {
    if (e.code() == ErrorCode::OverlapDegenerate)
      fail(ErrorCode::DegenerateInput, "query ray overlaps a boundary edge");
    throw;
  }
}

// The vertex a ray through x may legitimately touch: x itself for a vertex,
// the recorded defining reflex vertex for a constructed edge point.
std::optional<std::size_t> defining_vertex(const BoundaryPoint& x) {
  if (x.is_vertex()) return x.index;
  return x.provenance;
}

// Classifies which boundary entity an endpoint touch landed on.
struct TouchSite {
  enum class Kind { VERTEX, TERMINAL };

  Kind kind = Kind::VERTEX;
  std::size_t vertex = 0;                   // VERTEX
  const BoundaryPoint* terminal = nullptr;  // TERMINAL: chain start or end
};

TouchSite touch_site(const Chain& c, const Seg& seg, bool at_b,
                     bool first_seg) {
  TouchSite site;
  if (at_b) {
    if (seg.b_vertex) {
      site.vertex = *seg.b_vertex;
      return site;
    }
    site.kind = TouchSite::Kind::TERMINAL;
    site.terminal = &c.end;
    return site;
  }
  if (!first_seg)
    fail(ErrorCode::InternalError, "undeduplicated corner touch");
  if (c.start.is_vertex()) {
    site.vertex = c.start.index;
    return site;
  }
  site.kind = TouchSite::Kind::TERMINAL;
  site.terminal = &c.start;
  return site;
}

// Whether the boundary crosses the line through q and `through` transversally
// at vertex w: true when w's neighbors lie strictly on opposite sides. Two
// metered reads. A neighbor exactly on the line is a degeneracy.
bool vertex_straddles(const PolygonHandle& h, std::size_t w, const Point& q,
                      const Point& through, QueryContext& ctx) {
  Point before = h.vertex(h.pred(w), ctx);
  Point after = h.vertex(h.succ(w), ctx);
  Orientation ob = orient(q, through, before);
  Orientation oa = orient(q, through, after);
  if (ob == Orientation::COLLINEAR || oa == Orientation::COLLINEAR)
    fail(ErrorCode::DegenerateInput, "vertex neighbor on a query ray");
  return ob != oa;
}

void note_point_bits(QueryContext& ctx, const Point& p) {
  ctx.note_bits(p.x.bits());
  ctx.note_bits(p.y.bits());
}

// The chain from `from` to c.end; coincident endpoints mean the whole closed
// boundary exactly when c itself wraps and `from` sits at its start.
Chain tail_chain(const Chain& c, const BoundaryPoint& from) {
  return Chain{from, c.end, c.wraps && same_location(from, c.start)};
}

}  // namespace

BoundaryPoint find_p0(const PolygonHandle& h, QueryContext& ctx) {
  WsScope scope(ctx, WS_FIND_P0);
  const Point& q = h.viewpoint();
  Point through{q.x + ExactScalar(1), q.y};
  std::size_t n = h.n();

  bool have = false;
  ExactScalar best_t;
  BoundaryPoint best;
  Point first = h.vertex(0, ctx);
  Point a = first;
  for (std::size_t i = 0; i < n; ++i) {
    Point b = (i + 1 < n) ? h.vertex(i + 1, ctx) : first;
    auto hit = ray_hit_checked(q, through, a, b);
    a = std::move(b);
    if (!hit) continue;
    if (hit->kind == HitKind::ENDPOINT_TOUCH)
      fail(ErrorCode::DegenerateInput,
           "vertex on the horizontal ray used for the origin point");
    if (!have || hit->t < best_t) {
      have = true;
      best_t = hit->t;
      best = BoundaryPoint::on_edge(i, hit->point, hit->u);
    }
  }
  if (!have)
    fail(ErrorCode::InternalError, "horizontal ray escaped the boundary");
  note_point_bits(ctx, best.point);
  return best;
}

ReflexClass classify_reflex(const PolygonHandle& h, std::size_t i,
                            QueryContext& ctx) {
  WsScope scope(ctx, WS_CLASSIFY);
  Point before = h.vertex(h.pred(i), ctx);
  Point v = h.vertex(i, ctx);
  Point after = h.vertex(h.succ(i), ctx);
  // interior angle > pi iff the CCW boundary turns clockwise at v
  if (orient(before, v, after) != Orientation::CW) return ReflexClass::NOT_REFLEX;
  const Point& q = h.viewpoint();
  Orientation tb = orient(q, v, before);
  Orientation ta = orient(q, v, after);
  if (tb == Orientation::COLLINEAR || ta == Orientation::COLLINEAR)
    fail(ErrorCode::DegenerateInput,
         "vertex neighbor collinear with the viewpoint");
  if (tb != ta) return ReflexClass::NOT_REFLEX;
  return tb == Orientation::CW ? ReflexClass::REFLEX_R : ReflexClass::REFLEX_L;
}

bool is_visible(const PolygonHandle& h, const Chain& c, const BoundaryPoint& x,
                QueryContext& ctx) {
  WsScope scope(ctx, WS_IS_VISIBLE);
  const Point& q = h.viewpoint();
  const ExactScalar one(1);
  auto def = defining_vertex(x);

  ChainWalk walk(h, c, ctx);
  bool first = true;
  while (auto seg = walk.next()) {
    bool first_seg = first;
    first = false;
    auto hit = ray_hit_checked(q, x.point, seg->a, seg->b);
    if (!hit) continue;
    if (!(hit->t < one)) continue;                 // blocking needs t < 1
    if (hit->u.is_zero() && !first_seg) continue;  // corner counted at u == 1
    if (hit->kind == HitKind::PROPER_CROSSING) return false;
    TouchSite site = touch_site(c, *seg, !hit->u.is_zero(), first_seg);
    if (site.kind == TouchSite::Kind::VERTEX) {
      if (vertex_straddles(h, site.vertex, q, x.point, ctx)) return false;
      continue;  // grazing contact
    }
    const BoundaryPoint& term = *site.terminal;
    if (term.provenance && def && *term.provenance == *def) return false;
    fail(ErrorCode::DegenerateInput, "sight segment through a chain endpoint");
  }
  return true;
}

BoundaryPoint ray_shoot(const PolygonHandle& h, const Chain& c,
                        const BoundaryPoint& x, QueryContext& ctx) {
  WsScope scope(ctx, WS_RAY_SHOOT);
  const Point& q = h.viewpoint();
  auto def = defining_vertex(x);

  struct Winner {
    enum class Kind { EDGE, VERTEX, TERMINAL };
    Kind kind = Kind::EDGE;
    std::size_t index = 0;  // edge (EDGE) or vertex (VERTEX) index
    Point point;
    const BoundaryPoint* terminal = nullptr;
  };
  bool have = false;
  ExactScalar best_t;
  Winner win;
  auto better = [&](const ExactScalar& t) { return !have || t < best_t; };

  ChainWalk walk(h, c, ctx);
  bool first = true;
  while (auto seg = walk.next()) {
    bool first_seg = first;
    first = false;
    auto hit = ray_hit_checked(q, x.point, seg->a, seg->b);
    if (!hit) continue;
    if (hit->u.is_zero() && !first_seg) continue;  // corner counted at u == 1
    if (hit->kind == HitKind::PROPER_CROSSING) {
      if (better(hit->t)) {
        have = true;
        best_t = hit->t;
        win = Winner{Winner::Kind::EDGE, seg->edge, hit->point, nullptr};
      }
      continue;
    }
    TouchSite site = touch_site(c, *seg, !hit->u.is_zero(), first_seg);
    if (site.kind == TouchSite::Kind::VERTEX) {
      std::size_t w = site.vertex;
      if (!def || *def != w)
        fail(ErrorCode::DegenerateInput, "query ray through an unrelated vertex");
      if (vertex_straddles(h, w, q, x.point, ctx) && better(hit->t)) {
        have = true;
        best_t = hit->t;
        win = Winner{Winner::Kind::VERTEX, w, hit->point, nullptr};
      }
      continue;
    }
    const BoundaryPoint* term = site.terminal;
    bool related = same_location(*term, x) ||
                   (term->provenance && def && *term->provenance == *def);
    if (!related)
      fail(ErrorCode::DegenerateInput,
           "query ray through an unrelated chain endpoint");
    if (better(hit->t)) {
      have = true;
      best_t = hit->t;
      win = Winner{Winner::Kind::TERMINAL, 0, term->point, term};
    }
  }
  if (!have) fail(ErrorCode::InternalError, "query ray escaped the chain");

  switch (win.kind) {
    case Winner::Kind::VERTEX:
      return BoundaryPoint::at_vertex(win.index, std::move(win.point));
    case Winner::Kind::TERMINAL:
      return *win.terminal;
    case Winner::Kind::EDGE:
    default: {
      Point a = h.vertex(win.index, ctx);
      Point b = h.vertex(h.succ(win.index), ctx);
      ExactScalar u = (a.x != b.x) ? (win.point.x - a.x) / (b.x - a.x)
                                   : (win.point.y - a.y) / (b.y - a.y);
      note_point_bits(ctx, win.point);
      return BoundaryPoint::on_edge(win.index, std::move(win.point),
                                    std::move(u), def);
    }
  }
}

BoundaryPoint shadow(const PolygonHandle& h, const Chain& c, std::size_t v,
                     QueryContext& ctx) {
  WsScope scope(ctx, WS_SHADOW);
  Point vp = h.vertex(v, ctx);
  return ray_shoot(h, c, BoundaryPoint::at_vertex(v, std::move(vp)), ctx);
}

NextReflexResult next_vis_reflex(const PolygonHandle& h, const Chain& c,
                                 const BoundaryPoint& p, QueryContext& ctx) {
  WsScope scope(ctx, WS_NEXT_VIS_REFLEX);
  const Point& q = h.viewpoint();

  // An R-type reflex start hides everything up to its shadow: restart there.
  BoundaryPoint from = p;
  if (p.is_vertex() &&
      classify_reflex(h, p.index, ctx) == ReflexClass::REFLEX_R)
    from = shadow(h, tail_chain(c, p), p.index, ctx);
  Chain rest = tail_chain(c, from);

  // First reflex-wrt-q vertex strictly after `from` (chain ends never count).
  std::size_t v = 0;
  Point v_point;
  ReflexClass v_class = ReflexClass::NOT_REFLEX;
  bool found = false;
  {
    ChainWalk walk(h, rest, ctx);
    while (auto seg = walk.next()) {
      if (!seg->b_vertex || seg->b_is_end) continue;
      ReflexClass rc = classify_reflex(h, *seg->b_vertex, ctx);
      if (rc == ReflexClass::NOT_REFLEX) continue;
      v = *seg->b_vertex;
      v_point = seg->b;
      v_class = rc;
      found = true;
      break;
    }
  }
  NextReflexResult res;
  if (!found) {
    res.stop = c.end;
    return res;
  }

  res.kind = NextReflexResult::Kind::FOUND;
  BoundaryPoint vb = BoundaryPoint::at_vertex(v, v_point);
  if (is_visible(h, rest, vb, ctx)) {
    res.reflex = v;
    res.reflex_point = std::move(v_point);
    res.reflex_class = v_class;
    res.stop = ray_shoot(h, rest, vb, ctx);
    return res;
  }

  // v is hidden: the visible span from `from` is closed by the L-type reflex
  // vertex inside the region bounded by q->from, chain(from, v), v->q that
  // has the smallest CCW angle from direction q->from. Walking on from v,
  // region membership changes exactly at crossings of the open segment q->v
  // (q->from is unobstructed and the chain cannot self-cross), and the edge
  // leaving v always starts outside: v turns back angularly, so both its
  // edges lie on one side of line q->v while the region hugs the other.
  bool inside = false;
  bool have_best = false;
  std::size_t best = 0;
  Point best_point;
  const ExactScalar one(1);
  {
    Chain after_v = tail_chain(rest, BoundaryPoint::at_vertex(v, v_point));
    ChainWalk walk(h, after_v, ctx);
    bool first = true;
    while (auto seg = walk.next()) {
      bool first_seg = first;
      first = false;
      auto hit = ray_hit_checked(q, v_point, seg->a, seg->b);
      if (hit && hit->t < one && !(hit->u.is_zero() && !first_seg)) {
        if (hit->kind == HitKind::PROPER_CROSSING) {
          inside = !inside;
        } else {
          TouchSite site =
              touch_site(after_v, *seg, !hit->u.is_zero(), first_seg);
          if (site.kind == TouchSite::Kind::VERTEX)
            fail(ErrorCode::DegenerateInput, "vertex on a sight segment");
          // the chain's own constructed endpoints may sit on the segment;
          // those are region-boundary contacts, not crossings
        }
      }
      if (!seg->b_vertex || seg->b_is_end) continue;
      std::size_t w = *seg->b_vertex;
      if (!inside || w == v) continue;
      if (classify_reflex(h, w, ctx) != ReflexClass::REFLEX_L) continue;
      if (!have_best || cmp_ccw_angle(q, from.point, seg->b, best_point) < 0) {
        have_best = true;
        best = w;
        best_point = seg->b;
      }
    }
  }
  if (!have_best)
    fail(ErrorCode::InternalError, "pocket scan found no closing reflex vertex");
  res.reflex = best;
  res.reflex_class = ReflexClass::REFLEX_L;
  res.stop =
      ray_shoot(h, rest, BoundaryPoint::at_vertex(best, best_point), ctx);
  res.reflex_point = std::move(best_point);
  return res;
}

}  // namespace viswork
