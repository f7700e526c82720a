#include "viswork/oracle.hpp"

#include <algorithm>
#include <vector>

#include "viswork/errors.hpp"

namespace viswork {

namespace {

enum class Cls { NONE, R, L };

// Reflex-wrt-q classification re-derived on unmetered reads.
Cls classify_pt(const PolygonHandle& h, std::size_t i) {
  const Point& before = h.pt(h.pred(i));
  const Point& v = h.pt(i);
  const Point& after = h.pt(h.succ(i));
  if (orient(before, v, after) != Orientation::CW) return Cls::NONE;
  const Point& q = h.viewpoint();
  Orientation tb = orient(q, v, before);
  Orientation ta = orient(q, v, after);
  if (tb == Orientation::COLLINEAR || ta == Orientation::COLLINEAR)
    fail(ErrorCode::DegenerateInput,
         "vertex neighbor collinear with the viewpoint");
  if (tb != ta) return Cls::NONE;
  return tb == Orientation::CW ? Cls::R : Cls::L;
}

struct Piece {
  Point a;
  Point b;
  std::size_t edge = 0;
  std::optional<std::size_t> b_vertex;
  bool b_is_end = false;
};

std::vector<Piece> pieces_of(const PolygonHandle& h, const Chain& c) {
  QueryContext scratch;
  std::vector<Piece> out;
  ChainWalk walk(h, c, scratch);
  while (auto seg = walk.next())
    out.push_back({seg->a, seg->b, seg->edge, seg->b_vertex, seg->b_is_end});
  return out;
}

// One contact of the ray q->x with a chain piece.
struct Contact {
  enum class Kind { PROPER, VERTEX, TERMINAL };
  Kind kind = Kind::PROPER;
  ExactScalar t;
  Point point;
  std::size_t vertex = 0;                   // VERTEX
  std::size_t edge = 0;                     // PROPER
  const BoundaryPoint* terminal = nullptr;  // TERMINAL
};

std::vector<Contact> ray_contacts(const PolygonHandle& h, const Chain& c,
                                  const std::vector<Piece>& pieces,
                                  const Point& x_pt) {
  const Point& q = h.viewpoint();
  std::vector<Contact> out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Piece& pc = pieces[i];
    std::optional<RayHit> hit;
    try {
      hit = ray_segment_intersection(q, x_pt, pc.a, pc.b);
    } catch (const VisworkError& e) {
      if (e.code() == ErrorCode::OverlapDegenerate)
        fail(ErrorCode::DegenerateInput, "query ray overlaps a boundary edge");
      throw;
    }
    if (!hit) continue;
    if (hit->u.is_zero() && i > 0) continue;  // corner counted at u == 1
    Contact contact;
    contact.t = hit->t;
    contact.point = hit->point;
    if (hit->kind == HitKind::PROPER_CROSSING) {
      contact.edge = pc.edge;
      out.push_back(std::move(contact));
      continue;
    }
    bool at_b = !hit->u.is_zero();
    const BoundaryPoint* term = nullptr;
    if (at_b) {
      if (pc.b_vertex) {
        contact.kind = Contact::Kind::VERTEX;
        contact.vertex = *pc.b_vertex;
      } else {
        term = &c.end;
      }
    } else if (c.start.is_vertex()) {
      contact.kind = Contact::Kind::VERTEX;
      contact.vertex = c.start.index;
    } else {
      term = &c.start;
    }
    if (term) {
      contact.kind = Contact::Kind::TERMINAL;
      contact.terminal = term;
    }
    out.push_back(std::move(contact));
  }
  return out;
}

bool straddles_pt(const PolygonHandle& h, std::size_t w, const Point& x_pt) {
  const Point& q = h.viewpoint();
  Orientation ob = orient(q, x_pt, h.pt(h.pred(w)));
  Orientation oa = orient(q, x_pt, h.pt(h.succ(w)));
  if (ob == Orientation::COLLINEAR || oa == Orientation::COLLINEAR)
    fail(ErrorCode::DegenerateInput, "vertex neighbor on a query ray");
  return ob != oa;
}

// Brute per-point visibility along chain c: no contact blocks the open
// segment q->x. `def` is the vertex a touch may legitimately belong to.
bool visible_pt(const PolygonHandle& h, const Chain& c,
                const std::vector<Piece>& pieces, const Point& x_pt,
                std::optional<std::size_t> def) {
  const ExactScalar one(1);
  for (const Contact& contact : ray_contacts(h, c, pieces, x_pt)) {
    if (!(contact.t < one)) continue;
    switch (contact.kind) {
      case Contact::Kind::PROPER:
        return false;
      case Contact::Kind::VERTEX:
        if (straddles_pt(h, contact.vertex, x_pt)) return false;
        break;
      case Contact::Kind::TERMINAL: {
        const BoundaryPoint& term = *contact.terminal;
        if (term.provenance && def && *term.provenance == *def) return false;
        fail(ErrorCode::DegenerateInput,
             "sight segment through a chain endpoint");
      }
    }
  }
  return true;
}

// Brute shadow of visible reflex vertex v: the nearest blocking contact of
// the ray q->v over the whole chain.
BoundaryPoint shadow_pt(const PolygonHandle& h, const Chain& c,
                        const std::vector<Piece>& pieces, std::size_t v) {
  const Point& v_pt = h.pt(v);
  bool have = false;
  Contact best;
  for (Contact& contact : ray_contacts(h, c, pieces, v_pt)) {
    switch (contact.kind) {
      case Contact::Kind::PROPER:
        break;
      case Contact::Kind::VERTEX:
        if (contact.vertex != v)
          fail(ErrorCode::DegenerateInput,
               "query ray through an unrelated vertex");
        if (!straddles_pt(h, v, v_pt)) continue;  // reflex vertices graze
        break;
      case Contact::Kind::TERMINAL:
        if (!(contact.terminal->provenance &&
              *contact.terminal->provenance == v))
          fail(ErrorCode::DegenerateInput,
               "query ray through an unrelated chain endpoint");
        break;
    }
    if (!have || contact.t < best.t) {
      have = true;
      best = std::move(contact);
    }
  }
  if (!have) fail(ErrorCode::InternalError, "shadow ray escaped the chain");
  if (best.kind == Contact::Kind::TERMINAL) return *best.terminal;
  const Point& a = h.pt(best.edge);
  const Point& b = h.pt(h.succ(best.edge));
  ExactScalar u = (a.x != b.x) ? (best.point.x - a.x) / (b.x - a.x)
                               : (best.point.y - a.y) / (b.y - a.y);
  return BoundaryPoint::on_edge(best.edge, best.point, std::move(u), v);
}

}  // namespace

EventList oracle_vis_chain(const PolygonHandle& h, const Chain& c) {
  std::vector<Piece> pieces = pieces_of(h, c);
  const Point& q = h.viewpoint();
  const Point& ref = c.start.point;

  EventList events;
  for (const Piece& pc : pieces) {
    if (!pc.b_vertex) continue;
    std::size_t w = *pc.b_vertex;
    if (!visible_pt(h, c, pieces, pc.b, w)) continue;
    events.push_back(VisEvent::vert(w, pc.b));
    if (pc.b_is_end) continue;  // a terminal vertex owns no window here
    if (classify_pt(h, w) == Cls::NONE) continue;
    BoundaryPoint sh = shadow_pt(h, c, pieces, w);
    events.push_back(VisEvent::shadow(w, sh.index, sh.point));
  }

  std::sort(events.begin(), events.end(),
            [&](const VisEvent& a, const VisEvent& b) {
              int cmp = cmp_ccw_angle(q, ref, a.point, b.point);
              if (cmp != 0) return cmp < 0;
              // an angular tie must be one vertex's window pair
              bool pair = a.vertex == b.vertex &&
                          ((a.kind == VisEvent::Kind::VERT &&
                            b.kind == VisEvent::Kind::SHADOW) ||
                           (a.kind == VisEvent::Kind::SHADOW &&
                            b.kind == VisEvent::Kind::VERT));
              if (!pair)
                fail(ErrorCode::DegenerateInput,
                     "angular tie between unrelated events");
              bool vert_first = classify_pt(h, a.vertex) == Cls::R;
              return vert_first == (a.kind == VisEvent::Kind::VERT);
            });

  if (c.wraps) events.insert(events.begin(), VisEvent::p0(c.start.point));
  return events;
}

EventList oracle_vis(const PolygonHandle& h) {
  const Point& q = h.viewpoint();
  Point through{q.x + ExactScalar(1), q.y};
  std::size_t n = h.n();
  bool have = false;
  ExactScalar best_t;
  BoundaryPoint p0;
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<RayHit> hit;
    try {
      hit = ray_segment_intersection(q, through, h.pt(i), h.pt(h.succ(i)));
    } catch (const VisworkError& e) {
      if (e.code() == ErrorCode::OverlapDegenerate)
        fail(ErrorCode::DegenerateInput,
             "horizontal ray overlaps a boundary edge");
      throw;
    }
    if (!hit) continue;
    if (hit->kind == HitKind::ENDPOINT_TOUCH)
      fail(ErrorCode::DegenerateInput,
           "vertex on the horizontal ray used for the origin point");
    if (!have || hit->t < best_t) {
      have = true;
      best_t = hit->t;
      p0 = BoundaryPoint::on_edge(i, hit->point, hit->u);
    }
  }
  if (!have)
    fail(ErrorCode::InternalError, "horizontal ray escaped the boundary");
  return oracle_vis_chain(h, closed_chain(p0));
}

RankCount rank_oracle(const PolygonHandle& h, const Chain& c, std::size_t v) {
  const Point& q = h.viewpoint();
  const Point& ref = c.start.point;
  const Point& v_pt = h.pt(v);
  RankCount rc;
  for (const Piece& pc : pieces_of(h, c)) {
    if (!pc.b_vertex || pc.b_is_end || *pc.b_vertex == v) continue;
    if (!in_cone(q, c.start.point, c.end.point, pc.b)) continue;
    if (classify_pt(h, *pc.b_vertex) == Cls::NONE) continue;
    if (cmp_ccw_angle(q, ref, pc.b, v_pt) < 0)
      ++rc.smaller;
    else
      ++rc.greater;
  }
  return rc;
}

}  // namespace viswork
