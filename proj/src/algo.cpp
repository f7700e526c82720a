#include "viswork/algo.hpp"

#include "viswork/errors.hpp"

namespace viswork {

namespace {

// Emits VERT for the interior vertices of (from, to); with_end also emits a
// vertex at the chain end (constructed end points never produce an event).
void emit_span(const PolygonHandle& h, const Chain& span, QueryContext& ctx,
               const EventSink& sink, bool with_end) {
  ChainWalk walk(h, span, ctx);
  while (auto seg = walk.next()) {
    if (!seg->b_vertex) continue;
    if (seg->b_is_end && !with_end) continue;
    sink(VisEvent::vert(*seg->b_vertex, seg->b));
  }
}

}  // namespace

void vis_chain(const PolygonHandle& h, const Chain& c, QueryContext& ctx,
               const EventSink& sink, bool check_independent) {
  WsScope scope(ctx, WS_VIS_CHAIN);
  if (check_independent) {
    if (!is_visible(h, c, c.start, ctx) || !is_visible(h, c, c.end, ctx))
      fail(ErrorCode::ChainNotIndependent, "chain endpoint not visible");
  }

  BoundaryPoint cur = c.start;
  // an R-type reflex start hides everything up to its shadow (no event: the
  // start point belongs to the caller)
  if (cur.is_vertex() &&
      classify_reflex(h, cur.index, ctx) == ReflexClass::REFLEX_R) {
    Chain tail{cur, c.end, false};
    cur = shadow(h, tail, cur.index, ctx);
  }

  std::size_t guard = 2 * h.n() + 4;
  for (std::size_t iter = 0;; ++iter) {
    if (iter > guard)
      fail(ErrorCode::InternalError, "emission loop exceeded its bound");
    NextReflexResult res = next_vis_reflex(h, c, cur, ctx);
    if (res.kind == NextReflexResult::Kind::END_OF_CHAIN) {
      Chain left{cur, c.end, c.wraps && same_location(cur, c.start)};
      emit_span(h, left, ctx, sink, /*with_end=*/true);
      return;
    }
    BoundaryPoint vb = BoundaryPoint::at_vertex(res.reflex, res.reflex_point);
    if (res.reflex_class == ReflexClass::REFLEX_R) {
      // everything up to v is visible; the window jumps v -> shadow
      emit_span(h, Chain{cur, vb, false}, ctx, sink, /*with_end=*/false);
      sink(VisEvent::vert(res.reflex, res.reflex_point));
      sink(VisEvent::shadow(res.reflex, res.stop.index, res.stop.point));
      cur = res.stop;
    } else {
      // the window jumps shadow -> v; vertices beyond the shadow are hidden
      emit_span(h, Chain{cur, res.stop, false}, ctx, sink, /*with_end=*/false);
      sink(VisEvent::shadow(res.reflex, res.stop.index, res.stop.point));
      sink(VisEvent::vert(res.reflex, res.reflex_point));
      cur = vb;
    }
  }
}

void vis_polygon(const PolygonHandle& h, QueryContext& ctx,
                 const EventSink& sink) {
  BoundaryPoint p0 = find_p0(h, ctx);
  sink(VisEvent::p0(p0.point));
  vis_chain(h, closed_chain(p0), ctx, sink);
}

}  // namespace viswork
