#include <doctest.h>

#include "helpers.hpp"
#include "viswork/algo.hpp"
#include "viswork/testgen.hpp"

using namespace viswork;
using namespace viswork::testing;

TEST_SUITE("algo") {

TEST_CASE("full visibility polygon of the L-shape") {
  PolygonHandle l6 = make_l6();
  EventList expected = {
      VisEvent::p0({ExactScalar(4), rat(1, 2)}),
      VisEvent::vert(2, l6.pt(2)),
      VisEvent::vert(3, l6.pt(3)),
      VisEvent::shadow(3, 4, {rat(2, 3), ExactScalar(4)}),
      VisEvent::vert(5, l6.pt(5)),
      VisEvent::vert(0, l6.pt(0)),
      VisEvent::vert(1, l6.pt(1)),
  };
  QueryContext ctx;
  EventList got;
  vis_polygon(l6, ctx, collect_into(got));
  CHECK(got == expected);
  CHECK(ctx.ws_current == 0);
  CHECK(ctx.depth_peak == 0);  // the single-scan driver never recurses
  CHECK(ctx.access_count > 0);
}

TEST_CASE("full visibility polygon of a convex polygon has no windows") {
  PolygonHandle sq = make_sq4();
  EventList expected = {
      VisEvent::p0(ipt(4, 2)),
      VisEvent::vert(2, sq.pt(2)),
      VisEvent::vert(3, sq.pt(3)),
      VisEvent::vert(0, sq.pt(0)),
      VisEvent::vert(1, sq.pt(1)),
  };
  CHECK(scan_events(sq) == expected);
}

TEST_CASE("scan signatures of generated fixtures") {
  Generated comb = generate(GenSpec::parse("comb:m=2,seed=1"));
  CHECK(event_sig(scan_events(*comb.handle)) ==
        "P0 V2 V3 V4 S6@4 V6 V7 S7@8 V9 V10 V11 V0 V1");
  Generated star = generate(GenSpec::parse("star:n=16,seed=5"));
  CHECK(event_sig(scan_events(*star.handle)) ==
        "P0 V1 S1@4 V5 S5@6 V7 V8 V9 S11@9 V11 S15@11 V15 V0");
}

TEST_CASE("chain emission skips the start and constructed end points") {
  PolygonHandle l6 = make_l6();
  QueryContext ctx;
  BoundaryPoint p0 = find_p0(l6, ctx);

  // vertex-to-vertex chain: the end vertex is emitted, the start is not
  Chain c{BoundaryPoint::at_vertex(5, l6.pt(5)),
          BoundaryPoint::at_vertex(1, l6.pt(1)), false};
  EventList evs;
  vis_chain(l6, c, ctx, collect_into(evs), true);
  CHECK(event_sig(evs) == "V0 V1");

  // constructed end point (p0) is the caller's, not the chain's
  Chain d{BoundaryPoint::at_vertex(5, l6.pt(5)), p0, false};
  evs.clear();
  vis_chain(l6, d, ctx, collect_into(evs), true);
  CHECK(event_sig(evs) == "V0 V1");
  CHECK(ctx.ws_current == 0);
}

TEST_CASE("independence check rejects chains with invisible endpoints") {
  PolygonHandle l6 = make_l6();
  QueryContext ctx;
  Chain c{BoundaryPoint::at_vertex(2, l6.pt(2)),
          BoundaryPoint::at_vertex(4, l6.pt(4)), false};
  EventList evs;
  CHECK(error_code_of([&] {
          vis_chain(l6, c, ctx, collect_into(evs), true);
        }) == ErrorCode::ChainNotIndependent);
}

TEST_CASE("splitting at a window shadow preserves the event stream") {
  PolygonHandle l6 = make_l6();
  QueryContext ctx;
  BoundaryPoint p0 = find_p0(l6, ctx);
  Chain whole = closed_chain(p0);
  BoundaryPoint x = shadow(l6, whole, 3, ctx);  // provenance 3, on edge 4

  EventList full;
  vis_chain(l6, whole, ctx, collect_into(full));

  EventList joined;
  vis_chain(l6, Chain{p0, x, false}, ctx, collect_into(joined), true);
  vis_chain(l6, Chain{x, p0, false}, ctx, collect_into(joined), true);
  CHECK(joined == full);
  CHECK(event_sig(joined) == "V2 V3 S3@4 V5 V0 V1");
}

TEST_CASE("scan workspace is independent of the input size") {
  Generated small = generate(GenSpec::parse("comb:m=4,seed=0"));
  Generated large = generate(GenSpec::parse("comb:m=64,seed=0"));
  QueryContext a, b;
  EventList drop;
  vis_polygon(*small.handle, a, collect_into(drop));
  drop.clear();
  vis_polygon(*large.handle, b, collect_into(drop));
  CHECK(a.ws_peak == b.ws_peak);
  CHECK(b.access_count > a.access_count);  // reads scale, workspace does not
}

}  // TEST_SUITE
