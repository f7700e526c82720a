#include <doctest.h>

#include "helpers.hpp"
#include "viswork/testgen.hpp"
#include "viswork/visibility.hpp"

using namespace viswork;
using namespace viswork::testing;

namespace {

BoundaryPoint l6_p0() {
  return BoundaryPoint::on_edge(1, {ExactScalar(4), rat(1, 2)}, rat(1, 4));
}

}  // namespace

TEST_SUITE("visibility") {

TEST_CASE("p0 is the first boundary point in the +x direction") {
  PolygonHandle l6 = make_l6();
  QueryContext ctx;
  BoundaryPoint p0 = find_p0(l6, ctx);
  CHECK_FALSE(p0.is_vertex());
  CHECK(p0.index == 1);
  CHECK(p0.point == Point{ExactScalar(4), rat(1, 2)});
  CHECK(p0.u == rat(1, 4));
  CHECK(ctx.ws_current == 0);

  PolygonHandle sq = make_sq4();
  QueryContext ctx2;
  BoundaryPoint q0 = find_p0(sq, ctx2);
  CHECK(q0.index == 1);
  CHECK(q0.point == ipt(4, 2));
  CHECK(q0.u == rat(1, 2));
}

TEST_CASE("reflex classification is local and viewpoint dependent") {
  PolygonHandle l6 = make_l6();
  QueryContext ctx;
  CHECK(classify_reflex(l6, 3, ctx) == ReflexClass::REFLEX_R);
  CHECK(ctx.access_count == 3);  // exactly pred, v, succ
  for (std::size_t i : {0u, 1u, 2u, 4u, 5u})
    CHECK(classify_reflex(l6, i, ctx) == ReflexClass::NOT_REFLEX);

  // same polygon, viewpoint moved: the corner still has interior angle > pi
  // but its neighbors now lie on opposite sides of the line through q
  PolygonHandle other = make_l6(ipt(1, 1));
  QueryContext ctx2;
  CHECK(classify_reflex(other, 3, ctx2) == ReflexClass::NOT_REFLEX);

  PolygonHandle sq = make_sq4();
  QueryContext ctx3;
  for (std::size_t i = 0; i < sq.n(); ++i)
    CHECK(classify_reflex(sq, i, ctx3) == ReflexClass::NOT_REFLEX);
}

TEST_CASE("collinear viewpoint turn at a corner is degenerate") {
  // q=(2,1) is collinear with vertices 3=(2,2) and 4=(2,4); only a lax load
  // accepts this, and classification then refuses to pick a side
  PolygonHandle h = make_l6(ipt(2, 1), false);
  QueryContext ctx;
  CHECK(error_code_of([&] { classify_reflex(h, 3, ctx); }) ==
        ErrorCode::DegenerateInput);
}

TEST_CASE("visibility test against the closed chain") {
  PolygonHandle l6 = make_l6();
  Chain c = closed_chain(l6_p0());
  QueryContext ctx;
  for (std::size_t i : {0u, 1u, 2u, 3u, 5u})
    CHECK(is_visible(l6, c, BoundaryPoint::at_vertex(i, l6.pt(i)), ctx));
  CHECK_FALSE(is_visible(l6, c, BoundaryPoint::at_vertex(4, l6.pt(4)), ctx));
  CHECK(ctx.ws_current == 0);
}

TEST_CASE("ray shooting returns the nearest blocking contact") {
  PolygonHandle l6 = make_l6();
  Chain c = closed_chain(l6_p0());
  QueryContext ctx;

  // through the invisible corner (2,4): blocked by the ceiling of the arm
  BoundaryPoint hit =
      ray_shoot(l6, c, BoundaryPoint::at_vertex(4, l6.pt(4)), ctx);
  CHECK_FALSE(hit.is_vertex());
  CHECK(hit.index == 2);
  CHECK(hit.point == Point{rat(18, 7), ExactScalar(2)});
  CHECK(hit.u == rat(5, 7));
  CHECK(hit.provenance == std::size_t{4});
  CHECK(ctx.ws_current == 0);
}

TEST_CASE("shadow of the reflex corner lands on the far top edge") {
  PolygonHandle l6 = make_l6();
  Chain c = closed_chain(l6_p0());
  QueryContext ctx;
  BoundaryPoint s = shadow(l6, c, 3, ctx);
  CHECK_FALSE(s.is_vertex());
  CHECK(s.index == 4);
  CHECK(s.point == Point{rat(2, 3), ExactScalar(4)});
  CHECK(s.u == rat(2, 3));
  CHECK(s.provenance == std::size_t{3});
}

TEST_CASE("a sight segment through a polygon vertex is degenerate") {
  PolygonHandle h = make_l6(ipt(2, 1), false);
  QueryContext ctx;
  BoundaryPoint p0 = find_p0(h, ctx);
  Chain c = closed_chain(p0);
  BoundaryPoint v4 = BoundaryPoint::at_vertex(4, h.pt(4));
  CHECK(error_code_of([&] { is_visible(h, c, v4, ctx); }) ==
        ErrorCode::DegenerateInput);
  CHECK(error_code_of([&] { ray_shoot(h, c, v4, ctx); }) ==
        ErrorCode::DegenerateInput);
}

TEST_CASE("next visible reflex vertex scan on the closed chain") {
  PolygonHandle l6 = make_l6();
  Chain c = closed_chain(l6_p0());
  QueryContext ctx;

  NextReflexResult r1 = next_vis_reflex(l6, c, c.start, ctx);
  REQUIRE(r1.kind == NextReflexResult::Kind::FOUND);
  CHECK(r1.reflex == 3);
  CHECK(r1.reflex_point == ipt(2, 2));
  CHECK(r1.reflex_class == ReflexClass::REFLEX_R);
  CHECK_FALSE(r1.stop.is_vertex());
  CHECK(r1.stop.index == 4);
  CHECK(r1.stop.point == Point{rat(2, 3), ExactScalar(4)});

  NextReflexResult r2 = next_vis_reflex(l6, c, r1.stop, ctx);
  CHECK(r2.kind == NextReflexResult::Kind::END_OF_CHAIN);
  CHECK(same_location(r2.stop, c.end));

  // an R-type reflex start restarts the scan from its own shadow, skipping
  // the pocket behind the window
  NextReflexResult r3 =
      next_vis_reflex(l6, c, BoundaryPoint::at_vertex(3, l6.pt(3)), ctx);
  CHECK(r3.kind == NextReflexResult::Kind::END_OF_CHAIN);
  CHECK(ctx.ws_current == 0);
}

TEST_CASE("invisible reflex vertex triggers the pocket-closing scan") {
  // displaced star: the first reflex vertex after vertex 11 is vertex 13,
  // which is hidden; the scan must keep walking and return the pocket-closing
  // vertex 15 (always an L-type) with its shadow on edge 11.
  Generated g = generate(GenSpec::parse("star:n=16,seed=5"));
  REQUIRE(g.handle.has_value());
  const PolygonHandle& h = *g.handle;

  QueryContext ctx;
  BoundaryPoint p0 = find_p0(h, ctx);
  Chain c = closed_chain(p0);

  CHECK(classify_reflex(h, 13, ctx) != ReflexClass::NOT_REFLEX);
  CHECK_FALSE(is_visible(h, c, BoundaryPoint::at_vertex(13, h.pt(13)), ctx));

  NextReflexResult r =
      next_vis_reflex(h, c, BoundaryPoint::at_vertex(11, h.pt(11)), ctx);
  REQUIRE(r.kind == NextReflexResult::Kind::FOUND);
  CHECK(r.reflex == 15);
  CHECK(r.reflex_class == ReflexClass::REFLEX_L);
  CHECK_FALSE(r.stop.is_vertex());
  CHECK(r.stop.index == 11);
  CHECK(is_visible(h, c, r.stop, ctx));
  CHECK(ctx.ws_current == 0);
}

}  // TEST_SUITE
