#include <doctest.h>

#include "helpers.hpp"
#include "viswork/geometry.hpp"

using namespace viswork;
using namespace viswork::testing;

TEST_SUITE("geometry") {

TEST_CASE("exact scalar parses integers, fractions and decimals") {
  CHECK(ExactScalar::parse("7").value() == ExactScalar(7));
  CHECK(ExactScalar::parse("-3").value() == ExactScalar(-3));
  CHECK(ExactScalar::parse("2/3").value() == rat(2, 3));
  CHECK(ExactScalar::parse("-7/4").value() == rat(-7, 4));
  CHECK(ExactScalar::parse("-1.25").value() == rat(-5, 4));
  CHECK(ExactScalar::parse("0.0078125").value() == rat(1, 128));
  CHECK_FALSE(ExactScalar::parse("").has_value());
  CHECK_FALSE(ExactScalar::parse("1/").has_value());
  CHECK_FALSE(ExactScalar::parse("nope").has_value());
  CHECK_FALSE(ExactScalar::parse("1.2.3").has_value());
}

TEST_CASE("exact scalar arithmetic stays canonical") {
  ExactScalar a = rat(2, 6);  // reduces to 1/3
  CHECK(a.str() == "1/3");
  CHECK((a + rat(1, 3)).str() == "2/3");
  CHECK((a * ExactScalar(3)).str() == "1");
  CHECK((a - a).is_zero());
  CHECK((rat(1, 2) / rat(1, 4)) == ExactScalar(2));
  CHECK(rat(-7, 4).floor_long() == -2);
  CHECK(rat(7, 4).floor_long() == 1);
  CHECK(ExactScalar(-3).sign() == -1);
  CHECK(rat(5, 2).is_integer() == false);
  CHECK(rat(6, 2).is_integer() == true);
  CHECK(rat(1, 2) < rat(2, 3));
}

TEST_CASE("orientation predicate") {
  CHECK(orient(ipt(0, 0), ipt(2, 0), ipt(1, 1)) == Orientation::CCW);
  CHECK(orient(ipt(0, 0), ipt(2, 0), ipt(1, -1)) == Orientation::CW);
  CHECK(orient(ipt(0, 0), ipt(2, 0), ipt(4, 0)) == Orientation::COLLINEAR);
  CHECK(cross(ipt(1, 0), ipt(0, 1)) == ExactScalar(1));
  CHECK(dot(ipt(1, 2), ipt(3, 4)) == ExactScalar(11));
}

TEST_CASE("same direction requires equal sense, not just parallelism") {
  CHECK(same_direction(ipt(2, 4), ipt(1, 2)));
  CHECK_FALSE(same_direction(ipt(1, 2), ipt(-1, -2)));
  CHECK_FALSE(same_direction(ipt(1, 0), ipt(0, 1)));
}

TEST_CASE("ccw angle comparison from a reference direction") {
  Point q = ipt(0, 0), ref = ipt(1, 0);
  CHECK(cmp_ccw_angle(q, ref, ipt(1, 1), ipt(0, 1)) == -1);
  CHECK(cmp_ccw_angle(q, ref, ipt(0, 1), ipt(1, 1)) == 1);
  CHECK(cmp_ccw_angle(q, ref, ipt(2, 2), ipt(1, 1)) == 0);
  // full turn ordering: +x < +y < -x < -y < just-below-+x
  CHECK(cmp_ccw_angle(q, ref, ipt(-1, 0), ipt(0, -1)) == -1);
  CHECK(cmp_ccw_angle(q, ref, ipt(0, -1), ipt(5, -1)) == -1);
  CHECK(cmp_ccw_angle(q, ref, ipt(1, 0), ipt(5, -1)) == -1);  // ref itself is 0
  CHECK(error_code_of([&] { cmp_ccw_angle(q, ref, q, ipt(1, 1)); }) ==
        ErrorCode::InvalidQuery);
}

TEST_CASE("cone membership is closed and equal bounds mean the full plane") {
  Point q = ipt(0, 0);
  CHECK(in_cone(q, ipt(1, 0), ipt(0, 1), ipt(1, 1)));
  CHECK(in_cone(q, ipt(1, 0), ipt(0, 1), ipt(2, 0)));    // on the start ray
  CHECK(in_cone(q, ipt(1, 0), ipt(0, 1), ipt(0, 3)));    // on the end ray
  CHECK_FALSE(in_cone(q, ipt(1, 0), ipt(0, 1), ipt(-1, -1)));
  CHECK_FALSE(in_cone(q, ipt(1, 0), ipt(0, 1), ipt(1, -1)));
  // reflex cone (wider than pi)
  CHECK(in_cone(q, ipt(0, 1), ipt(1, -1), ipt(-1, 0)));
  CHECK_FALSE(in_cone(q, ipt(0, 1), ipt(1, -1), ipt(1, 0)));
  // equal bounding directions: everything passes
  CHECK(in_cone(q, ipt(1, 1), ipt(2, 2), ipt(-7, 3)));
  CHECK(error_code_of([&] { in_cone(q, q, ipt(1, 0), ipt(1, 1)); }) ==
        ErrorCode::InvalidQuery);
}

TEST_CASE("ray-segment intersection classifies crossings and touches") {
  Point q = ipt(0, 0), through = ipt(1, 0);

  auto hit = ray_segment_intersection(q, through, ipt(3, -1), ipt(3, 1));
  REQUIRE(hit.has_value());
  CHECK(hit->kind == HitKind::PROPER_CROSSING);
  CHECK(hit->t == ExactScalar(3));
  CHECK(hit->u == rat(1, 2));
  CHECK(hit->point == ipt(3, 0));

  // endpoint touch: the ray meets the segment exactly at a segment endpoint
  auto touch = ray_segment_intersection(q, through, ipt(2, 0), ipt(4, 3));
  REQUIRE(touch.has_value());
  CHECK(touch->kind == HitKind::ENDPOINT_TOUCH);
  CHECK(touch->u.is_zero());
  CHECK(touch->point == ipt(2, 0));

  // miss, and segment entirely behind the ray origin
  CHECK_FALSE(ray_segment_intersection(q, through, ipt(1, 1), ipt(2, 2)).has_value());
  CHECK_FALSE(ray_segment_intersection(q, through, ipt(-3, -1), ipt(-3, 1)).has_value());

  CHECK(error_code_of([&] {
          ray_segment_intersection(q, through, ipt(2, 0), ipt(5, 0));
        }) == ErrorCode::OverlapDegenerate);
  CHECK(error_code_of([&] {
          ray_segment_intersection(q, q, ipt(1, -1), ipt(1, 1));
        }) == ErrorCode::InvalidQuery);
}

TEST_CASE("point formatting") {
  Point p{rat(2, 3), ExactScalar(4)};
  CHECK(p.str() == "(2/3, 4)");
  CHECK((p - p) == ipt(0, 0));
  CHECK((p * ExactScalar(3)) == ipt(2, 12));
}

}  // TEST_SUITE
