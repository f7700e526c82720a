#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "viswork/algo.hpp"
#include "viswork/errors.hpp"
#include "viswork/events.hpp"
#include "viswork/polygon.hpp"

namespace viswork::testing {

inline Point ipt(long x, long y) { return {ExactScalar(x), ExactScalar(y)}; }

inline ExactScalar rat(long n, long d) { return ExactScalar(n, d); }

// 4x4 axis-aligned square, viewpoint at the center. Convex baseline.
inline PolygonHandle make_sq4() {
  LoadOptions opts;
  opts.strict = true;
  return load({ipt(0, 0), ipt(4, 0), ipt(4, 4), ipt(0, 4)}, ipt(2, 2), opts);
}

// L-shaped hexagon with one reflex corner at vertex 3 = (2,2); the viewpoint
// (3, 1/2) sits in the bottom arm, so vertex 3 casts one window whose shadow
// lands on the top edge at (2/3, 4).
inline PolygonHandle make_l6(Point q = {ExactScalar(3), ExactScalar(1, 2)},
                             std::optional<bool> strict = true) {
  LoadOptions opts;
  opts.strict = strict;
  return load({ipt(0, 0), ipt(4, 0), ipt(4, 2), ipt(2, 2), ipt(2, 4), ipt(0, 4)},
              std::move(q), opts);
}

// The error code thrown by f, or nullopt when f completes.
inline std::optional<ErrorCode> error_code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const VisworkError& e) {
    return e.code();
  }
  return std::nullopt;
}

// Compact order/identity signature: "P0 V2 S3@4 ..." (coordinates elided).
inline std::string event_sig(const EventList& evs) {
  std::string out;
  for (const VisEvent& e : evs) {
    if (!out.empty()) out += ' ';
    switch (e.kind) {
      case VisEvent::Kind::P0:
        out += "P0";
        break;
      case VisEvent::Kind::VERT:
        out += 'V' + std::to_string(e.vertex);
        break;
      case VisEvent::Kind::SHADOW:
        out += 'S' + std::to_string(e.vertex) + '@' + std::to_string(e.edge);
        break;
    }
  }
  return out;
}

inline EventList scan_events(const PolygonHandle& h) {
  QueryContext ctx;
  EventList evs;
  vis_polygon(h, ctx, collect_into(evs));
  return evs;
}

}  // namespace viswork::testing
