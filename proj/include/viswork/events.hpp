#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "viswork/geometry.hpp"

namespace viswork {

// One element of the visibility polygon, emitted in CCW order from p0:
// the p0 marker, a visible input vertex, or a window shadow point.
struct VisEvent {
  enum class Kind { P0, VERT, SHADOW };

  Kind kind = Kind::P0;
  std::size_t vertex = 0;  // VERT: the vertex; SHADOW: the reflex vertex
  std::size_t edge = 0;    // SHADOW: edge containing the shadow point
  Point point;             // exact coordinates (set for all kinds)

  static VisEvent p0(Point p) {
    VisEvent e;
    e.kind = Kind::P0;
    e.point = std::move(p);
    return e;
  }
  static VisEvent vert(std::size_t i, Point p) {
    VisEvent e;
    e.kind = Kind::VERT;
    e.vertex = i;
    e.point = std::move(p);
    return e;
  }
  static VisEvent shadow(std::size_t reflex, std::size_t edge, Point p) {
    VisEvent e;
    e.kind = Kind::SHADOW;
    e.vertex = reflex;
    e.edge = edge;
    e.point = std::move(p);
    return e;
  }

  bool operator==(const VisEvent& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
      case Kind::P0: return point == o.point;
      case Kind::VERT: return vertex == o.vertex;
      case Kind::SHADOW:
        return vertex == o.vertex && edge == o.edge && point == o.point;
    }
    return false;
  }
  bool operator!=(const VisEvent& o) const { return !(*this == o); }
};

// Streaming consumer; algorithms never buffer their output.
using EventSink = std::function<void(const VisEvent&)>;

using EventList = std::vector<VisEvent>;

inline EventSink collect_into(EventList& out) {
  return [&out](const VisEvent& e) { out.push_back(e); };
}

}  // namespace viswork
