#pragma once

#include <string>
#include <vector>

#include "viswork/events.hpp"
#include "viswork/polygon.hpp"

namespace viswork {

// Standalone SVG: the polygon, the viewpoint marker, and (when events are
// non-empty) the visibility polygon with its shadow-point markers.
std::string render_svg(const std::vector<Point>& polygon, const Point& q,
                       const EventList& events);

std::string render_svg(const PolygonHandle& h, const EventList& events);

}  // namespace viswork
