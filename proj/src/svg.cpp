#include "viswork/svg.hpp"

#include <algorithm>
#include <cstdio>

namespace viswork {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string xy(const Point& p) {
  // SVG y grows downward; negate to keep the CCW orientation visual
  return num(p.x.approx()) + " " + num(-p.y.approx());
}

template <typename Pts>
void path_from(std::string& out, const char* style, const Pts& pts,
               const Point& (*at)(const Pts&, std::size_t), std::size_t n) {
  out += "  <path " + std::string(style) + " d=\"M ";
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out += " L ";
    out += xy(at(pts, i));
  }
  out += " Z\"/>\n";
}

void marker(std::string& out, const Point& p, double radius,
            const char* fill) {
  out += "  <circle cx=\"" + num(p.x.approx()) + "\" cy=\"" +
         num(-p.y.approx()) + "\" r=\"" + num(radius) + "\" fill=\"" + fill +
         "\"/>\n";
}

}  // namespace

std::string render_svg(const std::vector<Point>& polygon, const Point& q,
                       const EventList& events) {
  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    double x = polygon[i].x.approx(), y = polygon[i].y.approx();
    if (i == 0) {
      minx = maxx = x;
      miny = maxy = y;
    } else {
      minx = std::min(minx, x);
      maxx = std::max(maxx, x);
      miny = std::min(miny, y);
      maxy = std::max(maxy, y);
    }
  }
  double span = std::max(maxx - minx, maxy - miny);
  double pad = span * 0.05 + 1;
  double dot = span * 0.012 + 0.05;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
  out += num(minx - pad) + " " + num(-(maxy + pad)) + " " +
         num(maxx - minx + 2 * pad) + " " + num(maxy - miny + 2 * pad);
  out += "\">\n";

  path_from<std::vector<Point>>(
      out, "fill=\"#eceff1\" stroke=\"#37474f\" stroke-width=\"0.5%\"",
      polygon, [](const std::vector<Point>& v, std::size_t i) -> const Point& {
        return v[i];
      },
      polygon.size());

  if (!events.empty()) {
    path_from<EventList>(
        out,
        "fill=\"#ffd54f\" fill-opacity=\"0.55\" stroke=\"#b8860b\" "
        "stroke-width=\"0.4%\"",
        events,
        [](const EventList& v, std::size_t i) -> const Point& {
          return v[i].point;
        },
        events.size());
    for (const VisEvent& e : events) {
      if (e.kind == VisEvent::Kind::SHADOW) marker(out, e.point, dot, "#6a1b9a");
      if (e.kind == VisEvent::Kind::P0) marker(out, e.point, dot, "#1565c0");
    }
  }
  marker(out, q, dot * 1.4, "#c62828");
  out += "</svg>\n";
  return out;
}

std::string render_svg(const PolygonHandle& h, const EventList& events) {
  std::vector<Point> pts;
  pts.reserve(h.n());
  for (std::size_t i = 0; i < h.n(); ++i) pts.push_back(h.pt(i));
  return render_svg(pts, h.viewpoint(), events);
}

}  // namespace viswork
