#include "viswork/polygon.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "viswork/errors.hpp"

namespace viswork {

bool same_location(const BoundaryPoint& a, const BoundaryPoint& b) {
  return a.kind == b.kind && a.index == b.index && a.point == b.point;
}

ExactScalar boundary_s(const BoundaryPoint& bp) {
  return ExactScalar(static_cast<long>(bp.index)) + bp.u;
}

const Point& PolygonHandle::vertex(std::size_t i, QueryContext& ctx) const {
  if (i >= pts_.size()) fail(ErrorCode::InvalidQuery, "vertex index out of range");
  ctx.on_access();
  return pts_[i];
}

namespace {

bool between_inclusive(const ExactScalar& a, const ExactScalar& b,
                       const ExactScalar& p) {
  return (a <= b) ? (a <= p && p <= b) : (b <= p && p <= a);
}

// p assumed collinear with a, b.
bool on_segment(const Point& a, const Point& b, const Point& p) {
  return between_inclusive(a.x, b.x, p.x) && between_inclusive(a.y, b.y, p.y);
}

// max(u1,u2) < min(w1,w2): the two coordinate ranges are disjoint.
bool range_below(const ExactScalar& u1, const ExactScalar& u2,
                 const ExactScalar& w1, const ExactScalar& w2) {
  return u1 < w1 && u1 < w2 && u2 < w1 && u2 < w2;
}

// Any contact between closed segments [a1,b1] and [a2,b2].
bool segments_touch(const Point& a1, const Point& b1, const Point& a2,
                    const Point& b2) {
  if (range_below(a1.x, b1.x, a2.x, b2.x) ||
      range_below(a2.x, b2.x, a1.x, b1.x) ||
      range_below(a1.y, b1.y, a2.y, b2.y) ||
      range_below(a2.y, b2.y, a1.y, b1.y))
    return false;
  Orientation o1 = orient(a1, b1, a2);
  Orientation o2 = orient(a1, b1, b2);
  Orientation o3 = orient(a2, b2, a1);
  Orientation o4 = orient(a2, b2, b1);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == Orientation::COLLINEAR && on_segment(a1, b1, a2)) return true;
  if (o2 == Orientation::COLLINEAR && on_segment(a1, b1, b2)) return true;
  if (o3 == Orientation::COLLINEAR && on_segment(a2, b2, a1)) return true;
  if (o4 == Orientation::COLLINEAR && on_segment(a2, b2, b1)) return true;
  return false;
}

ExactScalar twice_signed_area(const std::vector<Point>& v) {
  ExactScalar acc(0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % v.size()];
    acc += a.x * b.y - b.x * a.y;
  }
  return acc;
}

void check_simple(const std::vector<Point>& v) {
  std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point& a1 = v[i];
      const Point& b1 = v[(i + 1) % n];
      const Point& a2 = v[j];
      const Point& b2 = v[(j + 1) % n];
      bool adj_fwd = j == i + 1;
      bool adj_wrap = i == 0 && j == n - 1;
      if (adj_fwd || adj_wrap) {
        // Edges share one vertex; reject only a fold-back onto each other.
        const Point& shared = adj_fwd ? a2 : a1;
        const Point& u = adj_fwd ? a1 : b1;
        const Point& w = adj_fwd ? b2 : a2;
        if (orient(u, shared, w) == Orientation::COLLINEAR &&
            dot(u - shared, w - shared).sign() > 0) {
          fail(ErrorCode::NotSimple, "adjacent edges fold back (spike)");
        }
        continue;
      }
      if (segments_touch(a1, b1, a2, b2)) {
        fail(ErrorCode::NotSimple, "non-adjacent edges intersect");
      }
    }
  }
}

}  // namespace

PolygonHandle load(std::vector<Point> vertices, Point q,
                   const LoadOptions& opts) {
  std::size_t n = vertices.size();
  if (n < 3) fail(ErrorCode::NotSimple, "polygon needs at least 3 vertices");

  for (std::size_t i = 0; i < n; ++i) {
    if (vertices[i] == vertices[(i + 1) % n]) {
      fail(ErrorCode::NotSimple, "zero-length edge");
    }
  }

  int area_sign = twice_signed_area(vertices).sign();
  if (area_sign == 0) fail(ErrorCode::NotSimple, "zero signed area");
  if (area_sign < 0) {
    if (!opts.auto_reverse) {
      fail(ErrorCode::NotCCW, "vertices are in clockwise order");
    }
    std::reverse(vertices.begin(), vertices.end());
  }

  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = vertices[i];
    const Point& b = vertices[(i + 1) % n];
    if (orient(a, b, q) == Orientation::COLLINEAR && on_segment(a, b, q)) {
      fail(ErrorCode::ViewpointOutside, "viewpoint lies on the boundary");
    }
  }

  for (const Point& v : vertices) {
    if (v.y == q.y && v.x > q.x) {
      fail(ErrorCode::DegenerateInput,
           "vertex lies on the horizontal ray used for p0");
    }
  }

  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = vertices[i];
    const Point& b = vertices[(i + 1) % n];
    bool a_above = a.y > q.y;
    bool b_above = b.y > q.y;
    if (a_above == b_above) continue;
    ExactScalar xi = a.x + (q.y - a.y) * (b.x - a.x) / (b.y - a.y);
    if (xi > q.x) inside = !inside;
  }
  if (!inside) fail(ErrorCode::ViewpointOutside, "viewpoint outside the polygon");

  bool strict = opts.strict.value_or(n <= 10000);
  if (strict) {
    check_simple(vertices);
    // two vertices on a common ray from q would share an angle, breaking
    // shadow uniqueness; opposite rays (q between them) are harmless
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (orient(q, vertices[i], vertices[j]) == Orientation::COLLINEAR &&
            dot(vertices[i] - q, vertices[j] - q).sign() > 0) {
          fail(ErrorCode::DegenerateInput,
               "two vertices collinear with the viewpoint on one ray (indices " +
                   std::to_string(i) + ", " + std::to_string(j) + ")");
        }
      }
    }
  }

  PolygonHandle h;
  h.pts_ = std::move(vertices);
  h.q_ = std::move(q);
  h.strict_ = strict;
  return h;
}

namespace {

ExactScalar parse_coord(const std::string& tok) {
  auto v = ExactScalar::parse(tok);
  if (!v) fail(ErrorCode::ParseError, "bad coordinate '" + tok + "'");
  return *v;
}

}  // namespace

std::pair<std::vector<Point>, Point> parse_polygon_text(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) {
      if (!tok.empty() && tok[0] == '#') break;
      toks.push_back(tok);
    }
    if (!toks.empty()) rows.push_back(std::move(toks));
  }

  if (rows.empty()) fail(ErrorCode::ParseError, "empty polygon file");
  if (rows[0].size() != 1) fail(ErrorCode::ParseError, "expected vertex count");
  long n = 0;
  try {
    n = std::stol(rows[0][0]);
  } catch (...) {
    fail(ErrorCode::ParseError, "bad vertex count '" + rows[0][0] + "'");
  }
  if (n < 1) fail(ErrorCode::ParseError, "vertex count must be positive");
  if (rows.size() != static_cast<std::size_t>(n) + 2) {
    fail(ErrorCode::ParseError,
         "expected " + std::to_string(n) + " vertex lines plus a q line");
  }

  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i) + 1];
    if (row.size() != 2) {
      fail(ErrorCode::ParseError, "vertex line needs two coordinates");
    }
    pts.push_back(Point{parse_coord(row[0]), parse_coord(row[1])});
  }

  const auto& qrow = rows.back();
  if (qrow.size() != 3 || qrow[0] != "q") {
    fail(ErrorCode::ParseError, "last line must be `q x y`");
  }
  Point q{parse_coord(qrow[1]), parse_coord(qrow[2])};
  return {std::move(pts), std::move(q)};
}

PolygonHandle load_text(std::string_view text, const LoadOptions& opts) {
  auto [pts, q] = parse_polygon_text(text);
  return load(std::move(pts), std::move(q), opts);
}

std::string to_text(const PolygonHandle& h) {
  std::ostringstream out;
  out << h.n() << "\n";
  for (std::size_t i = 0; i < h.n(); ++i) {
    out << h.pt(i).x.str() << " " << h.pt(i).y.str() << "\n";
  }
  out << "q " << h.viewpoint().x.str() << " " << h.viewpoint().y.str() << "\n";
  return out.str();
}

ChainWalk::ChainWalk(const PolygonHandle& h, const Chain& c, QueryContext& ctx)
    : h_(h), ctx_(ctx), scope_(ctx, WS_CHAIN_WALK), cur_(c.start.point),
      end_(c.end) {
  std::size_t n = h.n();
  f_ = (c.start.index + 1) % n;
  std::size_t didx = (c.end.index + n - c.start.index) % n;
  bool empty = false;
  if (didx == 0) {
    if (c.end.u < c.start.u || (c.end.u == c.start.u && c.wraps)) {
      didx = n;  // the chain wraps the whole way around
    } else if (c.end.u == c.start.u) {
      empty = true;
    }
  }
  if (empty) {
    interior_ = 0;
    remaining_ = 0;
    return;
  }
  interior_ = c.end.is_vertex() ? didx - 1 : didx;
  remaining_ = interior_ + 1;
}

std::optional<Seg> ChainWalk::next() {
  if (remaining_ == 0) return std::nullopt;
  std::size_t n = h_.n();
  std::size_t edge = (f_ + n - 1) % n;
  if (remaining_ == 1) {
    remaining_ = 0;
    std::optional<std::size_t> bv;
    if (end_.is_vertex()) bv = end_.index;
    return Seg{cur_, end_.point, edge, bv, true};
  }
  Point b = h_.vertex(f_, ctx_);
  Seg seg{cur_, b, edge, f_, false};
  cur_ = std::move(b);
  f_ = h_.succ(f_);
  --remaining_;
  return seg;
}

std::optional<BoundaryPoint> chain_next(const PolygonHandle& h, const Chain& c,
                                        const BoundaryPoint& bp,
                                        QueryContext& ctx) {
  WsScope scope(ctx, WS_CHAIN_NEXT);
  long n = static_cast<long>(h.n());
  ExactScalar nn(n);

  auto fwd_delta = [&](const BoundaryPoint& from,
                       const BoundaryPoint& to) -> ExactScalar {
    ExactScalar d = boundary_s(to) - boundary_s(from);
    if (d.sign() < 0) d += nn;
    return d;
  };

  ExactScalar d_end = fwd_delta(bp, c.end);
  if (d_end.is_zero()) {
    if (c.wraps && same_location(bp, c.start)) {
      d_end = nn;  // closed chain: the shared location counts as the start
    } else {
      return std::nullopt;  // bp is the chain end
    }
  } else if (!c.wraps) {
    ExactScalar total = fwd_delta(c.start, c.end);
    if (fwd_delta(c.start, bp) + d_end != total) {
      fail(ErrorCode::InvalidQuery, "boundary point does not lie on the chain");
    }
  }

  std::size_t f = (bp.index + 1) % h.n();
  ExactScalar d_f = ExactScalar(static_cast<long>(f)) - boundary_s(bp);
  if (d_f.sign() <= 0) d_f += nn;
  if (d_f < d_end) {
    return BoundaryPoint::at_vertex(f, h.vertex(f, ctx));
  }
  return c.end;
}

}  // namespace viswork
