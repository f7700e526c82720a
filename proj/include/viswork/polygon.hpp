#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "viswork/geometry.hpp"

namespace viswork {

// Per-query instrumentation: exact input-access counter plus a cooperative
// workspace-word meter. One context per algorithm invocation, never shared.
struct QueryContext {
  std::uint64_t access_count = 0;
  std::size_t ws_current = 0;
  std::size_t ws_peak = 0;
  std::size_t depth_current = 0;
  std::size_t depth_peak = 0;
  std::size_t max_scalar_bits = 0;  // diagnostic only, not workspace

  void on_access() { ++access_count; }

  void ws_acquire(std::size_t words) {
    ws_current += words;
    if (ws_current > ws_peak) ws_peak = ws_current;
  }
  void ws_release(std::size_t words) {
    ws_current = words <= ws_current ? ws_current - words : 0;
  }

  void set_depth(std::size_t d) {
    depth_current = d;
    if (d > depth_peak) depth_peak = d;
  }

  void note_bits(std::size_t bits) {
    if (bits > max_scalar_bits) max_scalar_bits = bits;
  }
};

// RAII token declaring `words` live workspace words for the enclosing scope.
// Every operation in this library declares its locals through one of these;
// the counts are fixed documented constants (see the WS_* constexprs).
class WsScope {
 public:
  WsScope(QueryContext& ctx, std::size_t words) : ctx_(ctx), words_(words) {
    ctx_.ws_acquire(words_);
  }
  ~WsScope() { ctx_.ws_release(words_); }
  WsScope(const WsScope&) = delete;
  WsScope& operator=(const WsScope&) = delete;

 private:
  QueryContext& ctx_;
  std::size_t words_;
};

// A point on the polygon boundary: an input vertex (by index) or a point
// strictly interior to edge `index` (edge j runs vertex j -> vertex j+1 mod n).
// ON_EDGE points are depth-1 constructions: the intersection of an edge with
// the ray from q through the vertex recorded in `provenance` (or the p0 ray).
struct BoundaryPoint {
  enum class Kind { VERTEX, ON_EDGE };

  Kind kind = Kind::VERTEX;
  std::size_t index = 0;           // vertex index, or edge index for ON_EDGE
  Point point;                     // exact coordinates (always set)
  ExactScalar u;                   // edge parameter in (0,1); 0 for VERTEX
  std::optional<std::size_t> provenance;  // defining reflex vertex, if any

  static BoundaryPoint at_vertex(std::size_t i, Point p) {
    BoundaryPoint bp;
    bp.kind = Kind::VERTEX;
    bp.index = i;
    bp.point = std::move(p);
    return bp;
  }

  static BoundaryPoint on_edge(std::size_t edge, Point p, ExactScalar u,
                               std::optional<std::size_t> prov = std::nullopt) {
    BoundaryPoint bp;
    bp.kind = Kind::ON_EDGE;
    bp.index = edge;
    bp.point = std::move(p);
    bp.u = std::move(u);
    bp.provenance = prov;
    return bp;
  }

  bool is_vertex() const { return kind == Kind::VERTEX; }
};

// Same boundary location (provenance and u are bookkeeping, not location).
bool same_location(const BoundaryPoint& a, const BoundaryPoint& b);

// Fractional arc position in [0, n): vertex i -> i, edge-interior -> index + u.
ExactScalar boundary_s(const BoundaryPoint& bp);

// CCW subchain of the boundary between two visible endpoints, O(1) words.
// `wraps` disambiguates coincident endpoints: true = the full closed boundary
// (the initial chain at p0), false = the empty chain.
struct Chain {
  BoundaryPoint start;
  BoundaryPoint end;
  bool wraps = false;
};

inline Chain closed_chain(const BoundaryPoint& p0) { return {p0, p0, true}; }

struct LoadOptions {
  std::optional<bool> strict;  // default: n <= 10^4
  bool auto_reverse = true;    // reverse CW input instead of failing NotCCW
};

// Read-only polygon container. Vertices are CCW; q is strictly interior.
// vertex() is the only metered access path; pt() bypasses the meter and is
// reserved for load-time validation, oracles, and tests.
class PolygonHandle {
 public:
  std::size_t n() const { return pts_.size(); }
  const Point& viewpoint() const { return q_; }

  const Point& vertex(std::size_t i, QueryContext& ctx) const;
  const Point& pt(std::size_t i) const { return pts_[i]; }

  std::size_t succ(std::size_t i) const { return i + 1 < pts_.size() ? i + 1 : 0; }
  std::size_t pred(std::size_t i) const { return i > 0 ? i - 1 : pts_.size() - 1; }

  bool strict_validated() const { return strict_; }

 private:
  friend PolygonHandle load(std::vector<Point> vertices, Point q,
                            const LoadOptions& opts);
  PolygonHandle() = default;

  std::vector<Point> pts_;
  Point q_;
  bool strict_ = false;
};

// Validates and wraps the input. Always checked (O(n)): vertex count, zero
// length edges, orientation (auto-reverse or NotCCW), q on boundary or outside
// (ViewpointOutside), vertex on the +x ray from q (DegenerateInput). Strict
// mode adds the O(n^2) checks: pairwise edge simplicity (NotSimple) and
// vertex-pair collinearity through q (DegenerateInput).
PolygonHandle load(std::vector<Point> vertices, Point q,
                   const LoadOptions& opts = {});

// Text format: comment lines start with '#'; first data line `n`; then n lines
// `x y`; final line `q x y`. Coordinates are exact decimals or `p/q` rationals.
std::pair<std::vector<Point>, Point> parse_polygon_text(std::string_view text);
PolygonHandle load_text(std::string_view text, const LoadOptions& opts = {});
std::string to_text(const PolygonHandle& h);

// Iteration state for walking a chain: the chain decomposes into consecutive
// sub-segments of boundary edges. 4 workspace words while alive.
struct Seg {
  Point a;
  Point b;
  std::size_t edge = 0;                  // boundary edge this piece lies on
  std::optional<std::size_t> b_vertex;   // set when b is an input vertex
  bool b_is_end = false;                 // b is the chain end point
};

constexpr std::size_t WS_CHAIN_WALK = 4;

class ChainWalk {
 public:
  ChainWalk(const PolygonHandle& h, const Chain& c, QueryContext& ctx);
  std::optional<Seg> next();

  // Interior vertex count of the chain (vertices strictly between endpoints).
  std::size_t interior_count() const { return interior_; }

 private:
  const PolygonHandle& h_;
  QueryContext& ctx_;
  WsScope scope_;
  Point cur_;
  BoundaryPoint end_;
  std::size_t f_ = 0;          // next vertex index ahead of cur_
  std::size_t remaining_ = 0;  // segments still to yield
  std::size_t interior_ = 0;
};

constexpr std::size_t WS_CHAIN_NEXT = 5;

// Next chain vertex strictly after bp, or c.end when no vertex remains, or
// nullopt when bp is already the chain end. On the closed chain the shared
// start/end location counts as the start.
std::optional<BoundaryPoint> chain_next(const PolygonHandle& h, const Chain& c,
                                        const BoundaryPoint& bp,
                                        QueryContext& ctx);

}  // namespace viswork
