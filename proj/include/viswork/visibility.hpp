#pragma once

#include <cstddef>

#include "viswork/polygon.hpp"

namespace viswork {

// Classification of a vertex relative to the viewpoint q. A vertex is reflex
// with respect to q when its interior angle exceeds pi AND both neighbors lie
// strictly on the same side of the line through q and the vertex; equivalently
// (q, v, pred) and (q, v, succ) are both CW turns (type R) or both CCW (type
// L). The rule is purely local and applies to invisible vertices too.
enum class ReflexClass { NOT_REFLEX, REFLEX_R, REFLEX_L };

// Result of the next-visible-reflex scan along a chain.
struct NextReflexResult {
  enum class Kind { END_OF_CHAIN, FOUND };

  Kind kind = Kind::END_OF_CHAIN;
  std::size_t reflex = 0;            // FOUND: the visible reflex vertex
  Point reflex_point;                // FOUND: its coordinates
  ReflexClass reflex_class = ReflexClass::NOT_REFLEX;
  BoundaryPoint stop;                // FOUND: its shadow; END: the chain end
};

// Documented per-operation workspace constants (locals declared via WsScope;
// nested helpers add their own scopes on top).
constexpr std::size_t WS_FIND_P0 = 8;
constexpr std::size_t WS_CLASSIFY = 5;
constexpr std::size_t WS_IS_VISIBLE = 6;
constexpr std::size_t WS_RAY_SHOOT = 10;
constexpr std::size_t WS_SHADOW = 2;
constexpr std::size_t WS_NEXT_VIS_REFLEX = 10;

// First boundary hit of the ray from q in the +x direction: an edge-interior
// point, visible by construction; the angular origin of all output orderings.
// Fails DegenerateInput when the nearest hit is a vertex or an overlap.
BoundaryPoint find_p0(const PolygonHandle& h, QueryContext& ctx);

// Local two-turn classification; reads exactly vertices i-1, i, i+1 (3 input
// accesses). A flat corner (collinear pred-v-succ) is NOT_REFLEX; a collinear
// (q, v, neighbor) turn fails DegenerateInput.
ReflexClass classify_reflex(const PolygonHandle& h, std::size_t i,
                            QueryContext& ctx);

// True iff no edge of chain c blocks the open segment q -> x.point. Contacts
// at reflex-wrt-q vertices on the segment graze and do not block; a contact at
// a constructed chain endpoint blocks iff its provenance matches x's defining
// vertex. One scan, O(1) words.
bool is_visible(const PolygonHandle& h, const Chain& c, const BoundaryPoint& x,
                QueryContext& ctx);

// Last visible point of chain c on the ray from q through x: the nearest
// non-grazing contact along the ray (smallest t > 0). Grazing vertex touches
// (both polygon neighbors on one side of the ray line) are skipped; straddling
// vertex touches block at the vertex; a touch at a constructed chain endpoint
// blocks when its provenance matches x's defining vertex or it is x itself.
// Fails DegenerateInput on ray overlap or a foreign vertex hit.
BoundaryPoint ray_shoot(const PolygonHandle& h, const Chain& c,
                        const BoundaryPoint& x, QueryContext& ctx);

// Shadow of a visible reflex-wrt-q vertex v: ray_shoot through v; an edge
// interior point with provenance v (or a provenance-matched chain endpoint).
BoundaryPoint shadow(const PolygonHandle& h, const Chain& c, std::size_t v,
                     QueryContext& ctx);

// The next visible reflex vertex of c strictly after visible point p, with its
// shadow; END_OF_CHAIN(c.end) when none remains. If p is an R-type reflex
// vertex the scan restarts from p's shadow. When the first reflex vertex after
// p is invisible, one extra scan walks the remaining chain keeping an
// inside/outside flag for the region R(p, v) — toggled exactly at proper
// crossings of the open segment q->v — and returns the L-type reflex vertex
// inside the region with the minimum CCW offset from the direction q->p.
// O(chain length) accesses, O(1) words.
NextReflexResult next_vis_reflex(const PolygonHandle& h, const Chain& c,
                                 const BoundaryPoint& p, QueryContext& ctx);

}  // namespace viswork
