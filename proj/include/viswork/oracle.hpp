#pragma once

#include <cstddef>

#include "viswork/events.hpp"
#include "viswork/polygon.hpp"

namespace viswork {

// Brute-force reference implementations used to cross-check the streaming
// algorithms. They materialize the whole answer (no workspace discipline, no
// access metering) and share only the exact geometry predicates and the
// chain-enumeration plumbing with the production code: visibility, shadows,
// ordering and window logic are all re-derived here from first principles.

// Angular rank of vertex v among the reflex-in-cone vertices of c.
struct RankCount {
  std::size_t smaller = 0;
  std::size_t greater = 0;
};

// Event list for chain c: per-vertex brute-force visibility tests, shadows of
// every visible interior reflex vertex by brute minimum-parameter blocking,
// sorted by CCW angle from the chain-start direction (a wrapping chain gets
// its P0 event first).
EventList oracle_vis_chain(const PolygonHandle& h, const Chain& c);

// Full visibility polygon: brute-force p0, then oracle_vis_chain on the
// closed chain.
EventList oracle_vis(const PolygonHandle& h);

RankCount rank_oracle(const PolygonHandle& h, const Chain& c, std::size_t v);

}  // namespace viswork
