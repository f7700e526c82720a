#pragma once

#include "viswork/events.hpp"
#include "viswork/polygon.hpp"
#include "viswork/visibility.hpp"

namespace viswork {

constexpr std::size_t WS_VIS_CHAIN = 6;

// Emits the visible part of chain c in CCW order: VERT for every visible
// input vertex, SHADOW paired with each visible reflex vertex's window. The
// chain's start point itself is never emitted (it belongs to the caller); a
// chain end that is a vertex is emitted, a constructed end point is not.
// With check_independent set, first verifies both chain endpoints are visible
// (ChainNotIndependent otherwise) — a debugging aid, not part of the metered
// contract.
void vis_chain(const PolygonHandle& h, const Chain& c, QueryContext& ctx,
               const EventSink& sink, bool check_independent = false);

// The full visibility polygon of the viewpoint: the origin event P0 (first
// boundary point hit in the +x direction) followed by the closed-chain
// emission. Read-only input, O(1) workspace words, output streamed to sink.
void vis_polygon(const PolygonHandle& h, QueryContext& ctx,
                 const EventSink& sink);

}  // namespace viswork
