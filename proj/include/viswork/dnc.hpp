#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "viswork/algo.hpp"
#include "viswork/events.hpp"
#include "viswork/polygon.hpp"
#include "viswork/rng.hpp"

namespace viswork {

// Configuration of the divide-and-conquer driver. `s` is the workspace
// parameter: the deterministic partition may hold up to p = min(2^s, 64)
// pivot candidates, and the recursion depth is capped at depth_cap(s, k_root).
struct DncConfig {
  enum class Variant { DETERMINISTIC, RANDOMIZED };

  std::size_t s = 1;
  Variant variant = Variant::DETERMINISTIC;
  std::uint64_t seed = 0;            // randomized variant only
  bool validate_contract = false;    // cross-check every pick against the rank oracle

  std::size_t pivot_budget() const {
    return s >= 6 ? 64 : (std::size_t{1} << s);
  }
};

// Telemetry for the partition-vertex selection.
struct PartitionStats {
  std::size_t calls = 0;
  std::size_t retries = 0;            // randomized: rejected draws
  std::size_t passes = 0;             // deterministic: narrowing passes
  std::size_t contract_failures = 0;  // validate_contract mismatches (fatal)
  std::vector<std::pair<std::size_t, std::size_t>> ranks;  // (smaller, k)
};

constexpr std::size_t WS_COUNT_CONE = 8;
constexpr std::size_t WS_PARTITION_RAND = 10;
constexpr std::size_t WS_PARTITION_DET_BASE = 12;  // + 3 words per pivot slot
constexpr std::size_t WS_DNC_PROCESS = 8;
constexpr std::size_t WS_DNC_FRAME = 6;

// Acceptance bound on ws_peak(s) - ws_peak(s-1): one extra s step adds at
// most the pivot-slot growth (3 * d(2^s), capped, worst 96 at s=6) plus two
// extra recursion frames (depth cap grows by at most 2 per s step).
constexpr std::size_t WS_LINEAR_STEP_BOUND = 128;

// Number of vertices of c that are reflex-wrt-q and lie inside the cone
// spanned by the directions q->c.start and q->c.end (full plane for the
// closed chain). One scan, O(1) words.
std::size_t count_reflex_in_cone(const PolygonHandle& h, const Chain& c,
                                 QueryContext& ctx);

// Smallest depth h at which a branch-and-cut recursion that discards a third
// of the reflex vertices per level must bottom out: the minimum of the two
// regimes ceil(s * log 2 / log(3/2)) and ceil(log max(r,2) / log(3/2)),
// evaluated with exact integer comparisons (no floating point).
std::size_t depth_cap(std::size_t s, std::size_t r);

// Picks a reflex-in-cone vertex of c whose angular rank among all k of them
// satisfies the 2/3-median contract: #smaller <= 2k/3 and #greater <= 2k/3.
// Requires k >= 3.
//
// Randomized: draw a uniform index, walk to it, rank it in one more scan,
// accept or redraw (expected 3 draws; hard cap 64k draws -> InternalError).
std::size_t find_partition_vertex_rand(const PolygonHandle& h, const Chain& c,
                                       SplitMix64& rng, QueryContext& ctx,
                                       PartitionStats& stats,
                                       bool validate = false);

// Deterministic: multi-pass narrowing of an angular interval known to contain
// the target rank (k-1)/2. Per pass: cache the first p in-interval candidates
// (p = cfg.pivot_budget()), count all their global ranks in one batched scan,
// return on an exact rank hit, otherwise shrink the interval to the cached
// neighbors bracketing the target. O(s) words; at most 4k passes.
std::size_t find_partition_vertex_det(const PolygonHandle& h, const Chain& c,
                                      const DncConfig& cfg, QueryContext& ctx,
                                      PartitionStats& stats);

// Divide-and-conquer emission over chain c: if the reflex-in-cone count k is
// at most 2 or the depth cap is reached, delegate to vis_chain; otherwise
// split at x = ray_shoot(partition vertex) into (c.start, x) and (x, c.end),
// left first, both one level deeper. Every split point is emitted exactly
// once, by whichever side reports it as a window endpoint. The recursion is
// an explicit stack charged to the workspace meter (WS_DNC_FRAME words per
// live entry); the event stream is identical to vis_chain's for every
// configuration.
void vis_dnc(const PolygonHandle& h, const Chain& c, const DncConfig& cfg,
             QueryContext& ctx, const EventSink& sink,
             PartitionStats* stats = nullptr, std::size_t d = 1);

// Full-polygon driver: find_p0, emit P0, vis_dnc on the closed chain.
void vis_polygon_dnc(const PolygonHandle& h, const DncConfig& cfg,
                     QueryContext& ctx, const EventSink& sink,
                     PartitionStats* stats = nullptr);

}  // namespace viswork
