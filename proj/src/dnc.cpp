#include "viswork/dnc.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <optional>

#include "viswork/errors.hpp"
#include "viswork/oracle.hpp"

namespace viswork {

namespace {

// Candidate predicate for partitioning: reflex-wrt-q and inside the chain's
// cone (the closed chain's cone is the full plane).
bool reflex_in_cone(const PolygonHandle& h, const Chain& c, std::size_t w,
                    const Point& w_pt, QueryContext& ctx) {
  const Point& q = h.viewpoint();
  if (!in_cone(q, c.start.point, c.end.point, w_pt)) return false;
  return classify_reflex(h, w, ctx) != ReflexClass::NOT_REFLEX;
}

// Records an accepted pick; in validation mode re-derives its rank with the
// independent brute-force oracle and re-checks the 2/3-median contract.
void finish_pick(const PolygonHandle& h, const Chain& c, std::size_t v,
                 std::size_t smaller, std::size_t k, PartitionStats& stats,
                 bool validate) {
  stats.ranks.emplace_back(smaller, k);
  if (!validate) return;
  RankCount rc = rank_oracle(h, c, v);
  if (rc.smaller != smaller || rc.smaller + rc.greater + 1 != k ||
      3 * rc.smaller > 2 * k || 3 * rc.greater > 2 * k) {
    ++stats.contract_failures;
    fail(ErrorCode::InternalError, "partition pick failed the rank-oracle check");
  }
}

}  // namespace

std::size_t count_reflex_in_cone(const PolygonHandle& h, const Chain& c,
                                 QueryContext& ctx) {
  WsScope scope(ctx, WS_COUNT_CONE);
  std::size_t k = 0;
  ChainWalk walk(h, c, ctx);
  while (auto seg = walk.next()) {
    if (!seg->b_vertex || seg->b_is_end) continue;
    if (reflex_in_cone(h, c, *seg->b_vertex, seg->b, ctx)) ++k;
  }
  return k;
}

std::size_t depth_cap(std::size_t s, std::size_t r) {
  // smallest h with (3/2)^h >= 2^s, i.e. 3^h >= 2^(h+s)
  mpz_class t3 = 1, t2;
  mpz_ui_pow_ui(t2.get_mpz_t(), 2, static_cast<unsigned long>(s));
  std::size_t h1 = 0;
  while (t3 < t2) {
    ++h1;
    t3 *= 3;
    t2 *= 2;
  }
  // smallest h with (3/2)^h >= max(r, 2)
  mpz_class u3 = 1, u2 = static_cast<unsigned long>(std::max<std::size_t>(r, 2));
  std::size_t h2 = 0;
  while (u3 < u2) {
    ++h2;
    u3 *= 3;
    u2 *= 2;
  }
  return std::min(h1, h2);
}

std::size_t find_partition_vertex_rand(const PolygonHandle& h, const Chain& c,
                                       SplitMix64& rng, QueryContext& ctx,
                                       PartitionStats& stats, bool validate) {
  WsScope scope(ctx, WS_PARTITION_RAND);
  std::size_t k = count_reflex_in_cone(h, c, ctx);
  if (k < 3) fail(ErrorCode::InvalidQuery, "partitioning needs k >= 3");
  ++stats.calls;
  const Point& q = h.viewpoint();
  const Point& ref = c.start.point;

  for (std::size_t attempt = 0; attempt < 64 * k; ++attempt) {
    std::size_t i = 1 + static_cast<std::size_t>(rng.below(k));
    std::size_t v = 0;
    Point v_pt;
    bool got = false;
    {
      std::size_t seen = 0;
      ChainWalk walk(h, c, ctx);
      while (auto seg = walk.next()) {
        if (!seg->b_vertex || seg->b_is_end) continue;
        if (!reflex_in_cone(h, c, *seg->b_vertex, seg->b, ctx)) continue;
        if (++seen == i) {
          v = *seg->b_vertex;
          v_pt = seg->b;
          got = true;
          break;
        }
      }
    }
    if (!got)
      fail(ErrorCode::InternalError, "reflex count changed between scans");

    std::size_t smaller = 0;
    {
      ChainWalk walk(h, c, ctx);
      while (auto seg = walk.next()) {
        if (!seg->b_vertex || seg->b_is_end || *seg->b_vertex == v) continue;
        if (!reflex_in_cone(h, c, *seg->b_vertex, seg->b, ctx)) continue;
        if (cmp_ccw_angle(q, ref, seg->b, v_pt) < 0) ++smaller;
      }
    }
    std::size_t greater = k - 1 - smaller;
    if (3 * smaller <= 2 * k && 3 * greater <= 2 * k) {
      finish_pick(h, c, v, smaller, k, stats, validate);
      return v;
    }
    ++stats.retries;
  }
  fail(ErrorCode::InternalError, "randomized partition exceeded its retry cap");
}

std::size_t find_partition_vertex_det(const PolygonHandle& h, const Chain& c,
                                      const DncConfig& cfg, QueryContext& ctx,
                                      PartitionStats& stats) {
  struct Pivot {
    std::size_t idx;
    Point pt;
    std::size_t rank;
  };
  std::size_t p = cfg.pivot_budget();
  WsScope scope(ctx, WS_PARTITION_DET_BASE + 3 * p);
  std::size_t k = count_reflex_in_cone(h, c, ctx);
  if (k < 3) fail(ErrorCode::InvalidQuery, "partitioning needs k >= 3");
  ++stats.calls;
  const Point& q = h.viewpoint();
  const Point& ref = c.start.point;
  const std::size_t target = (k - 1) / 2;

  std::optional<Point> lo, hi;  // exclusive angular interval holding the target
  std::vector<Pivot> pivots;
  pivots.reserve(p);
  for (std::size_t pass = 0; pass < 4 * k + 4; ++pass) {
    ++stats.passes;
    pivots.clear();
    std::size_t m_total = 0;
    {
      ChainWalk walk(h, c, ctx);
      while (auto seg = walk.next()) {
        if (!seg->b_vertex || seg->b_is_end) continue;
        if (!reflex_in_cone(h, c, *seg->b_vertex, seg->b, ctx)) continue;
        if (lo && cmp_ccw_angle(q, ref, seg->b, *lo) <= 0) continue;
        if (hi && cmp_ccw_angle(q, ref, seg->b, *hi) >= 0) continue;
        ++m_total;
        if (pivots.size() < p) pivots.push_back({*seg->b_vertex, seg->b, 0});
      }
    }
    if (m_total == 0) fail(ErrorCode::InternalError, "pivot interval emptied");

    // one batched scan ranks every cached pivot globally
    {
      ChainWalk walk(h, c, ctx);
      while (auto seg = walk.next()) {
        if (!seg->b_vertex || seg->b_is_end) continue;
        if (!reflex_in_cone(h, c, *seg->b_vertex, seg->b, ctx)) continue;
        for (Pivot& pv : pivots)
          if (*seg->b_vertex != pv.idx &&
              cmp_ccw_angle(q, ref, seg->b, pv.pt) < 0)
            ++pv.rank;
      }
    }

    const Pivot* below = nullptr;  // highest rank under the target
    const Pivot* above = nullptr;  // lowest rank over the target
    for (const Pivot& pv : pivots) {
      if (pv.rank == target) {
        finish_pick(h, c, pv.idx, pv.rank, k, stats, cfg.validate_contract);
        return pv.idx;
      }
      if (pv.rank < target) {
        if (!below || pv.rank > below->rank) below = &pv;
      } else {
        if (!above || pv.rank < above->rank) above = &pv;
      }
    }
    // every cached pivot lies outside the narrowed interval (global rank
    // order equals angular order), so each pass retires at least p candidates
    if (m_total <= p)
      fail(ErrorCode::InternalError, "target rank lost from its interval");
    if (below) lo = below->pt;
    if (above) hi = above->pt;
  }
  fail(ErrorCode::InternalError, "pivot narrowing exceeded its pass bound");
}

void vis_dnc(const PolygonHandle& h, const Chain& c, const DncConfig& cfg,
             QueryContext& ctx, const EventSink& sink, PartitionStats* stats,
             std::size_t d) {
  PartitionStats local;
  if (!stats) stats = &local;
  SplitMix64 rng(cfg.seed);

  struct Frame {
    Chain chain;
    std::size_t depth;
  };
  std::vector<Frame> stack;
  stack.push_back({c, d});
  ctx.ws_acquire(WS_DNC_FRAME);
  std::optional<std::size_t> cap;

  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    ctx.ws_release(WS_DNC_FRAME);
    ctx.set_depth(f.depth);
    WsScope scope(ctx, WS_DNC_PROCESS);

    std::size_t k = count_reflex_in_cone(h, f.chain, ctx);
    if (!cap) cap = depth_cap(cfg.s, k);  // root call: k is the chain's r
    if (f.depth > *cap)
      fail(ErrorCode::InternalError, "recursion depth exceeded its cap");
    if (k <= 2 || f.depth >= *cap) {
      vis_chain(h, f.chain, ctx, sink);
      continue;
    }

    std::size_t v =
        cfg.variant == DncConfig::Variant::RANDOMIZED
            ? find_partition_vertex_rand(h, f.chain, rng, ctx, *stats,
                                         cfg.validate_contract)
            : find_partition_vertex_det(h, f.chain, cfg, ctx, *stats);
    Point vp = h.vertex(v, ctx);
    BoundaryPoint x = ray_shoot(
        h, f.chain, BoundaryPoint::at_vertex(v, std::move(vp)), ctx);

    // left subchain processed first: push right below it
    stack.push_back({Chain{x, f.chain.end, false}, f.depth + 1});
    ctx.ws_acquire(WS_DNC_FRAME);
    stack.push_back({Chain{f.chain.start, std::move(x), false}, f.depth + 1});
    ctx.ws_acquire(WS_DNC_FRAME);
  }
  ctx.set_depth(0);
}

void vis_polygon_dnc(const PolygonHandle& h, const DncConfig& cfg,
                     QueryContext& ctx, const EventSink& sink,
                     PartitionStats* stats) {
  BoundaryPoint p0 = find_p0(h, ctx);
  sink(VisEvent::p0(p0.point));
  vis_dnc(h, closed_chain(p0), cfg, ctx, sink, stats);
}

}  // namespace viswork
