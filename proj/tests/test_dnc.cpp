#include <doctest.h>

#include <string>
#include <vector>

#include "helpers.hpp"
#include "viswork/dnc.hpp"
#include "viswork/oracle.hpp"
#include "viswork/rng.hpp"
#include "viswork/testgen.hpp"
#include "viswork/visibility.hpp"

using namespace viswork;
using namespace viswork::testing;

namespace {

bool rank_contract_holds(const RankCount& rc, std::size_t k) {
  return 3 * rc.smaller <= 2 * k && 3 * rc.greater <= 2 * k;
}

}  // namespace

TEST_SUITE("dnc") {

TEST_CASE("pivot budget saturates at 64 slots") {
  DncConfig cfg;
  cfg.s = 1;
  CHECK(cfg.pivot_budget() == 2);
  cfg.s = 5;
  CHECK(cfg.pivot_budget() == 32);
  cfg.s = 6;
  CHECK(cfg.pivot_budget() == 64);
  cfg.s = 40;
  CHECK(cfg.pivot_budget() == 64);
}

TEST_CASE("depth cap: workspace regime vs reflex-count regime") {
  // 3^h >= 2^(h+s) needs h=2 at s=1, h=4 at s=2, h=6 at s=3
  CHECK(depth_cap(1, 1u << 20) == 2);
  CHECK(depth_cap(2, 1u << 20) == 4);
  CHECK(depth_cap(3, 1000) == 6);
  // 3^h >= max(r,2)*2^h needs h=6 at r=9, h=18 at r=1000
  CHECK(depth_cap(50, 9) == 6);
  CHECK(depth_cap(50, 1000) == 18);
  CHECK(depth_cap(50, 0) == 2);  // r clamps up to 2
  CHECK(depth_cap(3, 9) == 6);   // both regimes agree here
}

TEST_CASE("reflex-in-cone counting") {
  PolygonHandle l6 = make_l6();
  QueryContext ctx;
  BoundaryPoint p0 = find_p0(l6, ctx);
  CHECK(count_reflex_in_cone(l6, closed_chain(p0), ctx) == 1);

  // subchain whose cone contains the reflex corner
  Chain sub{BoundaryPoint::at_vertex(2, l6.pt(2)),
            BoundaryPoint::at_vertex(5, l6.pt(5)), false};
  CHECK(count_reflex_in_cone(l6, sub, ctx) == 1);

  // subchain with no interior reflex vertex
  Chain flat{BoundaryPoint::at_vertex(5, l6.pt(5)),
             BoundaryPoint::at_vertex(1, l6.pt(1)), false};
  CHECK(count_reflex_in_cone(l6, flat, ctx) == 0);

  Generated comb = generate(GenSpec::parse("comb:m=5,seed=0"));
  QueryContext ctx2;
  BoundaryPoint c0 = find_p0(*comb.handle, ctx2);
  CHECK(count_reflex_in_cone(*comb.handle, closed_chain(c0), ctx2) == 5);
  CHECK(ctx2.ws_current == 0);
}

TEST_CASE("partitioning requires at least three candidates") {
  PolygonHandle l6 = make_l6();
  QueryContext ctx;
  Chain c = closed_chain(find_p0(l6, ctx));
  SplitMix64 rng(0);
  PartitionStats stats;
  CHECK(error_code_of([&] {
          find_partition_vertex_rand(l6, c, rng, ctx, stats);
        }) == ErrorCode::InvalidQuery);
  DncConfig cfg;
  CHECK(error_code_of([&] {
          find_partition_vertex_det(l6, c, cfg, ctx, stats);
        }) == ErrorCode::InvalidQuery);
}

TEST_CASE("deterministic partition meets the rank contract at every budget") {
  Generated comb = generate(GenSpec::parse("comb:m=9,seed=4"));
  const PolygonHandle& h = *comb.handle;
  QueryContext ctx;
  Chain c = closed_chain(find_p0(h, ctx));
  REQUIRE(count_reflex_in_cone(h, c, ctx) == 9);

  for (std::size_t s : {std::size_t{1}, std::size_t{2}, std::size_t{6}}) {
    DncConfig cfg;
    cfg.s = s;
    PartitionStats stats;
    std::size_t v = find_partition_vertex_det(h, c, cfg, ctx, stats);
    RankCount rc = rank_oracle(h, c, v);
    CHECK(rank_contract_holds(rc, 9));
    CHECK(stats.calls == 1);
    CHECK(stats.passes >= 1);
    if (s == 6) {
      // budget >= k: one pass, exact median rank (k-1)/2 = 4
      CHECK(stats.passes == 1);
      CHECK(rc.smaller == 4);
    }
  }
  CHECK(ctx.ws_current == 0);
}

TEST_CASE("randomized partition meets the rank contract") {
  Generated comb = generate(GenSpec::parse("comb:m=9,seed=4"));
  const PolygonHandle& h = *comb.handle;
  QueryContext ctx;
  Chain c = closed_chain(find_p0(h, ctx));

  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    SplitMix64 rng(seed);
    PartitionStats stats;
    std::size_t v = find_partition_vertex_rand(h, c, rng, ctx, stats, true);
    CHECK(rank_contract_holds(rank_oracle(h, c, v), 9));
    CHECK(stats.calls == 1);
    CHECK(stats.contract_failures == 0);
  }
  CHECK(ctx.ws_current == 0);
}

TEST_CASE("divide-and-conquer emits the same stream as the single scan") {
  std::vector<std::string> specs = {"comb:m=4,seed=1", "star:n=12,seed=3",
                                    "comb:m=7,seed=2", "star:n=16,seed=5"};
  for (const std::string& spec : specs) {
    CAPTURE(spec);
    Generated g = generate(GenSpec::parse(spec));
    const PolygonHandle& h = *g.handle;
    EventList want = scan_events(h);

    for (std::size_t s : {std::size_t{1}, std::size_t{2}, std::size_t{3}}) {
      DncConfig cfg;
      cfg.s = s;
      cfg.validate_contract = true;
      QueryContext ctx;
      EventList got;
      vis_polygon_dnc(h, cfg, ctx, collect_into(got));
      CAPTURE(s);
      CHECK(got == want);
      CHECK(ctx.ws_current == 0);
      CHECK(ctx.depth_current == 0);
    }

    for (std::uint64_t seed : {0ull, 1ull, 2ull}) {
      DncConfig cfg;
      cfg.variant = DncConfig::Variant::RANDOMIZED;
      cfg.seed = seed;
      cfg.validate_contract = true;
      QueryContext ctx;
      EventList got;
      PartitionStats stats;
      vis_polygon_dnc(h, cfg, ctx, collect_into(got), &stats);
      CAPTURE(seed);
      CHECK(got == want);
      CHECK(stats.contract_failures == 0);
    }
  }
}

TEST_CASE("recursion depth respects the cap and is metered") {
  Generated comb = generate(GenSpec::parse("comb:m=16,seed=0"));
  const PolygonHandle& h = *comb.handle;
  for (std::size_t s : {std::size_t{1}, std::size_t{4}}) {
    DncConfig cfg;
    cfg.s = s;
    QueryContext ctx;
    EventList got;
    vis_polygon_dnc(h, cfg, ctx, collect_into(got));
    CHECK(ctx.depth_peak >= 1);
    CHECK(ctx.depth_peak <= depth_cap(s, 16));
  }

  // the same instance solved by the scan never touches the depth meter
  QueryContext flat;
  EventList drop;
  vis_polygon(h, flat, collect_into(drop));
  CHECK(flat.depth_peak == 0);
}

TEST_CASE("workspace depends on s, not on the input size") {
  // once the recursion saturates its depth cap the whole workspace profile
  // (frame stack, pivot slots, leaf scans) is input-size independent
  Generated small = generate(GenSpec::parse("comb:m=64,seed=0"));
  Generated large = generate(GenSpec::parse("comb:m=256,seed=0"));
  for (std::size_t s : {std::size_t{1}, std::size_t{3}}) {
    DncConfig cfg;
    cfg.s = s;
    QueryContext a, b;
    EventList drop;
    vis_polygon_dnc(*small.handle, cfg, a, collect_into(drop));
    drop.clear();
    vis_polygon_dnc(*large.handle, cfg, b, collect_into(drop));
    CAPTURE(s);
    CHECK(a.ws_peak == b.ws_peak);
    CHECK(b.access_count > a.access_count);
  }
}

}  // TEST_SUITE
