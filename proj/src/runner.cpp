#include "viswork/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>

#include "viswork/algo.hpp"
#include "viswork/errors.hpp"
#include "viswork/oracle.hpp"

namespace viswork {

const char* algo_name(AlgoKind k) {
  switch (k) {
    case AlgoKind::SCAN:
      return "scan";
    case AlgoKind::DNC_DET:
      return "dnc-det";
    case AlgoKind::DNC_RAND:
      return "dnc-rand";
  }
  return "?";
}

AlgoKind algo_from(std::string_view name) {
  if (name == "scan") return AlgoKind::SCAN;
  if (name == "dnc-det") return AlgoKind::DNC_DET;
  if (name == "dnc-rand") return AlgoKind::DNC_RAND;
  fail(ErrorCode::ParseError, "unknown algorithm '" + std::string(name) +
                                  "' (scan, dnc-det, dnc-rand)");
}

std::size_t reflex_count(const PolygonHandle& h) {
  std::size_t count = 0;
  const std::size_t n = h.n();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& prev = h.pt((i + n - 1) % n);
    const Point& next = h.pt((i + 1) % n);
    if (orient(prev, h.pt(i), next) == Orientation::CW) ++count;
  }
  return count;
}

RunResult run_algo(const PolygonHandle& h, const RunConfig& cfg,
                   const std::string& family, bool keep_events) {
  RunResult res;
  res.report.family = family;
  res.report.n = h.n();
  res.report.r = reflex_count(h);
  res.report.algo = algo_name(cfg.algo);
  res.report.s = cfg.algo == AlgoKind::SCAN ? 0 : cfg.s;
  res.report.seed = cfg.algo == AlgoKind::DNC_RAND ? cfg.seed : 0;

  EventDigest digest;
  std::size_t r_out = 0;
  EventSink sink = [&](const VisEvent& e) {
    digest.add(e);
    if (e.kind == VisEvent::Kind::SHADOW) ++r_out;
    if (keep_events) res.events.push_back(e);
  };

  QueryContext ctx;
  auto t0 = std::chrono::steady_clock::now();
  switch (cfg.algo) {
    case AlgoKind::SCAN:
      vis_polygon(h, ctx, sink);
      break;
    case AlgoKind::DNC_DET:
    case AlgoKind::DNC_RAND: {
      DncConfig dc;
      dc.s = cfg.s;
      dc.variant = cfg.algo == AlgoKind::DNC_DET
                       ? DncConfig::Variant::DETERMINISTIC
                       : DncConfig::Variant::RANDOMIZED;
      dc.seed = cfg.seed;
      dc.validate_contract = cfg.validate;
      vis_polygon_dnc(h, dc, ctx, sink, &res.stats);
      break;
    }
  }
  auto t1 = std::chrono::steady_clock::now();

  res.report.r_out = r_out;
  res.report.access_count = ctx.access_count;
  res.report.ws_peak = ctx.ws_peak;
  res.report.depth_peak = ctx.depth_peak;
  res.report.wall_ns = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
  res.report.retries = res.stats.retries;
  res.report.passes = res.stats.passes;
  res.report.digest = digest.hex();
  return res;
}

std::optional<std::string> first_divergence(const EventList& expected,
                                            const EventList& got) {
  std::size_t limit = std::min(expected.size(), got.size());
  for (std::size_t i = 0; i < limit; ++i) {
    if (expected[i] != got[i]) {
      return "event " + std::to_string(i) + ": expected '" +
             event_line(expected[i]) + "', got '" + event_line(got[i]) + "'";
    }
  }
  if (expected.size() != got.size()) {
    return "event count: expected " + std::to_string(expected.size()) +
           ", got " + std::to_string(got.size());
  }
  return std::nullopt;
}

std::size_t worker_count() {
  const char* env = std::getenv("VISWORK_THREADS");
  if (!env) return 1;
  long v = std::strtol(env, nullptr, 10);
  return v > 1 ? static_cast<std::size_t>(v) : 1;
}

namespace {

// Swap the second and third events so a run that would match no longer does;
// used to demonstrate that verification detects ordering faults.
void apply_order_fault(EventList& events) {
  if (events.size() >= 3) std::swap(events[1], events[2]);
}

std::string verify_one(const std::pair<std::string, PolygonHandle>& inst,
                       const std::vector<RunConfig>& configs,
                       bool inject_fault, std::size_t& runs,
                       std::size_t& mismatches) {
  std::string log;
  EventList expected = oracle_vis(inst.second);
  for (const RunConfig& cfg : configs) {
    ++runs;
    RunResult res = run_algo(inst.second, cfg, inst.first);
    if (inject_fault) apply_order_fault(res.events);
    auto diff = first_divergence(expected, res.events);
    if (diff) {
      ++mismatches;
      log += "MISMATCH " + inst.first + " algo=" + res.report.algo +
             " s=" + std::to_string(cfg.s) +
             " seed=" + std::to_string(cfg.seed) + ": " + *diff + "\n";
    }
  }
  if (log.empty())
    log = "ok " + inst.first + " (" + std::to_string(configs.size()) +
          " runs)\n";
  return log;
}

}  // namespace

VerifyReport verify_instances(
    const std::vector<std::pair<std::string, PolygonHandle>>& instances,
    const std::vector<RunConfig>& configs, bool inject_fault,
    std::ostream& log) {
  VerifyReport rep;
  rep.instances = instances.size();

  std::size_t workers = std::min(worker_count(), instances.size());
  if (workers <= 1) {
    for (const auto& inst : instances)
      log << verify_one(inst, configs, inject_fault, rep.runs, rep.mismatches);
    return rep;
  }

  std::vector<std::string> lines(instances.size());
  std::vector<std::size_t> run_counts(workers, 0), miss_counts(workers, 0);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = next.fetch_add(1); i < instances.size();
           i = next.fetch_add(1)) {
        lines[i] = verify_one(instances[i], configs, inject_fault,
                              run_counts[w], miss_counts[w]);
      }
    });
  }
  for (auto& t : pool) t.join();
  for (std::size_t w = 0; w < workers; ++w) {
    rep.runs += run_counts[w];
    rep.mismatches += miss_counts[w];
  }
  for (const std::string& line : lines) log << line;
  return rep;
}

void bench_instances(
    const std::vector<std::pair<std::string, PolygonHandle>>& instances,
    const std::vector<RunConfig>& configs, std::size_t reps,
    std::ostream& out) {
  out << csv_header() << "\n";
  for (const auto& inst : instances) {
    for (const RunConfig& cfg : configs) {
      for (std::size_t rep = 0; rep < reps; ++rep) {
        RunResult res = run_algo(inst.second, cfg, inst.first, false);
        out << csv_row(res.report) << "\n";
      }
    }
  }
}

}  // namespace viswork
