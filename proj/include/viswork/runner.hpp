#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "viswork/dnc.hpp"
#include "viswork/report.hpp"

namespace viswork {

// SCAN is the single-pass chain walk; the other two are the divide-and-conquer
// driver with deterministic / randomized partition-vertex selection.
enum class AlgoKind { SCAN, DNC_DET, DNC_RAND };

const char* algo_name(AlgoKind k);
AlgoKind algo_from(std::string_view name);  // ParseError for unknown names

struct RunConfig {
  AlgoKind algo = AlgoKind::SCAN;
  std::size_t s = 1;          // workspace exponent (dnc variants)
  std::uint64_t seed = 0;     // dnc-rand only
  bool validate = false;      // cross-check partition picks against the oracle
};

struct RunResult {
  EventList events;  // empty when keep_events is false
  RunReport report;
  PartitionStats stats;
};

// Reflex vertices of the polygon itself (interior angle > pi); unmetered.
std::size_t reflex_count(const PolygonHandle& h);

RunResult run_algo(const PolygonHandle& h, const RunConfig& cfg,
                   const std::string& family = "file",
                   bool keep_events = true);

std::optional<std::string> first_divergence(const EventList& expected,
                                            const EventList& got);

struct VerifyReport {
  std::size_t instances = 0;
  std::size_t runs = 0;
  std::size_t mismatches = 0;
};

// Every config of every instance is checked against the quadratic reference
// implementation. Mismatch details go to `log`. `inject_fault` swaps two
// output events of each run to prove the comparison has teeth.
VerifyReport verify_instances(
    const std::vector<std::pair<std::string, PolygonHandle>>& instances,
    const std::vector<RunConfig>& configs, bool inject_fault,
    std::ostream& log);

// One CSV row (see csv_header) per instance x config x repetition.
void bench_instances(
    const std::vector<std::pair<std::string, PolygonHandle>>& instances,
    const std::vector<RunConfig>& configs, std::size_t reps,
    std::ostream& out);

// VISWORK_THREADS override; defaults to 1 (the workloads here are exact
// arithmetic, not allocation-bound, so threading is opt-in).
std::size_t worker_count();

}  // namespace viswork
