#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "viswork/events.hpp"

namespace viswork {

// Streaming FNV-1a 64 over the canonical event text (one line per event,
// including the trailing '\n'). Two runs agree iff their digests agree.
struct EventDigest {
  std::uint64_t hash = 14695981039346656037ull;

  void update(std::string_view bytes) {
    for (unsigned char c : bytes) {
      hash ^= c;
      hash *= 1099511628211ull;
    }
  }
  void add(const VisEvent& e);
  std::string hex() const;
};

// Canonical one-line text forms:
//   P0 <x> <y>
//   V <vertex>
//   S <reflex> <edge> <x> <y>
// Coordinates are exact ("p" or "p/q").
std::string event_line(const VisEvent& e);
std::string events_text(const EventList& events);

// Metrics of one visibility computation.
struct RunReport {
  std::string family;  // instance family or "file"
  std::size_t n = 0;
  std::size_t r = 0;      // reflex vertices of the input polygon
  std::size_t r_out = 0;  // windows in the output
  std::string algo;
  std::size_t s = 0;
  std::uint64_t seed = 0;
  std::uint64_t access_count = 0;
  std::size_t ws_peak = 0;
  std::size_t depth_peak = 0;
  std::uint64_t wall_ns = 0;
  std::size_t retries = 0;
  std::size_t passes = 0;
  std::string digest;
};

inline constexpr const char* CSV_BANNER = "# viswork-bench v1";

std::string csv_header();
std::string csv_row(const RunReport& r);

// JSON object with every report field; exact scalars appear as strings.
std::string report_json(const RunReport& r);
std::string events_json(const EventList& events);

}  // namespace viswork
