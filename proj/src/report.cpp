#include "viswork/report.hpp"

#include <json.hpp>

namespace viswork {

std::string event_line(const VisEvent& e) {
  switch (e.kind) {
    case VisEvent::Kind::P0:
      return "P0 " + e.point.x.str() + " " + e.point.y.str();
    case VisEvent::Kind::VERT:
      return "V " + std::to_string(e.vertex);
    case VisEvent::Kind::SHADOW:
      return "S " + std::to_string(e.vertex) + " " + std::to_string(e.edge) +
             " " + e.point.x.str() + " " + e.point.y.str();
  }
  return {};
}

void EventDigest::add(const VisEvent& e) {
  update(event_line(e));
  update("\n");
}

std::string EventDigest::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  std::uint64_t h = hash;
  for (int i = 15; i >= 0; --i, h >>= 4) out[i] = digits[h & 0xf];
  return out;
}

std::string events_text(const EventList& events) {
  std::string out;
  for (const VisEvent& e : events) {
    out += event_line(e);
    out += '\n';
  }
  return out;
}

std::string csv_header() {
  return std::string(CSV_BANNER) +
         "\nfamily,n,r,r_out,algo,s,seed,access_count,ws_peak,depth_peak,"
         "wall_ns,retries,passes,digest";
}

std::string csv_row(const RunReport& r) {
  std::string out;
  out += r.family;
  out += ',' + std::to_string(r.n);
  out += ',' + std::to_string(r.r);
  out += ',' + std::to_string(r.r_out);
  out += ',' + r.algo;
  out += ',' + std::to_string(r.s);
  out += ',' + std::to_string(r.seed);
  out += ',' + std::to_string(r.access_count);
  out += ',' + std::to_string(r.ws_peak);
  out += ',' + std::to_string(r.depth_peak);
  out += ',' + std::to_string(r.wall_ns);
  out += ',' + std::to_string(r.retries);
  out += ',' + std::to_string(r.passes);
  out += ',' + r.digest;
  return out;
}

namespace {

nlohmann::json event_obj(const VisEvent& e) {
  nlohmann::json j;
  switch (e.kind) {
    case VisEvent::Kind::P0:
      j["kind"] = "P0";
      break;
    case VisEvent::Kind::VERT:
      j["kind"] = "V";
      j["vertex"] = e.vertex;
      break;
    case VisEvent::Kind::SHADOW:
      j["kind"] = "S";
      j["reflex"] = e.vertex;
      j["edge"] = e.edge;
      break;
  }
  j["x"] = e.point.x.str();
  j["y"] = e.point.y.str();
  return j;
}

}  // namespace

std::string report_json(const RunReport& r) {
  nlohmann::json j;
  j["family"] = r.family;
  j["n"] = r.n;
  j["r"] = r.r;
  j["r_out"] = r.r_out;
  j["algo"] = r.algo;
  j["s"] = r.s;
  j["seed"] = r.seed;
  j["access_count"] = r.access_count;
  j["ws_peak"] = r.ws_peak;
  j["depth_peak"] = r.depth_peak;
  j["wall_ns"] = r.wall_ns;
  j["retries"] = r.retries;
  j["passes"] = r.passes;
  j["digest"] = r.digest;
  return j.dump(2);
}

std::string events_json(const EventList& events) {
  nlohmann::json arr = nlohmann::json::array();
  for (const VisEvent& e : events) arr.push_back(event_obj(e));
  return arr.dump(2);
}

}  // namespace viswork
