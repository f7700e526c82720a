#include "viswork/testgen.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

#include "viswork/errors.hpp"
#include "viswork/rng.hpp"

namespace viswork {

namespace {

ExactScalar jitter16(SplitMix64& rng) {
  return ExactScalar(static_cast<long>(rng.below(65536)), 65536);
}

ExactScalar nudge16(SplitMix64& rng) {
  return ExactScalar(static_cast<long>(rng.below(256)), 65536);
}

// floor(v * 65536) / 65536: the nearest bounded-denominator grid point below
ExactScalar snap16(const ExactScalar& v) {
  return ExactScalar((v * ExactScalar(65536)).floor_long(), 65536);
}

PolygonHandle strict_load(const std::vector<Point>& vertices, const Point& q) {
  LoadOptions opts;
  opts.strict = true;
  return load(std::vector<Point>(vertices), Point(q), opts);
}

Generated with_handle(std::vector<Point> vertices, Point q, GenSpec spec) {
  Generated g;
  g.handle = strict_load(vertices, q);
  g.vertices = std::move(vertices);
  g.q = std::move(q);
  g.spec = std::move(spec);
  return g;
}

bool retryable(const VisworkError& e) {
  return e.code() == ErrorCode::DegenerateInput ||
         e.code() == ErrorCode::ViewpointOutside;
}

Point int_point(long x, long y) { return {ExactScalar(x), ExactScalar(y)}; }

}  // namespace

Generated gen_convex(std::size_t n, std::uint64_t seed) {
  if (n < 3) fail(ErrorCode::InvalidQuery, "convex generator needs n >= 3");
  GenSpec spec;
  spec.family = GenFamily::CONVEX;
  spec.size = n;
  spec.seed = seed;
  if (n == 4 && seed == 0) {
    std::vector<Point> square{int_point(0, 0), int_point(4, 0),
                              int_point(4, 4), int_point(0, 4)};
    return with_handle(std::move(square), int_point(2, 2), std::move(spec));
  }

  SplitMix64 rng(seed);
  const ExactScalar big(4096);
  for (int round = 0; round < 8; ++round) {
    // distinct tangent-half-angle fractions, ascending = CCW circle order
    std::set<std::pair<long, long>> used;
    std::vector<std::pair<long, long>> ts;
    while (ts.size() + 1 < n) {
      long b = 1 + static_cast<long>(rng.below(64));
      long a = static_cast<long>(rng.below(385)) - 192;
      long g = std::gcd(a < 0 ? -a : a, b);
      a /= g;
      b /= g;
      if (used.insert({a, b}).second) ts.emplace_back(a, b);
    }
    std::sort(ts.begin(), ts.end(), [](const auto& l, const auto& r) {
      return l.first * r.second < r.first * l.second;
    });
    std::vector<Point> verts;
    verts.reserve(n);
    for (const auto& [a, b] : ts) {
      ExactScalar den(a * a + b * b);
      verts.push_back({big * ExactScalar(b * b - a * a) / den,
                       big * ExactScalar(2 * a * b) / den});
    }
    verts.push_back({-big, ExactScalar(0)});  // the half-angle pole

    ExactScalar sx(0), sy(0);
    for (const Point& p : verts) {
      sx += p.x;
      sy += p.y;
    }
    ExactScalar inv_n(1, static_cast<long>(n));
    Point center{snap16(sx * inv_n), snap16(sy * inv_n)};
    for (int attempt = 0; attempt < 16; ++attempt) {
      Point q{center.x + nudge16(rng), center.y + nudge16(rng)};
      try {
        return with_handle(verts, std::move(q), spec);
      } catch (const VisworkError& e) {
        if (!retryable(e)) throw;
      }
    }
  }
  fail(ErrorCode::InternalError, "convex generation exhausted its retries");
}

Generated gen_comb(std::size_t m, std::uint64_t seed) {
  if (m < 1) fail(ErrorCode::InvalidQuery, "comb generator needs m >= 1");
  GenSpec spec;
  spec.family = GenFamily::COMB;
  spec.size = m;
  spec.seed = seed;

  const long w = 4 * static_cast<long>(m) + 2;
  const long top = 8, tip = 16;
  std::vector<Point> verts;
  verts.reserve(4 * m + 4);
  verts.push_back(int_point(0, 0));
  verts.push_back(int_point(w, 0));
  verts.push_back(int_point(w, top));
  for (std::size_t i = m; i-- > 0;) {  // chambers right to left along the top
    long xr = 4 * static_cast<long>(i) + 4;
    verts.push_back(int_point(xr, top));
    verts.push_back(int_point(xr, tip));
    verts.push_back(int_point(xr - 2, tip));
    verts.push_back(int_point(xr - 2, top));
  }
  verts.push_back(int_point(0, top));

  long gx = 4 * static_cast<long>(m / 2) + 1;  // middle gap of the top edge
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Point q{ExactScalar(gx) + jitter16(rng), ExactScalar(1) + jitter16(rng)};
    try {
      return with_handle(verts, std::move(q), spec);
    } catch (const VisworkError& e) {
      if (!retryable(e)) throw;
    }
  }
  fail(ErrorCode::InternalError, "comb generation exhausted its retries");
}

Generated gen_displaced_star(std::size_t n, const ExactScalar& big_r,
                             const ExactScalar& small_r,
                             const ExactScalar& offset, std::uint64_t seed) {
  if (n < 6 || n % 2 != 0)
    fail(ErrorCode::InvalidQuery, "star generator needs even n >= 6");
  if (!(ExactScalar(0) < small_r && small_r < big_r))
    fail(ErrorCode::InvalidQuery, "star generator needs R > r > 0");
  GenSpec spec;
  spec.family = GenFamily::DISPLACED_STAR;
  spec.size = n;
  spec.seed = seed;
  spec.big_r = big_r;
  spec.small_r = small_r;
  spec.offset = offset;

  // point of the unit-square boundary path at parameter t in [0,8), CCW from
  // (1,0); its angle increases strictly with t, so the polygon is simple
  auto dir = [](const ExactScalar& t) -> Point {
    ExactScalar one(1);
    if (t < ExactScalar(1)) return {one, t};
    if (t < ExactScalar(3)) return {ExactScalar(2) - t, one};
    if (t < ExactScalar(5)) return {-one, ExactScalar(4) - t};
    if (t < ExactScalar(7)) return {t - ExactScalar(6), -one};
    return {one, t - ExactScalar(8)};
  };
  std::vector<Point> verts;
  verts.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    ExactScalar t = ExactScalar(8 * static_cast<long>(k)) /
                    ExactScalar(static_cast<long>(n));
    Point d = dir(t);
    const ExactScalar& rho = (k % 2 == 0) ? big_r : small_r;
    verts.push_back({rho * d.x, rho * d.y});
  }

  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Point q{offset + jitter16(rng), jitter16(rng)};
    try {
      return with_handle(verts, std::move(q), spec);
    } catch (const VisworkError& e) {
      if (e.code() == ErrorCode::ViewpointOutside)
        fail(ErrorCode::OffsetOutside, "star viewpoint lands outside");
      if (e.code() != ErrorCode::DegenerateInput) throw;
    }
  }
  fail(ErrorCode::InternalError, "star generation exhausted its retries");
}

Generated gen_degenerate(DegenerateKind kind, std::uint64_t seed) {
  GenSpec spec;
  spec.family = GenFamily::DEGENERATE;
  spec.seed = seed;  // kept for interface uniformity; fixtures are fixed
  spec.kind = kind;
  Generated g;
  switch (kind) {
    case DegenerateKind::COLLINEAR_PAIR:
      // (1,1) and (0,0) share the ray from q through the lower-left corner
      g.vertices = {int_point(0, 0), int_point(4, 0), int_point(4, 4),
                    int_point(0, 4), int_point(1, 1)};
      g.q = int_point(2, 2);
      break;
    case DegenerateKind::VERTEX_ON_P0_RAY:
      // (4,2) sits exactly on the +x ray from q
      g.vertices = {int_point(0, 0), int_point(4, 0), int_point(4, 2),
                    int_point(6, 3),  int_point(3, 5), int_point(0, 5)};
      g.q = int_point(2, 2);
      break;
    case DegenerateKind::Q_ON_BOUNDARY:
      g.vertices = {int_point(0, 0), int_point(4, 0), int_point(4, 4),
                    int_point(0, 4)};
      g.q = int_point(4, 2);
      break;
  }
  spec.size = g.vertices.size();
  g.spec = std::move(spec);
  return g;  // no handle: loading these is the caller's failing experiment
}

Generated generate(const GenSpec& spec) {
  switch (spec.family) {
    case GenFamily::CONVEX:
      return gen_convex(spec.size, spec.seed);
    case GenFamily::COMB:
      return gen_comb(spec.size, spec.seed);
    case GenFamily::DISPLACED_STAR: {
      ExactScalar off = spec.offset
                            ? *spec.offset
                            : (spec.big_r + spec.small_r) / ExactScalar(2);
      for (int attempt = 0; attempt < 40; ++attempt) {
        try {
          Generated g = gen_displaced_star(spec.size, spec.big_r, spec.small_r,
                                           off, spec.seed);
          g.spec = spec;
          g.spec.offset = off;
          return g;
        } catch (const VisworkError& e) {
          if (e.code() != ErrorCode::OffsetOutside) throw;
          off = off / ExactScalar(2);
        }
      }
      fail(ErrorCode::OffsetOutside, "no workable star offset found");
    }
    case GenFamily::DEGENERATE:
      return gen_degenerate(spec.kind, spec.seed);
  }
  fail(ErrorCode::InternalError, "unknown generator family");
}

namespace {

const char* kind_name(DegenerateKind kind) {
  switch (kind) {
    case DegenerateKind::COLLINEAR_PAIR:
      return "collinear-pair";
    case DegenerateKind::VERTEX_ON_P0_RAY:
      return "vertex-on-p0-ray";
    case DegenerateKind::Q_ON_BOUNDARY:
      return "q-on-boundary";
  }
  return "?";
}

std::optional<DegenerateKind> kind_from(std::string_view name) {
  if (name == "collinear-pair") return DegenerateKind::COLLINEAR_PAIR;
  if (name == "vertex-on-p0-ray") return DegenerateKind::VERTEX_ON_P0_RAY;
  if (name == "q-on-boundary") return DegenerateKind::Q_ON_BOUNDARY;
  return std::nullopt;
}

}  // namespace

std::string GenSpec::family_name() const {
  switch (family) {
    case GenFamily::CONVEX:
      return "convex";
    case GenFamily::COMB:
      return "comb";
    case GenFamily::DISPLACED_STAR:
      return "star";
    case GenFamily::DEGENERATE:
      return "degenerate";
  }
  return "?";
}

std::string GenSpec::str() const {
  std::string out = family_name() + ":";
  switch (family) {
    case GenFamily::CONVEX:
      out += "n=" + std::to_string(size) + ",seed=" + std::to_string(seed);
      break;
    case GenFamily::COMB:
      out += "m=" + std::to_string(size) + ",seed=" + std::to_string(seed);
      break;
    case GenFamily::DISPLACED_STAR:
      out += "n=" + std::to_string(size) + ",seed=" + std::to_string(seed) +
             ",R=" + big_r.str() + ",r=" + small_r.str();
      if (offset) out += ",offset=" + offset->str();
      break;
    case GenFamily::DEGENERATE:
      out += std::string("kind=") + kind_name(kind);
      break;
  }
  return out;
}

GenSpec GenSpec::parse(std::string_view text) {
  GenSpec spec;
  auto colon = text.find(':');
  std::string fam(text.substr(0, colon));
  if (fam == "convex") {
    spec.family = GenFamily::CONVEX;
    spec.size = 4;
  } else if (fam == "comb") {
    spec.family = GenFamily::COMB;
    spec.size = 1;
  } else if (fam == "star" || fam == "displaced-star") {
    spec.family = GenFamily::DISPLACED_STAR;
    spec.size = 8;
  } else if (fam == "degenerate") {
    spec.family = GenFamily::DEGENERATE;
  } else {
    fail(ErrorCode::ParseError, "unknown generator family '" + fam + "'");
  }
  if (colon == std::string_view::npos) return spec;

  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{}
                                           : rest.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos)
      fail(ErrorCode::ParseError,
           "generator option '" + std::string(item) + "' is not key=value");
    std::string key(item.substr(0, eq));
    std::string value(item.substr(eq + 1));
    try {
      if (key == "n" || key == "m" || key == "teeth") {
        spec.size = std::stoul(value);
      } else if (key == "seed") {
        spec.seed = std::stoull(value);
      } else if (key == "R") {
        auto v = ExactScalar::parse(value);
        if (!v) throw std::invalid_argument(value);
        spec.big_r = *v;
      } else if (key == "r") {
        auto v = ExactScalar::parse(value);
        if (!v) throw std::invalid_argument(value);
        spec.small_r = *v;
      } else if (key == "offset") {
        auto v = ExactScalar::parse(value);
        if (!v) throw std::invalid_argument(value);
        spec.offset = *v;
      } else if (key == "kind") {
        auto k = kind_from(value);
        if (!k) throw std::invalid_argument(value);
        spec.kind = *k;
      } else {
        fail(ErrorCode::ParseError, "unknown generator option '" + key + "'");
      }
    } catch (const std::logic_error&) {
      fail(ErrorCode::ParseError,
           "bad value '" + value + "' for generator option '" + key + "'");
    }
  }
  return spec;
}

}  // namespace viswork
