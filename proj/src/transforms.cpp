#include "polycomp/transforms.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <string>

#include "polycomp/error.hpp"

namespace polycomp {
namespace {

constexpr std::int64_t pow10(int p) {
  std::int64_t r = 1;
  for (int i = 0; i < p; ++i) r *= 10;
  return r;
}

void check_precision(int precision) {
  if (precision != 2 && precision != 3) {
    throw Error(Errc::InvalidArgument,
                "precision must be 2 or 3, got " + std::to_string(precision));
  }
}

// Rounds |v| * 10^precision half away from zero using the shortest decimal
// form of v, so that a literal such as 31.515 rounds as written.
std::int64_t round_scaled_magnitude(double v, int precision) {
  if (!std::isfinite(v)) {
    throw Error(Errc::InvalidArgument, "non-finite coordinate");
  }
  char buf[400];
  auto res = std::to_chars(buf, buf + sizeof buf, std::fabs(v), std::chars_format::fixed);
  std::string_view text(buf, static_cast<std::size_t>(res.ptr - buf));
  auto dot = text.find('.');
  std::string_view int_part = text.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);

  if (int_part.size() > 12) {
    throw Error(Errc::InvalidArgument, "coordinate magnitude too large");
  }
  std::int64_t out = 0;
  for (char c : int_part) out = out * 10 + (c - '0');
  for (int i = 0; i < precision; ++i) {
    out = out * 10 + (static_cast<std::size_t>(i) < frac.size() ? frac[i] - '0' : 0);
  }
  if (frac.size() > static_cast<std::size_t>(precision) && frac[precision] >= '5') ++out;
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw Error(Errc::InvalidArgument, "coordinate difference overflows");
  }
  return r;
}

}  // namespace

std::string_view transform_name(Transform t) {
  return t == Transform::DeltaMin ? "delta-min" : "delta";
}

Transform parse_transform(std::string_view name) {
  if (name == "delta-min" || name == "deltamin" || name == "dmin") return Transform::DeltaMin;
  if (name == "delta" || name == "delta-consec" || name == "consec") return Transform::DeltaConsec;
  throw Error(Errc::InvalidArgument, "unknown transform '" + std::string(name) + "'");
}

std::size_t DeltaSeq::point_count() const {
  return deltas.size() + (kind == Transform::DeltaMin ? 1 : 2);
}

std::vector<std::int64_t> DeltaSeq::values() const {
  std::vector<std::int64_t> out;
  out.reserve(2 + 2 * deltas.size());
  out.push_back(head_x);
  out.push_back(head_y);
  for (const auto& p : deltas) {
    out.push_back(p.dx);
    out.push_back(p.dy);
  }
  return out;
}

std::int64_t DeltaSeq::max_delta() const {
  std::int64_t m = 0;
  for (const auto& p : deltas) m = std::max({m, p.dx, p.dy});
  return m;
}

DeltaSeq delta_seq_from_values(Transform kind, const std::vector<std::int64_t>& values,
                               Origin origin, int precision) {
  if (values.size() < 2 || values.size() % 2 != 0) {
    throw Error(Errc::InvalidDeltaSeq,
                "expected an even number of values, got " + std::to_string(values.size()));
  }
  DeltaSeq ds;
  ds.kind = kind;
  ds.head_x = values[0];
  ds.head_y = values[1];
  ds.origin = origin;
  ds.precision = precision;
  ds.deltas.reserve(values.size() / 2 - 1);
  for (std::size_t i = 2; i < values.size(); i += 2) {
    ds.deltas.push_back({values[i], values[i + 1]});
  }
  return ds;
}

void validate(const DeltaSeq& ds) {
  if (ds.head_x < 0 || ds.head_y < 0) {
    throw Error(Errc::InvalidDeltaSeq, "negative head value");
  }
  for (const auto& p : ds.deltas) {
    if (p.dx < 0 || p.dy < 0) throw Error(Errc::InvalidDeltaSeq, "negative delta");
  }
}

void validate(const GeoPolygon& poly) {
  if (poly.points.size() < 4) {
    throw Error(Errc::TooFewPoints, "polygon needs at least 4 points including the closing point");
  }
  if (poly.points.front() != poly.points.back()) {
    throw Error(Errc::OpenRing, "first point differs from last point");
  }
  for (const auto& p : poly.points) {
    if (!(p.lat > 0.0 && p.lat < 90.0 && p.lon > -180.0 && p.lon < 0.0)) {
      throw Error(Errc::InvalidArgument, "coordinate outside 0<lat<90, -180<lon<0");
    }
  }
}

void validate(const IntPolygon& poly) {
  check_precision(poly.precision);
  if (poly.points.size() < 4) {
    throw Error(Errc::TooFewPoints, "polygon needs at least 4 points including the closing point");
  }
  if (poly.points.front() != poly.points.back()) {
    throw Error(Errc::OpenRing, "first point differs from last point");
  }
  for (const auto& p : poly.points) {
    if (p.x <= 0 || p.y <= 0) {
      throw Error(Errc::NonPositiveCoordinate, "quantized coordinates must be positive");
    }
  }
}

IntPolygon quantize(const GeoPolygon& poly, int precision) {
  check_precision(precision);
  if (poly.points.size() < 4) {
    throw Error(Errc::TooFewPoints, "polygon needs at least 4 points including the closing point");
  }
  if (poly.points.front() != poly.points.back()) {
    throw Error(Errc::OpenRing, "first point differs from last point");
  }
  IntPolygon out;
  out.precision = precision;
  out.points.reserve(poly.points.size());
  for (const auto& p : poly.points) {
    std::int64_t x = round_scaled_magnitude(p.lat, precision);
    std::int64_t y = round_scaled_magnitude(p.lon, precision);
    if (p.lat < 0) x = -x;
    if (p.lon > 0) y = -y;
    if (x <= 0 || y <= 0) {
      throw Error(Errc::NonPositiveCoordinate,
                  "quantized point (" + std::to_string(x) + "," + std::to_string(y) +
                      ") is not strictly positive");
    }
    out.points.push_back({x, y});
  }
  return out;
}

GeoPolygon dequantize(const IntPolygon& poly) {
  const double scale = static_cast<double>(pow10(poly.precision));
  GeoPolygon out;
  out.points.reserve(poly.points.size());
  for (const auto& p : poly.points) {
    out.points.push_back({static_cast<double>(p.x) / scale, -static_cast<double>(p.y) / scale});
  }
  return out;
}

DeltaSeq to_delta_min(const IntPolygon& poly, Origin origin) {
  validate(poly);
  std::int64_t xmin = std::numeric_limits<std::int64_t>::max();
  std::int64_t ymin = xmin;
  for (const auto& p : poly.points) {
    xmin = std::min(xmin, p.x);
    ymin = std::min(ymin, p.y);
  }
  if (xmin < origin.x || ymin < origin.y) {
    throw Error(Errc::OriginTooLarge, "minimum corner (" + std::to_string(xmin) + "," +
                                          std::to_string(ymin) + ") lies below the origin");
  }
  DeltaSeq ds;
  ds.kind = Transform::DeltaMin;
  ds.origin = origin;
  ds.precision = poly.precision;
  ds.head_x = xmin - origin.x;
  ds.head_y = ymin - origin.y;
  ds.deltas.reserve(poly.points.size() - 1);
  for (std::size_t i = 0; i + 1 < poly.points.size(); ++i) {
    ds.deltas.push_back({poly.points[i].x - xmin, poly.points[i].y - ymin});
  }
  return ds;
}

IntPolygon from_delta_min(const DeltaSeq& ds) {
  if (ds.kind != Transform::DeltaMin) {
    throw Error(Errc::InvalidDeltaSeq, "expected a delta-min sequence");
  }
  validate(ds);
  if (ds.deltas.size() < 3) {
    throw Error(Errc::TooFewPoints, "delta-min sequence needs at least 3 pairs");
  }
  bool zero_x = false, zero_y = false;
  for (const auto& p : ds.deltas) {
    zero_x = zero_x || p.dx == 0;
    zero_y = zero_y || p.dy == 0;
  }
  if (!zero_x || !zero_y) {
    throw Error(Errc::InvalidDeltaSeq, "delta-min sequence has no zero offset on an axis");
  }
  IntPolygon out;
  out.precision = ds.precision;
  const std::int64_t xmin = ds.origin.x + ds.head_x;
  const std::int64_t ymin = ds.origin.y + ds.head_y;
  out.points.reserve(ds.deltas.size() + 1);
  for (const auto& p : ds.deltas) out.points.push_back({xmin + p.dx, ymin + p.dy});
  out.points.push_back(out.points.front());
  return out;
}

DeltaSeq to_delta_consec(const IntPolygon& poly, Origin origin) {
  validate(poly);
  const IntPoint first = poly.points.front();
  if (first.x < origin.x || first.y < origin.y) {
    throw Error(Errc::OriginTooLarge, "first point (" + std::to_string(first.x) + "," +
                                          std::to_string(first.y) + ") lies below the origin");
  }
  DeltaSeq ds;
  ds.kind = Transform::DeltaConsec;
  ds.origin = origin;
  ds.precision = poly.precision;
  ds.head_x = first.x - origin.x;
  ds.head_y = first.y - origin.y;
  const std::size_t n = poly.points.size();
  ds.deltas.reserve(n - 2);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const auto ex = checked_sub(poly.points[i].x, poly.points[i - 1].x);
    const auto ey = checked_sub(poly.points[i].y, poly.points[i - 1].y);
    ds.deltas.push_back({static_cast<std::int64_t>(fold(ex)), static_cast<std::int64_t>(fold(ey))});
  }
  return ds;
}

IntPolygon from_delta_consec(const DeltaSeq& ds) {
  if (ds.kind != Transform::DeltaConsec) {
    throw Error(Errc::InvalidDeltaSeq, "expected a consecutive-delta sequence");
  }
  validate(ds);
  if (ds.deltas.size() < 2) {
    throw Error(Errc::TooFewPoints, "consecutive-delta sequence needs at least 2 pairs");
  }
  IntPolygon out;
  out.precision = ds.precision;
  out.points.reserve(ds.deltas.size() + 2);
  IntPoint cur{ds.origin.x + ds.head_x, ds.origin.y + ds.head_y};
  out.points.push_back(cur);
  for (const auto& p : ds.deltas) {
    cur.x += unfold(static_cast<std::uint64_t>(p.dx));
    cur.y += unfold(static_cast<std::uint64_t>(p.dy));
    out.points.push_back(cur);
  }
  out.points.push_back(out.points.front());
  return out;
}

DeltaSeq to_delta(const IntPolygon& poly, Transform kind, Origin origin) {
  return kind == Transform::DeltaMin ? to_delta_min(poly, origin) : to_delta_consec(poly, origin);
}

IntPolygon from_delta(const DeltaSeq& ds) {
  return ds.kind == Transform::DeltaMin ? from_delta_min(ds) : from_delta_consec(ds);
}

}  // namespace polycomp
