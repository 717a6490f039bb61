#pragma once

#include <compare>
#include <cstdint>
#include <string_view>
#include <vector>

namespace polycomp {

// Decimal degrees. Latitude is positive and longitude negative for the
// continental corpus the codecs are calibrated on.
struct GeoPoint {
  double lat = 0.0;
  double lon = 0.0;
  bool operator==(const GeoPoint&) const = default;
};

// Closed ring: the last point repeats the first.
struct GeoPolygon {
  std::vector<GeoPoint> points;
  bool operator==(const GeoPolygon&) const = default;
};

struct IntPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  auto operator<=>(const IntPoint&) const = default;
};

// Quantized polygon: x = round(10^p * lat), y = round(-10^p * lon).
struct IntPolygon {
  std::vector<IntPoint> points;
  int precision = 2;
  bool operator==(const IntPolygon&) const = default;
};

enum class Transform { DeltaMin, DeltaConsec };

std::string_view transform_name(Transform t);  // "delta-min" / "delta"
Transform parse_transform(std::string_view name);

struct Origin {
  std::int64_t x = 1600;
  std::int64_t y = 6000;
  bool operator==(const Origin&) const = default;
};

struct DeltaPair {
  std::int64_t dx = 0;
  std::int64_t dy = 0;
  bool operator==(const DeltaPair&) const = default;
};

// DeltaMin: head = (Xmin, Ymin) - origin, pairs = offsets of the first N-1
// points from the minimum corner.
// DeltaConsec: head = first point - origin, pairs = sign-folded differences
// between consecutive points 2..N-1.
struct DeltaSeq {
  Transform kind = Transform::DeltaMin;
  std::int64_t head_x = 0;
  std::int64_t head_y = 0;
  std::vector<DeltaPair> deltas;
  Origin origin{};
  int precision = 2;

  // Number of ring points (closing duplicate included) this sequence encodes.
  std::size_t point_count() const;
  // head_x, head_y, then the pairs flattened.
  std::vector<std::int64_t> values() const;
  std::int64_t max_delta() const;

  bool operator==(const DeltaSeq&) const = default;
};

// Builds a sequence of `kind` from flattened values as returned by values().
DeltaSeq delta_seq_from_values(Transform kind, const std::vector<std::int64_t>& values,
                               Origin origin = {}, int precision = 2);

// Throws InvalidDeltaSeq when a value is negative or the pair count is
// impossible for a ring of at least four points.
void validate(const DeltaSeq& ds);
void validate(const GeoPolygon& poly);
void validate(const IntPolygon& poly);

IntPolygon quantize(const GeoPolygon& poly, int precision = 2);
GeoPolygon dequantize(const IntPolygon& poly);

DeltaSeq to_delta_min(const IntPolygon& poly, Origin origin = {});
IntPolygon from_delta_min(const DeltaSeq& ds);
DeltaSeq to_delta_consec(const IntPolygon& poly, Origin origin = {});
IntPolygon from_delta_consec(const DeltaSeq& ds);

DeltaSeq to_delta(const IntPolygon& poly, Transform kind, Origin origin = {});
IntPolygon from_delta(const DeltaSeq& ds);

// Zigzag map between integers and non-negative integers.
constexpr std::uint64_t fold(std::int64_t e) {
  return e >= 0 ? static_cast<std::uint64_t>(e) * 2
                : static_cast<std::uint64_t>(-(e + 1)) * 2 + 1;
}

constexpr std::int64_t unfold(std::uint64_t v) {
  return (v & 1) ? -static_cast<std::int64_t>(v >> 1) - 1
                 : static_cast<std::int64_t>(v >> 1);
}

}  // namespace polycomp
