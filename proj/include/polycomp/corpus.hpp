#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "polycomp/transforms.hpp"

namespace polycomp {

__extension__ typedef unsigned __int128 uint128;

// ---------------------------------------------------------------------------
// Corpus text: one polygon per line, `lat,lon` points separated by spaces.
// ---------------------------------------------------------------------------

// Closes an open ring by repeating the first point. Blank lines are skipped.
std::vector<GeoPolygon> parse_corpus(std::string_view text);
GeoPolygon parse_polygon_line(std::string_view line, std::size_t line_no = 1);

// Shortest decimal form of each coordinate at the given precision.
std::string format_polygon(const GeoPolygon& poly, int precision = 2);
std::string format_polygon(const IntPolygon& poly);

// Length of the plain comma-separated coordinate list "x1,y1,...,xN,yN"
// (closing point included, trailing zeros dropped), the reference size that
// compression ratios are quoted against.
std::size_t original_length(const IntPolygon& poly);

// ---------------------------------------------------------------------------
// Moments
// ---------------------------------------------------------------------------

// Exact integer power sums of a sample of non-negative integers. Merging is
// exact and therefore independent of partitioning and order.
class MomentAccumulator {
 public:
  void add(std::int64_t value);
  void merge(const MomentAccumulator& other);

  std::uint64_t count() const noexcept { return n_; }
  std::int64_t min() const noexcept { return min_; }
  std::int64_t max() const noexcept { return max_; }
  double mean() const;
  // Population central moments.
  double central_moment(int order) const;
  double skewness() const;         // m3 / m2^1.5
  double excess_kurtosis() const;  // m4 / m2^2 - 3
  bool degenerate() const noexcept { return n_ == 0 || min_ == max_; }

 private:
  std::uint64_t n_ = 0;
  uint128 s1_ = 0, s2_ = 0, s3_ = 0, s4_ = 0;
  std::int64_t min_ = INT64_MAX;
  std::int64_t max_ = INT64_MIN;
};

struct QuantityStats {
  std::string name;
  std::uint64_t count = 0;
  std::int64_t min = 0;
  std::int64_t max = 0;
  double mean = 0.0;
  double skewness = 0.0;  // NaN when degenerate
  double kurtosis = 0.0;  // excess; NaN when degenerate
  bool degenerate = false;
  std::map<std::int64_t, std::uint64_t> histogram;  // bin width 1
};

QuantityStats summarize(std::string name, const MomentAccumulator& acc,
                        std::map<std::int64_t, std::uint64_t> histogram);

struct CorpusStats {
  // points, original_length, dx, dy, consec_dx, consec_dy, head_x_min,
  // head_y_min, head_x_first, head_y_first
  std::vector<QuantityStats> quantities;
  const QuantityStats& at(std::string_view name) const;

  // quantity,min,max,mean,skewness,kurtosis
  std::string summary_csv() const;
  // value,count for one quantity
  std::string histogram_csv(std::string_view name) const;
};

struct StatsOptions {
  Origin origin{};
  int precision = 2;
  bool include_zero_deltas = false;
};

CorpusStats compute_stats(const std::vector<GeoPolygon>& polygons, const StatsOptions& opts = {});
// Reference implementation: a single sequential pass.
CorpusStats compute_stats_serial(const std::vector<GeoPolygon>& polygons, const StatsOptions& opts = {});

// ---------------------------------------------------------------------------
// Synthetic corpus
// ---------------------------------------------------------------------------

struct GenParams {
  std::size_t n_polygons = 10000;
  std::size_t min_points = 4;   // ring points including the closing point
  std::size_t max_points = 24;
  double mean_points = 9.0;
  std::int64_t head_x_min = 167, head_x_max = 3284;  // offset of the minimum corner from the origin
  std::int64_t head_y_min = 456, head_y_max = 9932;
  std::int64_t first_x_max = 3301, first_y_max = 9988;  // bound on the first point's offset
  double mean_dx = 22.0, mean_dy = 24.0;                // mean of the non-zero offsets
  std::int64_t max_dx = 327, max_dy = 325;
  std::int64_t max_folded_consec = 549;                 // bound on sign-folded consecutive differences
  double zero_prob = 0.04;                              // extra zero offsets beyond the forced minimum
  std::uint64_t seed = 1;
  Origin origin{};
  int precision = 2;
};

void validate(const GenParams& p);
std::vector<GeoPolygon> generate_corpus(const GenParams& p);

}  // namespace polycomp
