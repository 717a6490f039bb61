#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include <omp.h>

#include "polycomp/corpus.hpp"
#include "polycomp/error.hpp"

namespace polycomp {
namespace {

__extension__ typedef __int128 i128;

struct Checked {
  std::optional<i128> v;
};

Checked cmul(Checked a, Checked b) {
  i128 r;
  if (!a.v || !b.v || __builtin_mul_overflow(*a.v, *b.v, &r)) return {};
  return {r};
}
Checked cadd(Checked a, Checked b) {
  i128 r;
  if (!a.v || !b.v || __builtin_add_overflow(*a.v, *b.v, &r)) return {};
  return {r};
}
Checked csub(Checked a, Checked b) {
  i128 r;
  if (!a.v || !b.v || __builtin_sub_overflow(*a.v, *b.v, &r)) return {};
  return {r};
}
Checked lit(i128 v) { return {v}; }

Checked as_checked(uint128 v) {
  if (v > static_cast<uint128>(std::numeric_limits<i128>::max())) return {};
  return {static_cast<i128>(v)};
}

long double to_ld(i128 v) { return static_cast<long double>(v); }

enum Quantity : std::size_t {
  kPoints,
  kOriginalLength,
  kDx,
  kDy,
  kConsecDx,
  kConsecDy,
  kHeadXMin,
  kHeadYMin,
  kHeadXFirst,
  kHeadYFirst,
  kQuantityCount
};

constexpr const char* kNames[kQuantityCount] = {"points",    "original_length", "dx",         "dy",
                                                "consec_dx", "consec_dy",       "head_x_min", "head_y_min",
                                                "head_x_first", "head_y_first"};

struct Partial {
  MomentAccumulator acc[kQuantityCount];
  std::map<std::int64_t, std::uint64_t> hist[kQuantityCount];

  void add(Quantity q, std::int64_t v) {
    acc[q].add(v);
    ++hist[q][v];
  }

  void merge(const Partial& o) {
    for (std::size_t q = 0; q < kQuantityCount; ++q) {
      acc[q].merge(o.acc[q]);
      for (const auto& [k, c] : o.hist[q]) hist[q][k] += c;
    }
  }
};

void accumulate(Partial& part, const GeoPolygon& poly, const StatsOptions& opts) {
  IntPolygon ip = quantize(poly, opts.precision);
  DeltaSeq dm = to_delta_min(ip, opts.origin);
  DeltaSeq dc = to_delta_consec(ip, opts.origin);
  part.add(kPoints, static_cast<std::int64_t>(ip.points.size()));
  part.add(kOriginalLength, static_cast<std::int64_t>(original_length(ip)));
  for (const auto& d : dm.deltas) {
    if (d.dx != 0 || opts.include_zero_deltas) part.add(kDx, d.dx);
    if (d.dy != 0 || opts.include_zero_deltas) part.add(kDy, d.dy);
  }
  for (const auto& d : dc.deltas) {
    if (d.dx != 0 || opts.include_zero_deltas) part.add(kConsecDx, d.dx);
    if (d.dy != 0 || opts.include_zero_deltas) part.add(kConsecDy, d.dy);
  }
  part.add(kHeadXMin, dm.head_x);
  part.add(kHeadYMin, dm.head_y);
  part.add(kHeadXFirst, dc.head_x);
  part.add(kHeadYFirst, dc.head_y);
}

CorpusStats finish(Partial& part) {
  CorpusStats out;
  for (std::size_t q = 0; q < kQuantityCount; ++q) {
    out.quantities.push_back(summarize(kNames[q], part.acc[q], std::move(part.hist[q])));
  }
  return out;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

}  // namespace

void MomentAccumulator::add(std::int64_t value) {
  if (value < 0) throw Error(Errc::InvalidArgument, "moment accumulator takes non-negative values");
  auto v = static_cast<uint128>(value);
  ++n_;
  s1_ += v;
  s2_ += v * v;
  s3_ += v * v * v;
  s4_ += v * v * v * v;
  if (value < min_) min_ = value;
  if (value > max_) max_ = value;
}

void MomentAccumulator::merge(const MomentAccumulator& o) {
  n_ += o.n_;
  s1_ += o.s1_;
  s2_ += o.s2_;
  s3_ += o.s3_;
  s4_ += o.s4_;
  if (o.min_ < min_) min_ = o.min_;
  if (o.max_ > max_) max_ = o.max_;
}

double MomentAccumulator::mean() const {
  if (n_ == 0) return std::numeric_limits<double>::quiet_NaN();
  return static_cast<double>(static_cast<long double>(s1_) / n_);
}

// n^k * m_k is an integer polynomial in the power sums; evaluate it exactly
// when it fits and fall back to long double otherwise.
double MomentAccumulator::central_moment(int order) const {
  if (n_ == 0) return std::numeric_limits<double>::quiet_NaN();
  if (order == 0) return 1.0;
  if (order == 1) return 0.0;
  Checked n = lit(static_cast<i128>(n_));
  Checked a = as_checked(s1_), b = as_checked(s2_), c = as_checked(s3_), d = as_checked(s4_);
  Checked scaled;
  long double denom = 1.0L;
  long double nl = static_cast<long double>(n_);
  if (order == 2) {
    scaled = csub(cmul(n, b), cmul(a, a));
    denom = nl * nl;
  } else if (order == 3) {
    scaled = cadd(csub(cmul(cmul(n, n), c), cmul(lit(3), cmul(n, cmul(a, b)))), cmul(lit(2), cmul(a, cmul(a, a))));
    denom = nl * nl * nl;
  } else if (order == 4) {
    Checked a2 = cmul(a, a);
    scaled = csub(cadd(csub(cmul(cmul(n, cmul(n, n)), d), cmul(lit(4), cmul(cmul(n, n), cmul(a, c)))),
                     cmul(lit(6), cmul(n, cmul(a2, b)))),
                 cmul(lit(3), cmul(a2, a2)));
    denom = nl * nl * nl * nl;
  } else {
    throw Error(Errc::InvalidArgument, "central moment order must be 0..4");
  }
  if (scaled.v) return static_cast<double>(to_ld(*scaled.v) / denom);

  long double mu = static_cast<long double>(s1_) / nl;
  long double p2 = static_cast<long double>(s2_) / nl;
  long double p3 = static_cast<long double>(s3_) / nl;
  long double p4 = static_cast<long double>(s4_) / nl;
  long double r = 0.0L;
  if (order == 2) r = p2 - mu * mu;
  if (order == 3) r = p3 - 3 * mu * p2 + 2 * mu * mu * mu;
  if (order == 4) r = p4 - 4 * mu * p3 + 6 * mu * mu * p2 - 3 * mu * mu * mu * mu;
  return static_cast<double>(r);
}

double MomentAccumulator::skewness() const {
  if (degenerate()) return std::numeric_limits<double>::quiet_NaN();
  double m2 = central_moment(2);
  return central_moment(3) / std::pow(m2, 1.5);
}

double MomentAccumulator::excess_kurtosis() const {
  if (degenerate()) return std::numeric_limits<double>::quiet_NaN();
  double m2 = central_moment(2);
  return central_moment(4) / (m2 * m2) - 3.0;
}

QuantityStats summarize(std::string name, const MomentAccumulator& acc,
                        std::map<std::int64_t, std::uint64_t> histogram) {
  QuantityStats s;
  s.name = std::move(name);
  s.count = acc.count();
  s.degenerate = acc.degenerate();
  if (acc.count() > 0) {
    s.min = acc.min();
    s.max = acc.max();
    s.mean = acc.mean();
  } else {
    s.mean = std::numeric_limits<double>::quiet_NaN();
  }
  s.skewness = acc.skewness();
  s.kurtosis = acc.excess_kurtosis();
  s.histogram = std::move(histogram);
  return s;
}

const QuantityStats& CorpusStats::at(std::string_view name) const {
  for (const auto& q : quantities) {
    if (q.name == name) return q;
  }
  throw Error(Errc::InvalidArgument, "unknown quantity '" + std::string(name) + "'");
}

std::string CorpusStats::summary_csv() const {
  std::string out = "quantity,min,max,mean,skewness,kurtosis\n";
  for (const auto& q : quantities) {
    out += q.name + ',' + std::to_string(q.min) + ',' + std::to_string(q.max) + ',' + format_double(q.mean) + ',' +
           format_double(q.skewness) + ',' + format_double(q.kurtosis) + '\n';
  }
  return out;
}

std::string CorpusStats::histogram_csv(std::string_view name) const {
  const auto& q = at(name);
  std::string out = "value,count\n";
  for (const auto& [v, c] : q.histogram) out += std::to_string(v) + ',' + std::to_string(c) + '\n';
  return out;
}

CorpusStats compute_stats_serial(const std::vector<GeoPolygon>& polygons, const StatsOptions& opts) {
  if (polygons.empty()) throw Error(Errc::EmptyCorpus, "no polygons to summarize");
  Partial part;
  for (const auto& p : polygons) accumulate(part, p, opts);
  return finish(part);
}

CorpusStats compute_stats(const std::vector<GeoPolygon>& polygons, const StatsOptions& opts) {
  if (polygons.empty()) throw Error(Errc::EmptyCorpus, "no polygons to summarize");
  const auto n = static_cast<std::int64_t>(polygons.size());
  std::vector<Partial> parts(static_cast<std::size_t>(omp_get_max_threads()));
  std::optional<Error> failure;
#pragma omp parallel
  {
    Partial& mine = parts[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
      try {
        accumulate(mine, polygons[static_cast<std::size_t>(i)], opts);
      } catch (const Error& e) {
#pragma omp critical
        if (!failure) failure = e;
      }
    }
  }
  if (failure) throw *failure;
  Partial total;
  for (const auto& p : parts) total.merge(p);
  return finish(total);
}

}  // namespace polycomp
