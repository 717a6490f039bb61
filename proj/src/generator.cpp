#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "polycomp/corpus.hpp"
#include "polycomp/error.hpp"

namespace polycomp {
namespace {

// Sampling is written out by hand so a seed yields the same corpus with any
// standard library; only the mt19937_64 engine itself is relied on.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : eng_(seed) {}

  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(eng_() % span);
  }

  // Geometric on {0, 1, ...} with the given mean.
  std::int64_t geometric0(double mean) {
    if (mean <= 0.0) return 0;
    double p = 1.0 / (1.0 + mean);
    return static_cast<std::int64_t>(std::floor(std::log1p(-uniform()) / std::log1p(-p)));
  }

 private:
  std::mt19937_64 eng_;
};

std::int64_t sample_delta(Sampler& s, double mean, std::int64_t max, double zero_prob) {
  if (s.uniform() < zero_prob) return 0;
  for (;;) {
    std::int64_t v = 1 + s.geometric0(mean - 1.0);
    if (v <= max) return v;
  }
}

void check(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::InvalidArgument, "generator: " + what);
}

}  // namespace

void validate(const GenParams& p) {
  check(p.min_points >= 4, "min_points must be at least 4");
  check(p.max_points >= p.min_points, "max_points below min_points");
  check(p.mean_points >= static_cast<double>(p.min_points) && p.mean_points <= static_cast<double>(p.max_points),
        "mean_points outside [min_points, max_points]");
  check(p.head_x_min >= 0 && p.head_y_min >= 0, "head minimum must be non-negative");
  check(p.max_dx >= 1 && p.max_dy >= 1, "delta clamp must be positive");
  check(p.mean_dx >= 1.0 && p.mean_dx <= static_cast<double>(p.max_dx), "mean_dx outside [1, max_dx]");
  check(p.mean_dy >= 1.0 && p.mean_dy <= static_cast<double>(p.max_dy), "mean_dy outside [1, max_dy]");
  check(p.head_x_max >= p.head_x_min && p.head_y_max >= p.head_y_min, "empty head range");
  check(p.first_x_max - p.max_dx >= p.head_x_min && p.first_y_max - p.max_dy >= p.head_y_min,
        "first-point bound leaves no room for the head range");
  check(p.max_folded_consec >= 1, "folded bound must be positive");
  check(p.zero_prob >= 0.0 && p.zero_prob < 1.0, "zero_prob outside [0, 1)");
  check(p.precision >= 0 && p.precision <= 6, "precision outside [0, 6]");
}

std::vector<GeoPolygon> generate_corpus(const GenParams& p) {
  validate(p);
  Sampler s(p.seed);
  const double scale = std::pow(10.0, p.precision);
  std::vector<GeoPolygon> out;
  out.reserve(p.n_polygons);

  for (std::size_t k = 0; k < p.n_polygons; ++k) {
    std::size_t n = 0;
    do {
      n = p.min_points + static_cast<std::size_t>(s.geometric0(p.mean_points - static_cast<double>(p.min_points)));
    } while (n > p.max_points);
    const std::size_t m = n - 1;

    std::vector<std::int64_t> dx(m), dy(m);
    for (;;) {
      for (std::size_t i = 0; i < m; ++i) {
        dx[i] = sample_delta(s, p.mean_dx, p.max_dx, p.zero_prob);
        dy[i] = sample_delta(s, p.mean_dy, p.max_dy, p.zero_prob);
      }
      dx[static_cast<std::size_t>(s.uniform_int(0, static_cast<std::int64_t>(m) - 1))] = 0;
      dy[static_cast<std::size_t>(s.uniform_int(0, static_cast<std::int64_t>(m) - 1))] = 0;
      bool ok = true;
      for (std::size_t i = 1; i < m && ok; ++i) {
        ok = fold(dx[i] - dx[i - 1]) <= static_cast<std::uint64_t>(p.max_folded_consec) &&
             fold(dy[i] - dy[i - 1]) <= static_cast<std::uint64_t>(p.max_folded_consec);
      }
      if (ok) break;
    }

    std::int64_t hx = s.uniform_int(p.head_x_min, std::min(p.head_x_max, p.first_x_max - dx[0]));
    std::int64_t hy = s.uniform_int(p.head_y_min, std::min(p.head_y_max, p.first_y_max - dy[0]));

    GeoPolygon poly;
    poly.points.reserve(n);
    for (std::size_t i = 0; i < m; ++i) {
      auto x = static_cast<double>(p.origin.x + hx + dx[i]);
      auto y = static_cast<double>(p.origin.y + hy + dy[i]);
      poly.points.push_back({x / scale, -y / scale});
    }
    poly.points.push_back(poly.points.front());
    out.push_back(std::move(poly));
  }
  return out;
}

}  // namespace polycomp
