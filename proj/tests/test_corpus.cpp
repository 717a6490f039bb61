#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "polycomp/codecs.hpp"
#include "polycomp/corpus.hpp"

using namespace polycomp;
using fixtures::code_of;

namespace {

struct Brute {
  double mean, m2, m3, m4;
};

Brute brute(const std::vector<std::int64_t>& xs) {
  long double n = static_cast<long double>(xs.size()), s = 0;
  for (auto x : xs) s += x;
  long double mu = s / n, a = 0, b = 0, c = 0;
  for (auto x : xs) {
    long double d = x - mu;
    a += d * d;
    b += d * d * d;
    c += d * d * d * d;
  }
  return {static_cast<double>(mu), static_cast<double>(a / n), static_cast<double>(b / n), static_cast<double>(c / n)};
}

bool rel_close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

}  // namespace

TEST_SUITE("corpus") {
  TEST_CASE("parse the louisiana ring") {
    auto polys = parse_corpus("30.97,-92.28 30.89,-92.04 30.61,-92.22 30.65,-92.34 30.97,-92.28\n");
    REQUIRE(polys.size() == 1);
    CHECK(polys[0].points.size() == 5);
    CHECK(polys[0] == fixtures::louisiana_ring());
  }

  TEST_CASE("parse errors and auto-close") {
    CHECK(code_of([] { parse_corpus("30.97,-92.28 30.89,-92.04 30.97,-92.28\n"); }) == Errc::TooFewPoints);
    auto closed = parse_corpus("30.97,-92.28 30.89,-92.04 30.61,-92.22 30.65,-92.34\n");
    CHECK(closed[0].points.size() == 5);
    CHECK(closed[0].points.back() == closed[0].points.front());
    try {
      parse_corpus("30.97,-92.28 30.89,-92.04 30.61,-92.22 30.97,-92.28\n\n31,-90 31.5,x 32,-91\n");
      FAIL("expected ParseError");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ParseError);
      CHECK(e.position() == 3);
    }
    CHECK(parse_corpus("\n  \n").empty());
  }

  TEST_CASE("format and parse are inverse") {
    auto corpus = fixtures::synthetic(500, 21);
    for (const auto& ip : corpus) {
      auto line = format_polygon(ip);
      auto back = parse_polygon_line(line);
      REQUIRE(quantize(back) == ip);
      REQUIRE(format_polygon(back, 2) == line);
    }
    CHECK(format_polygon(quantize(fixtures::waco_ring())) == "31.3,-97.4 31.51,-97.55 31.8,-96.99 31.58,-96.84 31.3,-97.4");
  }

  TEST_CASE("original length") {
    auto ip = quantize(fixtures::waco_ring());
    CHECK(original_length(ip) == std::string("31.3,-97.4,31.51,-97.55,31.8,-96.99,31.58,-96.84,31.3,-97.4").size());
  }

  TEST_CASE("moments") {
    MomentAccumulator sym;
    for (auto v : {1, 2, 3}) sym.add(v);
    CHECK(sym.skewness() == 0.0);
    CHECK(sym.mean() == 2.0);

    MomentAccumulator flat;
    for (int i = 0; i < 5; ++i) flat.add(7);
    CHECK(flat.degenerate());
    CHECK(std::isnan(flat.skewness()));
    CHECK(std::isnan(flat.excess_kurtosis()));
    auto s = summarize("flat", flat, {{7, 5}});
    CHECK(s.degenerate);
    CHECK(std::isnan(s.kurtosis));

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<std::int64_t> xs(2 + rng() % 3000);
      std::geometric_distribution<std::int64_t> g(1.0 / (1 + static_cast<double>(rng() % 400)));
      for (auto& x : xs) x = g(rng);
      MomentAccumulator a, left, right;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        a.add(xs[i]);
        (i % 3 ? left : right).add(xs[i]);
      }
      right.merge(left);
      auto b = brute(xs);
      if (b.m2 == 0) continue;
      REQUIRE(rel_close(a.mean(), b.mean, 1e-9));
      REQUIRE(rel_close(a.central_moment(2), b.m2, 1e-9));
      REQUIRE(rel_close(a.skewness(), b.m3 / std::pow(b.m2, 1.5), 1e-9));
      REQUIRE(rel_close(a.excess_kurtosis(), b.m4 / (b.m2 * b.m2) - 3, 1e-9));
      REQUIRE(right.skewness() == a.skewness());
      REQUIRE(right.excess_kurtosis() == a.excess_kurtosis());
    }
  }

  TEST_CASE("corpus statistics") {
    auto corpus = fixtures::synthetic(3000, 5);
    std::vector<GeoPolygon> geo;
    for (const auto& p : corpus) geo.push_back(dequantize(p));
    auto par = compute_stats(geo);
    auto ser = compute_stats_serial(geo);
    CHECK(par.summary_csv() == ser.summary_csv());
    CHECK(par.summary_csv().rfind("quantity,min,max,mean,skewness,kurtosis\n", 0) == 0);
    for (const auto& q : par.quantities) {
      std::uint64_t mass = 0;
      for (const auto& [v, c] : q.histogram) mass += c;
      CHECK(mass == q.count);
      CHECK(static_cast<double>(q.min) <= q.mean);
      CHECK(q.mean <= static_cast<double>(q.max));
    }
    CHECK(par.at("dx").min >= 1);
    StatsOptions with_zeros;
    with_zeros.include_zero_deltas = true;
    CHECK(compute_stats(geo, with_zeros).at("dx").min == 0);
    CHECK(par.histogram_csv("points").rfind("value,count\n", 0) == 0);
    CHECK(code_of([] { compute_stats({}); }) == Errc::EmptyCorpus);
  }

  TEST_CASE("generator") {
    GenParams p;
    p.n_polygons = 1;
    CHECK(generate_corpus(p) == generate_corpus(p));
    p.n_polygons = 10000;
    auto corpus = generate_corpus(p);
    std::map<std::size_t, int> n_hist;
    for (const auto& g : corpus) {
      auto ip = quantize(g);
      ++n_hist[ip.points.size()];
      auto dm = to_delta_min(ip);
      REQUIRE(dm.max_delta() < 350);
      REQUIRE(dm.head_x <= 3284);
      REQUIRE(dm.head_y <= 9932);
      REQUIRE(to_delta_consec(ip).max_delta() < 550);
      REQUIRE_FALSE(fixtures::error_of([&] {
        encode_fixed(dm);
        encode_big(dm, BigParams::defaults_for(Transform::DeltaMin));
        auto dc = to_delta_consec(ip);
        encode_fixed(dc);
        encode_big(dc, BigParams::defaults_for(Transform::DeltaConsec));
        encode_var(dm);
        encode_var(dc);
      }));
    }
    CHECK(n_hist.begin()->first == 4);
    CHECK(n_hist.rbegin()->first == 24);
    CHECK(n_hist.size() == 21);
    p.min_points = 3;
    CHECK(code_of([&] { generate_corpus(p); }) == Errc::InvalidArgument);
  }
}
