#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "polycomp/error.hpp"
#include "polycomp/transforms.hpp"

using namespace polycomp;

namespace {

IntPolygon ring(std::vector<IntPoint> pts) {
  pts.push_back(pts.front());
  return {pts, 2};
}

}  // namespace

TEST_SUITE("transforms") {
  TEST_CASE("quantize the waco ring") {
    auto ip = quantize(fixtures::waco_ring());
    std::vector<IntPoint> want{{3130, 9740}, {3151, 9755}, {3180, 9699}, {3158, 9684}, {3130, 9740}};
    CHECK(ip.points == want);
    CHECK(ip.precision == 2);
  }

  TEST_CASE("quantize rounds half away from zero") {
    GeoPolygon g{{{31.515, -97.555}, {31.6, -97.6}, {31.7, -97.5}, {31.515, -97.555}}};
    CHECK(quantize(g).points[0] == IntPoint{3152, 9756});
    GeoPolygon h{{{17.67, -159.32}, {17.7, -159.3}, {17.8, -159.4}, {17.67, -159.32}}};
    CHECK(quantize(h).points[0] == IntPoint{1767, 15932});
  }

  TEST_CASE("quantize errors") {
    GeoPolygon open{{{31.3, -97.4}, {31.5, -97.5}, {31.8, -96.9}, {31.6, -96.8}}};
    CHECK(fixtures::code_of([&] { quantize(open); }) == Errc::OpenRing);
    GeoPolygon small{{{31.3, -97.4}, {31.5, -97.5}, {31.3, -97.4}}};
    CHECK(fixtures::code_of([&] { quantize(small); }) == Errc::TooFewPoints);
  }

  TEST_CASE("dequantize") {
    IntPolygon ip = ring({{3130, 9740}, {1, 1}, {3180, 9699}});
    auto g = dequantize(ip);
    CHECK(g.points[0].lat == doctest::Approx(31.30));
    CHECK(g.points[0].lon == doctest::Approx(-97.40));
    CHECK(g.points[1].lat == doctest::Approx(0.01));
    CHECK(g.points[1].lon == doctest::Approx(-0.01));
    CHECK(quantize(g) == ip);

    IntPolygon p3 = ring({{15932, 15932}, {15000, 15100}, {15500, 15200}});
    p3.precision = 3;
    auto g3 = dequantize(p3);
    CHECK(g3.points[0].lat == doctest::Approx(15.932));
    CHECK(g3.points[0].lon == doctest::Approx(-15.932));
    CHECK(quantize(g3, 3) == p3);
  }

  TEST_CASE("delta-min on the waco ring") {
    auto ds = to_delta_min(quantize(fixtures::waco_ring()));
    CHECK(ds.kind == Transform::DeltaMin);
    CHECK(ds.values() == std::vector<std::int64_t>{1530, 3684, 0, 56, 21, 71, 50, 15, 28, 0});
    CHECK(from_delta_min(ds) == quantize(fixtures::waco_ring()));
  }

  TEST_CASE("delta-min at the origin is all zeros") {
    IntPolygon sq = ring({{1600, 6000}, {1600, 6000}, {1600, 6000}});
    auto ds = to_delta_min(sq);
    CHECK(ds.head_x == 0);
    CHECK(ds.head_y == 0);
    for (const auto& p : ds.deltas) CHECK(p == DeltaPair{0, 0});
    CHECK(from_delta_min(ds) == sq);
  }

  TEST_CASE("delta-min head subtraction") {
    IntPolygon ip = ring({{1767, 15932}, {1800, 15950}, {1790, 15990}});
    CHECK(to_delta_min(ip).head_y == 9932);
    CHECK(to_delta_min(ip).head_x == 167);
  }

  TEST_CASE("origin too large") {
    IntPolygon ip = ring({{1500, 9000}, {1700, 9100}, {1650, 9200}});
    CHECK(fixtures::code_of([&] { to_delta_min(ip); }) == Errc::OriginTooLarge);
    CHECK(fixtures::code_of([&] { to_delta_consec(ip); }) == Errc::OriginTooLarge);
  }

  TEST_CASE("consecutive deltas on the waco ring") {
    auto ds = to_delta_consec(quantize(fixtures::waco_ring()));
    CHECK(ds.values() == std::vector<std::int64_t>{1530, 3740, 42, 30, 58, 111, 43, 29});
    CHECK(from_delta_consec(ds) == quantize(fixtures::waco_ring()));
  }

  TEST_CASE("consecutive deltas of equal steps are constant") {
    IntPolygon ip = ring({{2000, 7000}, {2010, 7005}, {2020, 7010}, {2030, 7015}});
    auto ds = to_delta_consec(ip);
    for (const auto& p : ds.deltas) CHECK(p == DeltaPair{20, 10});
  }

  TEST_CASE("consecutive deltas need two pairs") {
    DeltaSeq ds{Transform::DeltaConsec, 1, 1, {{2, 2}}, {}, 2};
    CHECK(fixtures::code_of([&] { from_delta_consec(ds); }) == Errc::TooFewPoints);
  }

  TEST_CASE("fold") {
    CHECK(fold(0) == 0);
    CHECK(fold(-1) == 1);
    CHECK(fold(3) == 6);
    CHECK(fold(-56) == 111);
    CHECK(fold(21) == 42);
    for (std::int64_t e = -1000000; e <= 1000000; ++e) {
      if (unfold(fold(e)) != e) {
        FAIL("unfold(fold(" << e << ")) != " << e);
      }
    }
  }

  TEST_CASE("pair counts and random round trips") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> x(1600, 5000), y(6000, 16000);
    std::uniform_int_distribution<int> n(3, 30);
    for (int k = 0; k < 2000; ++k) {
      std::vector<IntPoint> pts(static_cast<std::size_t>(n(rng)));
      for (auto& p : pts) p = {x(rng), y(rng)};
      IntPolygon ip = ring(pts);
      auto dm = to_delta_min(ip);
      auto dc = to_delta_consec(ip);
      REQUIRE(dm.deltas.size() == ip.points.size() - 1);
      REQUIRE(dc.deltas.size() == ip.points.size() - 2);
      bool zx = false, zy = false;
      for (const auto& p : dm.deltas) {
        REQUIRE(p.dx >= 0);
        REQUIRE(p.dy >= 0);
        zx = zx || p.dx == 0;
        zy = zy || p.dy == 0;
      }
      REQUIRE(zx);
      REQUIRE(zy);
      REQUIRE(from_delta_min(dm) == ip);
      REQUIRE(from_delta_consec(dc) == ip);
    }
  }

  TEST_CASE("transform names") {
    CHECK(parse_transform("delta-min") == Transform::DeltaMin);
    CHECK(parse_transform("delta") == Transform::DeltaConsec);
    CHECK(transform_name(Transform::DeltaConsec) == "delta");
    CHECK(fixtures::code_of([] { parse_transform("x"); }) == Errc::InvalidArgument);
  }
}
