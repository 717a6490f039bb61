#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <omp.h>

#include "polycomp/batch.hpp"
#include "polycomp/corpus.hpp"
#include "polycomp/suite.hpp"

using namespace polycomp;

namespace {

template <class F>
double best_ms(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

bool same(const std::vector<Outcome<Encoded>>& a, const std::vector<Outcome<Encoded>>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].ok() != b[i].ok() || (a[i].ok() && *a[i].value != *b[i].value)) return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  GenParams gp;
  gp.n_polygons = argc > 1 ? std::stoul(argv[1]) : 10000;
  const int reps = argc > 2 ? std::stoi(argv[2]) : 3;

  std::vector<IntPolygon> polys;
  for (const auto& g : generate_corpus(gp)) polys.push_back(quantize(g));
  const CodecSuite suite = CodecSuite::train(polys);

  std::printf("polygons=%zu threads=%d reps=%d\n", polys.size(), omp_get_max_threads(), reps);
  std::printf("%-22s %12s %12s %8s %s\n", "codec", "serial_ms", "parallel_ms", "speedup", "match");

  int status = 0;
  for (auto codec : kAllCodecs) {
    for (auto t : {Transform::DeltaMin, Transform::DeltaConsec}) {
      std::vector<Outcome<Encoded>> s, p;
      double ms_s = best_ms(reps, [&] { s = encode_batch_serial(suite, polys, codec, t); });
      double ms_p = best_ms(reps, [&] { p = encode_batch_parallel(suite, polys, codec, t); });
      bool ok = same(s, p);
      if (!ok) status = 1;
      std::string name = std::string(codec_name(codec)) + "/" + std::string(transform_name(t));
      std::printf("%-22s %12.2f %12.2f %8.2f %s\n", name.c_str(), ms_s, ms_p, ms_s / ms_p, ok ? "yes" : "NO");
    }
  }

  StatsOptions so;
  std::vector<GeoPolygon> geo;
  for (const auto& p : polys) geo.push_back(dequantize(p));
  double st_s = best_ms(reps, [&] { compute_stats_serial(geo, so); });
  double st_p = best_ms(reps, [&] { compute_stats(geo, so); });
  std::printf("%-22s %12.2f %12.2f %8.2f\n", "stats", st_s, st_p, st_s / st_p);
  return status;
}
