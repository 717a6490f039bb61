// Acceptance gate: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "polycomp/batch.hpp"
#include "polycomp/corpus.hpp"
#include "polycomp/framing.hpp"
#include "polycomp/report.hpp"
#include "polycomp/suite.hpp"

using namespace polycomp;

namespace {

// Tolerances.
constexpr double kGoldenSeconds = 1.0;
constexpr double kRoundTripSeconds = 60.0;
constexpr std::size_t kCorpusSize = 10000;
constexpr std::size_t kPropertyCases = 1000;
constexpr double kBandLow = 8.0, kBandHigh = 26.0;
constexpr double kMeanLengthShare = 25.0;
constexpr double kEntropyTol = 1e-12;
constexpr double kAeSlackBits = 16.0;
constexpr double kMomentTol = 1e-9;
constexpr double kTargetTol = 0.10;
constexpr std::size_t kFramingCases = 1000;

struct Verdict {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& why) {
    if (!ok && pass) {
      pass = false;
      detail = why;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  return s.str();
}

const GenParams& corpus_params() {
  static GenParams p = [] {
    GenParams g;
    g.n_polygons = kCorpusSize;
    g.seed = 20240601;
    return g;
  }();
  return p;
}

const std::vector<GeoPolygon>& geo_corpus() {
  static auto c = generate_corpus(corpus_params());
  return c;
}

const std::vector<IntPolygon>& corpus() {
  static auto c = [] {
    std::vector<IntPolygon> out;
    for (const auto& g : geo_corpus()) out.push_back(quantize(g));
    return out;
  }();
  return c;
}

const CodecSuite& suite() {
  static CodecSuite s = CodecSuite::train(corpus());
  return s;
}

// 1 ---------------------------------------------------------------------------
Verdict golden_tables() {
  Verdict o;
  auto t0 = std::chrono::steady_clock::now();
  GeoPolygon waco{{{31.3, -97.4}, {31.51, -97.55}, {31.8, -96.99}, {31.58, -96.84}, {31.3, -97.4}}};
  GeoPolygon louisiana{{{30.97, -92.28}, {30.89, -92.04}, {30.61, -92.22}, {30.65, -92.34}, {30.97, -92.28}}};

  auto q1 = quantize(waco);
  std::vector<std::int64_t> flat;
  for (std::size_t i = 0; i + 1 < q1.points.size(); ++i) {
    flat.push_back(q1.points[i].x);
    flat.push_back(q1.points[i].y);
  }
  o.require(flat == std::vector<std::int64_t>{3130, 9740, 3151, 9755, 3180, 9699, 3158, 9684}, "O' = " + join(flat));
  auto dm = to_delta_min(q1);
  auto dc = to_delta_consec(q1);
  o.require(dm.values() == std::vector<std::int64_t>{1530, 3684, 0, 56, 21, 71, 50, 15, 28, 0},
            "T_min = " + join(dm.values()));
  o.require(dc.values() == std::vector<std::int64_t>{1530, 3740, 42, 30, 58, 111, 43, 29},
            "T_delta = " + join(dc.values()));
  o.require(encode_comma(dm).payload == "1530,3684,0,56,21,71,50,15,28,0", "comma min");
  o.require(encode_comma(dc).payload == "1530,3740,42,30,58,111,43,29", "comma delta");
  o.require(encode_fixed(dm).payload == "153003684000056021071050015028000", "fixed min");
  o.require(encode_fixed(dc).payload == "153003740042030058111043029", "fixed delta");

  auto q2 = quantize(louisiana);
  auto v64 = encode_var(to_delta_min(q2)).payload;
  auto v62 = encode_var(to_delta_consec(q2)).payload;
  o.require(v64 == "Mro4aOS00I4U", "VAR_64 = " + v64);
  o.require(v62 == "O9q4Flta8O", "VAR_62 = " + v62);
  RsdDictionary d(RsdMode::SlidingWindow, Transform::DeltaMin, 63, {{"00I", 'v', 1}});
  auto v63 = encode_var_rsd(to_delta_min(q2), d).payload;
  o.require(v63 == "NCosaOS@v4U", "VAR_63_RSD = " + v63);

  double secs = seconds_since(t0);
  o.require(secs < kGoldenSeconds, "took " + fmt("%.3f s", secs));
  if (o.pass) o.detail = "all strings exact, " + fmt("%.4f s", secs);
  return o;
}

// 2 ---------------------------------------------------------------------------
Verdict round_trip() {
  Verdict o;
  auto t0 = std::chrono::steady_clock::now();
  const auto& c = corpus();
  const auto& s = suite();
  std::size_t checks = 0;
  for (auto codec : kAllCodecs) {
    for (auto t : {Transform::DeltaMin, Transform::DeltaConsec}) {
      auto enc = encode_batch_parallel(s, c, codec, t);
      std::vector<Encoded> payloads;
      for (std::size_t i = 0; i < enc.size(); ++i) {
        if (!enc[i].ok()) {
          o.require(false, std::string(codec_name(codec)) + " encode failed on polygon " + std::to_string(i) + ": " +
                               enc[i].error->what());
          return o;
        }
        payloads.push_back(*enc[i].value);
      }
      auto dec = decode_batch_parallel(s, payloads);
      for (std::size_t i = 0; i < dec.size(); ++i) {
        bool ok = dec[i].ok() && *dec[i].value == c[i];
        o.require(ok, std::string(codec_name(codec)) + "/" + std::string(transform_name(t)) + " differs on polygon " +
                          std::to_string(i));
        ++checks;
      }
    }
  }
  double secs = seconds_since(t0);
  o.require(secs < kRoundTripSeconds, "took " + fmt("%.1f s", secs));
  if (o.pass) o.detail = std::to_string(checks) + " exact round trips (12 codecs x 2 transforms), " + fmt("%.2f s", secs);
  return o;
}

// 3 ---------------------------------------------------------------------------
Verdict length_laws() {
  Verdict o;
  std::vector<int> seen(25, 0);
  std::size_t var_checked = 0;
  auto check = [&](const IntPolygon& p) {
    const auto n = p.points.size();
    auto dm = to_delta_min(p);
    auto fixed = encode_fixed(dm).payload.size();
    auto fixed70 = encode_fixed_b(dm).payload.size();
    auto comma = encode_comma(dm).payload.size();
    auto var = encode_var(dm).payload;
    o.require(fixed == 6 * n + 3, "fixed length " + std::to_string(fixed) + " for N=" + std::to_string(n));
    o.require(fixed70 == 4 * n + 1, "fixed70 length " + std::to_string(fixed70) + " for N=" + std::to_string(n));
    o.require(comma + 1 >= 4 * n && comma <= 8 * n + 2, "comma length " + std::to_string(comma));
    if (var.find(Alphabet::canonical().reserved().fallback) == std::string::npos) {
      o.require(var.size() >= 2 * n + 2 && var.size() <= 4 * n + 1, "VAR length " + std::to_string(var.size()));
      ++var_checked;
    }
    if (n < seen.size()) ++seen[n];
  };
  for (const auto& p : corpus()) check(p);
  // Extremes for every N: all-zero offsets and offsets near the field limits.
  std::mt19937_64 rng(3);
  for (std::size_t n = 4; n <= 24; ++n) {
    for (int k = 0; k < 50; ++k) {
      IntPolygon p;
      std::int64_t span = k % 2 ? 999 : 60;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        p.points.push_back({1600 + 3000 + static_cast<std::int64_t>(rng() % (span + 1)),
                            6000 + 9000 + static_cast<std::int64_t>(rng() % (span + 1))});
      }
      p.points.push_back(p.points.front());
      check(p);
    }
  }
  for (std::size_t n = 4; n <= 24; ++n) o.require(seen[n] > 0, "no polygon with N=" + std::to_string(n));
  if (o.pass) o.detail = "N in [4,24], VAR bound checked on " + std::to_string(var_checked) + " polygons";
  return o;
}

// 4 ---------------------------------------------------------------------------
Verdict dominance() {
  Verdict o;
  GenParams p;
  p.n_polygons = kPropertyCases;
  p.seed = 404;
  p.max_dx = p.max_dy = 60;
  p.mean_dx = p.mean_dy = 14.0;
  p.max_folded_consec = 120;
  p.head_y_max = 64 * 64 - 1;
  std::size_t ok = 0, total = 0;
  const auto bp = BigParams::defaults_for(Transform::DeltaMin);
  for (const auto& g : generate_corpus(p)) {
    auto ds = to_delta_min(quantize(g));
    if (ds.max_delta() >= 61 || ds.head_x >= 64 * 64 || ds.head_y >= 64 * 64) continue;
    ++total;
    auto big = encode_big(ds, bp).payload.size();
    auto var = encode_var(ds).payload.size();
    if (big <= var + 1) ++ok;
  }
  o.require(total == kPropertyCases, "only " + std::to_string(total) + " eligible cases");
  o.require(ok == total, std::to_string(total - ok) + " of " + std::to_string(total) + " cases have BIG > VAR + 1");
  if (o.pass) o.detail = std::to_string(ok) + "/" + std::to_string(total) + " cases len(BIG) <= len(VAR)+1";
  return o;
}

// 5 ---------------------------------------------------------------------------
Verdict poly_optimality() {
  Verdict o;
  const auto& s = suite();
  const auto& dict = s.resources(Transform::DeltaConsec).dictionary;
  const auto& bp = s.big_params(Transform::DeltaConsec);
  std::size_t var_branch = 0;
  for (std::size_t i = 0; i < kPropertyCases; ++i) {
    auto ds = to_delta_consec(corpus()[i]);
    auto big = encode_big(ds, bp).payload.size();
    auto var = encode_var_rsd(ds, dict).payload.size();
    auto poly = encode_poly(ds, dict, bp);
    o.require(poly.payload.size() == std::min(big, var + 1), "polygon " + std::to_string(i) + ": POLY length " +
                                                                 std::to_string(poly.payload.size()));
    auto f = frame("", poly);
    if (poly_uses_var(poly)) {
      ++var_branch;
      o.require(f.sentinel == 'q' && f.payload_length == var, "polygon " + std::to_string(i) + ": #q frame carries " +
                                                                  std::to_string(f.payload_length) + " chars");
      o.require(f.text.size() == var + 3, "#q frame length");
    }
  }
  if (o.pass) {
    o.detail = std::to_string(kPropertyCases) + " polygons, " + std::to_string(var_branch) +
               " VAR branch framed without the discriminator";
  }
  return o;
}

// 6 ---------------------------------------------------------------------------
Verdict compression_band() {
  Verdict o;
  std::vector<BenchColumn> cols;
  for (auto c : {CodecId::Var, CodecId::VarRsd, CodecId::Big, CodecId::Poly}) {
    cols.push_back({c, Transform::DeltaMin});
    cols.push_back({c, Transform::DeltaConsec});
  }
  auto report = run_bench(suite(), corpus(), cols);
  const double orig = report.mean_original_length();
  std::string detail;
  for (const auto& s : report.summary()) {
    o.require(s.mean_ratio >= kBandLow && s.mean_ratio <= kBandHigh,
              s.name + " mean ratio " + fmt("%.2f%%", s.mean_ratio));
    double share = 100.0 * s.mean_length / orig;
    o.require(share < kMeanLengthShare, s.name + " mean length share " + fmt("%.2f%%", share));
    detail += (detail.empty() ? "" : " ") + s.name + "=" + fmt("%.1f%%", s.mean_ratio);
  }
  if (o.pass) o.detail = detail;
  return o;
}

// 7 ---------------------------------------------------------------------------
double brute_entropy(const SymbolModel& m) {
  double total = 0, h = 0;
  for (auto c : m.counts()) total += static_cast<double>(c);
  for (auto c : m.counts()) h -= static_cast<double>(c) / total * std::log2(static_cast<double>(c) / total);
  return h;
}

Verdict entropy_checks() {
  Verdict o;
  const auto& s = suite();
  std::size_t ae_checked = 0;
  for (auto t : {Transform::DeltaMin, Transform::DeltaConsec}) {
    const auto& r = s.resources(t);
    for (const SymbolModel* m : {&r.digit_model, &*r.value_model}) {
      double diff = std::abs(shannon_entropy(*m) - brute_entropy(*m));
      o.require(diff <= kEntropyTol, "entropy differs by " + fmt("%.3g", diff));
    }
    double H = shannon_entropy(*r.value_model), L = r.huffman->average_length(*r.value_model);
    o.require(H <= L && L < H + 1, "Huffman L=" + fmt("%.4f", L) + " H=" + fmt("%.4f", H));
    for (const auto& p : corpus()) {
      auto digits = encode_fixed(to_delta(p, t)).payload;
      double ideal = 0;
      for (char c : digits) ideal -= std::log2(r.digit_model.probability(c - '0'));
      auto bits = ae_encode_bits(digits, r.digit_model).size();
      o.require(static_cast<double>(bits) <= ideal + kAeSlackBits,
                "AE " + std::to_string(bits) + " bits vs ideal " + fmt("%.1f", ideal));
      ++ae_checked;
    }
  }
  if (o.pass) {
    const auto& r = s.resources(Transform::DeltaMin);
    o.detail = "H=" + fmt("%.4f", shannon_entropy(*r.value_model)) +
               " L=" + fmt("%.4f", r.huffman->average_length(*r.value_model)) + " (delta-min values); AE bound on " +
               std::to_string(ae_checked) + " payloads";
  }
  return o;
}

// 8 ---------------------------------------------------------------------------
Verdict framing() {
  Verdict o;
  std::mt19937_64 rng(808);
  const std::string msg_chars = "Flood warning until 5PM #@-!,.";
  std::size_t hashed = 0, lo = 99, hi = 0;
  for (std::size_t i = 0; i < kFramingCases; ++i) {
    std::string m;
    for (auto k = rng() % 60; k > 0; --k) m.push_back(msg_chars[rng() % msg_chars.size()]);
    if (i % 4 == 0) m += "#";
    if (m.find('#') != std::string::npos) ++hashed;
    const auto codec = kAllCodecs[rng() % kAllCodecs.size()];
    const auto t = rng() % 2 ? Transform::DeltaConsec : Transform::DeltaMin;
    const auto enc = suite().encode(corpus()[rng() % corpus().size()], codec, t);
    auto f = frame(m, enc);
    auto u = unframe(f.text);
    o.require(u.message == m && u.encoded == enc, "case " + std::to_string(i) + " does not round trip");
    std::size_t overhead = f.text.size() - escape_message(m).size() - enc.payload.size();
    lo = std::min(lo, overhead);
    hi = std::max(hi, overhead);
    o.require(overhead >= 2 && overhead <= 4, "overhead " + std::to_string(overhead));
  }
  if (o.pass) {
    o.detail = std::to_string(kFramingCases) + " pairs (" + std::to_string(hashed) + " with '#'), overhead " +
               std::to_string(lo) + ".." + std::to_string(hi);
  }
  return o;
}

// 9 ---------------------------------------------------------------------------
Verdict statistics() {
  Verdict o;
  auto stats = compute_stats(geo_corpus());
  auto rel = [](double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); };

  // Brute-force oracle: two-pass moments over the raw samples.
  std::map<std::string, std::vector<std::int64_t>> raw;
  for (const auto& p : corpus()) {
    auto dm = to_delta_min(p);
    auto dc = to_delta_consec(p);
    raw["points"].push_back(static_cast<std::int64_t>(p.points.size()));
    raw["original_length"].push_back(static_cast<std::int64_t>(original_length(p)));
    for (const auto& d : dm.deltas) {
      if (d.dx) raw["dx"].push_back(d.dx);
      if (d.dy) raw["dy"].push_back(d.dy);
    }
    for (const auto& d : dc.deltas) {
      if (d.dx) raw["consec_dx"].push_back(d.dx);
      if (d.dy) raw["consec_dy"].push_back(d.dy);
    }
    raw["head_x_min"].push_back(dm.head_x);
    raw["head_y_min"].push_back(dm.head_y);
    raw["head_x_first"].push_back(dc.head_x);
    raw["head_y_first"].push_back(dc.head_y);
  }
  double worst = 0;
  for (const auto& [name, xs] : raw) {
    const auto& q = stats.at(name);
    long double n = static_cast<long double>(xs.size()), sum = 0;
    for (auto x : xs) sum += x;
    long double mu = sum / n, m2 = 0, m3 = 0, m4 = 0;
    for (auto x : xs) {
      long double d = x - mu;
      m2 += d * d;
      m3 += d * d * d;
      m4 += d * d * d * d;
    }
    m2 /= n;
    m3 /= n;
    m4 /= n;
    double skew = static_cast<double>(m3 / std::pow(m2, 1.5L));
    double kurt = static_cast<double>(m4 / (m2 * m2) - 3);
    for (double e : {rel(q.mean, static_cast<double>(mu)), rel(q.skewness, skew), rel(q.kurtosis, kurt)}) {
      worst = std::max(worst, e);
    }
    o.require(q.count == xs.size(), name + " count");
  }
  o.require(worst <= kMomentTol, "moment error " + fmt("%.3g", worst));

  const auto& gp = corpus_params();
  auto target = [&](const char* name, double got, double want) {
    o.require(std::abs(got - want) <= kTargetTol * want,
              std::string(name) + " mean " + fmt("%.3f", got) + " vs target " + fmt("%.3f", want));
  };
  target("points", stats.at("points").mean, gp.mean_points);
  target("dx", stats.at("dx").mean, gp.mean_dx);
  target("dy", stats.at("dy").mean, gp.mean_dy);
  o.require(stats.at("points").min == static_cast<std::int64_t>(gp.min_points) &&
                stats.at("points").max == static_cast<std::int64_t>(gp.max_points),
            "points range");
  o.require(stats.at("dx").max <= gp.max_dx && stats.at("dy").max <= gp.max_dy, "delta clamp exceeded");
  o.require(stats.at("head_x_min").max <= gp.head_x_max && stats.at("head_y_min").max <= gp.head_y_max,
            "head range exceeded");
  if (o.pass) {
    o.detail = "moment error " + fmt("%.2g", worst) + "; means points=" + fmt("%.2f", stats.at("points").mean) +
               " dx=" + fmt("%.2f", stats.at("dx").mean) + " dy=" + fmt("%.2f", stats.at("dy").mean);
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"golden tables", golden_tables},   {"round trip", round_trip},
      {"length laws", length_laws},       {"BIG vs VAR dominance", dominance},
      {"POLY optimality", poly_optimality}, {"compression band", compression_band},
      {"entropy checks", entropy_checks}, {"framing", framing},
      {"statistics", statistics}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
