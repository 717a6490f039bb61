#include "polycomp/report.hpp"

#include <cmath>
#include <cstdio>
#include <map>

#include "polycomp/batch.hpp"
#include "polycomp/corpus.hpp"
#include "polycomp/error.hpp"

namespace polycomp {
namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

const double kBitsPerChar70 = std::log2(70.0);

}  // namespace

std::string BenchColumn::name() const {
  return std::string(codec_name(codec)) + "/" + std::string(transform_name(transform));
}

std::vector<BenchColumn> all_bench_columns() {
  std::vector<BenchColumn> out;
  for (auto c : kAllCodecs) {
    out.push_back({c, Transform::DeltaMin});
    out.push_back({c, Transform::DeltaConsec});
  }
  return out;
}

std::vector<BenchColumn> parse_bench_columns(std::string_view list) {
  std::vector<BenchColumn> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    auto end = list.find(',', start);
    if (end == std::string_view::npos) end = list.size();
    std::string_view item = list.substr(start, end - start);
    if (!item.empty()) {
      auto slash = item.find('/');
      CodecId c = parse_codec(item.substr(0, slash));
      if (slash == std::string_view::npos) {
        out.push_back({c, Transform::DeltaMin});
        out.push_back({c, Transform::DeltaConsec});
      } else {
        out.push_back({c, parse_transform(item.substr(slash + 1))});
      }
    }
    start = end + 1;
  }
  if (out.empty()) throw Error(Errc::InvalidArgument, "empty codec list");
  return out;
}

BenchReport run_bench(const CodecSuite& suite, const std::vector<IntPolygon>& polys,
                      const std::vector<BenchColumn>& columns) {
  if (polys.empty()) throw Error(Errc::EmptyCorpus, "nothing to benchmark");
  BenchReport r;
  r.columns = columns;
  r.rows.resize(polys.size());
  for (std::size_t i = 0; i < polys.size(); ++i) {
    r.rows[i].id = i + 1;
    r.rows[i].n_points = polys[i].points.size();
    r.rows[i].original_length = original_length(polys[i]);
  }
  for (const auto& col : columns) {
    auto out = encode_batch_parallel(suite, polys, col.codec, col.transform);
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (!out[i].ok()) throw *out[i].error;
      auto& row = r.rows[i];
      row.lengths.push_back(out[i].value->payload.size());
      row.ratios.push_back(100.0 * static_cast<double>(row.lengths.back()) / static_cast<double>(row.original_length));
    }
  }

  for (Transform t : {Transform::DeltaMin, Transform::DeltaConsec}) {
    const auto& res = suite.resources(t);
    if (!res.value_model || !res.huffman) continue;
    for (std::size_t i = 0; i < polys.size(); ++i) {
      DeltaSeq ds = to_delta(polys[i], t, suite.origin());
      auto values = ds.values();
      EntropyRow e;
      e.id = i + 1;
      e.transform = t;
      e.shannon_bits = information_bits(*res.value_model, values);
      BitString bits;
      res.huffman->encode(values, bits);
      e.huffman_bits = bits.size();
      e.big_bits = static_cast<double>(suite.encode(ds, CodecId::Big).payload.size()) * kBitsPerChar70;
      e.var_bits = static_cast<double>(suite.encode(ds, CodecId::Var).payload.size()) * kBitsPerChar70;
      auto chars = static_cast<std::size_t>(std::ceil(e.shannon_bits / kBitsPerChar70));
      auto& row = r.rows[i];
      row.shannon_chars = row.shannon_chars == 0 ? chars : std::min(row.shannon_chars, chars);
      r.entropy.push_back(e);
    }
  }
  return r;
}

std::vector<ColumnSummary> BenchReport::summary() const {
  std::vector<ColumnSummary> out;
  const auto n = static_cast<double>(rows.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    ColumnSummary s;
    s.name = columns[c].name();
    double sl = 0, sr = 0;
    for (const auto& row : rows) {
      sl += static_cast<double>(row.lengths[c]);
      sr += row.ratios[c];
    }
    s.mean_length = sl / n;
    s.mean_ratio = sr / n;
    double vl = 0, vr = 0;
    for (const auto& row : rows) {
      vl += std::pow(static_cast<double>(row.lengths[c]) - s.mean_length, 2);
      vr += std::pow(row.ratios[c] - s.mean_ratio, 2);
    }
    s.stddev_length = std::sqrt(vl / n);
    s.stddev_ratio = std::sqrt(vr / n);
    out.push_back(s);
  }
  return out;
}

double BenchReport::mean_original_length() const {
  double s = 0;
  for (const auto& row : rows) s += static_cast<double>(row.original_length);
  return rows.empty() ? 0.0 : s / static_cast<double>(rows.size());
}

std::string BenchReport::rows_csv() const {
  std::string out = "id,points,original_length";
  for (const auto& c : columns) out += "," + c.name() + "_len";
  for (const auto& c : columns) out += "," + c.name() + "_pct";
  out += ",shannon_chars\n";
  for (const auto& row : rows) {
    out += std::to_string(row.id) + ',' + std::to_string(row.n_points) + ',' + std::to_string(row.original_length);
    for (auto l : row.lengths) out += ',' + std::to_string(l);
    for (auto p : row.ratios) out += ',' + fmt(p);
    out += ',' + std::to_string(row.shannon_chars) + '\n';
  }
  return out;
}

std::string BenchReport::summary_csv() const {
  std::string out = "column,mean_length,stddev_length,mean_ratio,stddev_ratio\n";
  for (const auto& s : summary()) {
    out += s.name + ',' + fmt(s.mean_length) + ',' + fmt(s.stddev_length) + ',' + fmt(s.mean_ratio) + ',' +
           fmt(s.stddev_ratio) + '\n';
  }
  return out;
}

std::string BenchReport::histogram_csv() const {
  std::string out = "column,length,count\n";
  for (std::size_t c = 0; c < columns.size(); ++c) {
    std::map<std::size_t, std::size_t> h;
    for (const auto& row : rows) ++h[row.lengths[c]];
    for (const auto& [len, count] : h) {
      out += columns[c].name() + ',' + std::to_string(len) + ',' + std::to_string(count) + '\n';
    }
  }
  return out;
}

std::string BenchReport::entropy_csv() const {
  std::string out = "id,transform,shannon_bits,huffman_bits,big_bits,var_bits\n";
  for (const auto& e : entropy) {
    out += std::to_string(e.id) + ',' + std::string(transform_name(e.transform)) + ',' + fmt(e.shannon_bits) + ',' +
           std::to_string(e.huffman_bits) + ',' + fmt(e.big_bits) + ',' + fmt(e.var_bits) + '\n';
  }
  return out;
}

}  // namespace polycomp
