#pragma once

#include <string>
#include <vector>

#include "polycomp/codecs.hpp"
#include "polycomp/suite.hpp"

namespace polycomp {

struct BenchColumn {
  CodecId codec = CodecId::Var;
  Transform transform = Transform::DeltaMin;
  std::string name() const;  // e.g. "var/delta-min"
};

// "var/delta-min,big/delta" or bare codec names (both transforms).
std::vector<BenchColumn> parse_bench_columns(std::string_view list);
std::vector<BenchColumn> all_bench_columns();

struct BenchRow {
  std::size_t id = 0;
  std::size_t n_points = 0;
  std::size_t original_length = 0;
  std::vector<std::size_t> lengths;  // one per column
  std::vector<double> ratios;        // percent of original_length
  std::size_t shannon_chars = 0;     // ideal value-model length over the 70-character alphabet
};

struct EntropyRow {
  std::size_t id = 0;
  Transform transform = Transform::DeltaMin;
  double shannon_bits = 0.0;
  std::size_t huffman_bits = 0;
  double big_bits = 0.0;
  double var_bits = 0.0;
};

struct ColumnSummary {
  std::string name;
  double mean_length = 0.0;
  double stddev_length = 0.0;  // population
  double mean_ratio = 0.0;
  double stddev_ratio = 0.0;
};

struct BenchReport {
  std::vector<BenchColumn> columns;
  std::vector<BenchRow> rows;
  std::vector<EntropyRow> entropy;

  std::vector<ColumnSummary> summary() const;
  double mean_original_length() const;

  // id,points,original_length,<col>_len...,<col>_pct...,shannon_chars
  std::string rows_csv() const;
  // column,mean_length,stddev_length,mean_ratio,stddev_ratio
  std::string summary_csv() const;
  // column,length,count
  std::string histogram_csv() const;
  // id,transform,shannon_bits,huffman_bits,big_bits,var_bits
  std::string entropy_csv() const;
};

BenchReport run_bench(const CodecSuite& suite, const std::vector<IntPolygon>& polys,
                      const std::vector<BenchColumn>& columns);

}  // namespace polycomp
