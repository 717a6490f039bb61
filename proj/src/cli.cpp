#include "polycomp/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "polycomp/batch.hpp"
#include "polycomp/corpus.hpp"
#include "polycomp/error.hpp"
#include "polycomp/framing.hpp"
#include "polycomp/report.hpp"
#include "polycomp/suite.hpp"

namespace polycomp::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string origin = "1600,6000";
  int precision = 2;
  std::string alphabet;
  std::vector<std::string> dicts;
  std::vector<std::string> models;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::MissingResource, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return read_file(path);
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::MissingResource, "cannot write '" + path + "'");
  f << text;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t") == std::string::npos; }

Origin parse_origin(const std::string& s) {
  auto comma = s.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument("");
    std::size_t a = 0, b = 0;
    Origin o{std::stoll(s.substr(0, comma), &a), std::stoll(s.substr(comma + 1), &b)};
    if (a != comma || b != s.size() - comma - 1) throw std::invalid_argument("");
    return o;
  } catch (const std::exception&) {
    throw UsageError("--origin expects X,Y integers, got '" + s + "'");
  }
}

Alphabet load_alphabet(const Common& c) {
  std::string path = c.alphabet;
  if (path.empty()) {
    if (const char* env = std::getenv("POLYCOMP_ALPHABET"); env && *env) path = env;
  }
  if (path.empty()) return Alphabet::canonical();
  return Alphabet::parse(read_file(path));
}

CodecSuite make_suite(const Common& c) {
  CodecSuite suite(load_alphabet(c), parse_origin(c.origin), c.precision);
  for (const auto& d : c.dicts) suite.set_dictionary(RsdDictionary::parse(read_file(d), suite.alphabet()));
  for (const auto& m : c.models) suite.set_model(SymbolModel::parse(read_file(m)));
  return suite;
}

void require_resources(const Common& c, CodecId codec) {
  if ((codec == CodecId::VarRsd || codec == CodecId::Poly) && c.dicts.empty()) {
    throw UsageError(std::string(codec_name(codec)) + " needs --dict");
  }
  if ((codec == CodecId::Ae || codec == CodecId::Huffman) && c.models.empty()) {
    throw UsageError(std::string(codec_name(codec)) + " needs --model");
  }
}

void add_common(CLI::App* cmd, Common& c, bool resources) {
  cmd->add_option("--origin", c.origin, "Origin X,Y in quantized units")->capture_default_str();
  cmd->add_option("--precision", c.precision, "Decimal places kept")->check(CLI::Range(0, 6))->capture_default_str();
  cmd->add_option("--alphabet", c.alphabet, "Alphabet file (default: $POLYCOMP_ALPHABET or canonical)");
  if (resources) {
    cmd->add_option("--dict", c.dicts, "RSD dictionary file (repeatable, one per transform)");
    cmd->add_option("--model", c.models, "Symbol model file (repeatable)");
  }
}

std::vector<std::string> codec_names() {
  std::vector<std::string> v;
  for (auto c : kAllCodecs) v.emplace_back(codec_name(c));
  return v;
}

const std::vector<std::string> kTransformNames{"delta-min", "delta"};

std::vector<IntPolygon> load_corpus(const std::string& path, std::istream& in, int precision) {
  auto geo = parse_corpus(read_input(path, in));
  if (geo.empty()) throw Error(Errc::EmptyCorpus, "corpus has no polygons");
  std::vector<IntPolygon> out;
  out.reserve(geo.size());
  for (const auto& g : geo) out.push_back(quantize(g, precision));
  return out;
}

std::string describe(const Error& e, std::size_t line) {
  std::string s = "line " + std::to_string(line) + ": " + e.what();
  if (e.position()) s += " (position " + std::to_string(*e.position()) + ")";
  return s;
}

// --- subcommands ---------------------------------------------------------

struct CompressArgs {
  Common common;
  std::string input = "-";
  std::string output;
  std::string codec = "poly";
  std::string transform = "delta";
  bool frame = false;
  std::string message;
  std::size_t budget = kDefaultBudget;
  bool skip_errors = false;
};

int cmd_compress(const CompressArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
  const CodecId codec = parse_codec(a.codec);
  const Transform t = parse_transform(a.transform);
  require_resources(a.common, codec);
  const CodecSuite suite = make_suite(a.common);

  auto lines = split_lines(read_input(a.input, in));
  std::vector<IntPolygon> polys;
  std::vector<std::size_t> line_nos;
  int status = kOk;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (blank(lines[i])) continue;
    try {
      polys.push_back(quantize(parse_polygon_line(lines[i], i + 1), suite.precision()));
      line_nos.push_back(i + 1);
    } catch (const Error& e) {
      err << describe(e, i + 1) << '\n';
      if (!a.skip_errors) return kDataError;
      status = kDataError;
    }
  }

  auto results = encode_batch_parallel(suite, polys, codec, t);
  std::string text;
  double ratio_sum = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (!results[i].ok()) {
      err << describe(*results[i].error, line_nos[i]) << '\n';
      if (!a.skip_errors) {
        write_output(a.output, text, out);
        return kDataError;
      }
      status = kDataError;
      continue;
    }
    const Encoded& enc = *results[i].value;
    if (a.frame) {
      auto f = frame(a.message, enc, suite.alphabet(), a.budget);
      if (f.warning) err << "line " << line_nos[i] << ": " << *f.warning << '\n';
      text += f.text;
    } else {
      text += enc.payload;
    }
    text += '\n';
    ratio_sum += 100.0 * static_cast<double>(enc.payload.size()) / static_cast<double>(original_length(polys[i]));
    ++count;
  }
  write_output(a.output, text, out);
  char buf[96];
  std::snprintf(buf, sizeof buf, "count=%zu mean_ratio=%.2f%%", count,
                count ? ratio_sum / static_cast<double>(count) : 0.0);
  err << buf << '\n';
  return status;
}

struct DecompressArgs {
  Common common;
  std::string input = "-";
  std::string output;
  std::string codec = "poly";
  std::string transform = "delta";
  bool frame = false;
  bool skip_errors = false;
};

int cmd_decompress(const DecompressArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
  const CodecId codec = parse_codec(a.codec);
  const Transform t = parse_transform(a.transform);
  if (!a.frame) require_resources(a.common, codec);
  const CodecSuite suite = make_suite(a.common);

  auto lines = split_lines(read_input(a.input, in));
  std::vector<Encoded> encs;
  std::vector<std::size_t> line_nos;
  int status = kOk;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    try {
      encs.push_back(a.frame ? unframe(lines[i], suite.alphabet()).encoded : Encoded{codec, t, lines[i]});
      line_nos.push_back(i + 1);
    } catch (const Error& e) {
      err << describe(e, i + 1) << '\n';
      if (!a.skip_errors) return kDataError;
      status = kDataError;
    }
  }
  auto results = decode_batch_parallel(suite, encs);
  std::string text;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (!results[i].ok()) {
      err << describe(*results[i].error, line_nos[i]) << '\n';
      if (!a.skip_errors) {
        write_output(a.output, text, out);
        return kDataError;
      }
      status = kDataError;
      continue;
    }
    text += format_polygon(*results[i].value) + '\n';
  }
  write_output(a.output, text, out);
  return status;
}

struct DictArgs {
  Common common;
  std::string input = "-";
  std::string output;
  std::string mode = "sliding";
  std::string transform = "delta";
  std::size_t capacity = RsdDictionary::kMaxEntries;
};

int cmd_dict_build(const DictArgs& a, std::istream& in, std::ostream& out) {
  const Transform t = parse_transform(a.transform);
  const RsdMode mode = parse_rsd_mode(a.mode);
  const CodecSuite suite = make_suite(a.common);
  auto polys = load_corpus(a.input, in, suite.precision());
  std::vector<DeltaSeq> seqs;
  for (const auto& p : polys) seqs.push_back(to_delta(p, t, suite.origin()));
  auto dict = RsdDictionary::build(rsd_training_payloads(seqs, suite.alphabet()), mode, t,
                                   VarParams::rsd_defaults_for(t).digit_base, a.capacity, suite.alphabet());
  write_output(a.output, dict.serialize(), out);
  return kOk;
}

struct ModelArgs {
  Common common;
  std::string input = "-";
  std::string output;
  std::string kind = "digit";
  std::string transform = "delta-min";
};

int cmd_model_build(const ModelArgs& a, std::istream& in, std::ostream& out) {
  const Transform t = parse_transform(a.transform);
  const CodecSuite suite = make_suite(a.common);
  auto polys = load_corpus(a.input, in, suite.precision());
  std::vector<DeltaSeq> seqs;
  for (const auto& p : polys) seqs.push_back(to_delta(p, t, suite.origin()));
  SymbolModel model;
  if (a.kind == "digit") {
    model = build_digit_model(fixed_payloads(seqs), t);
  } else {
    std::vector<std::vector<std::int64_t>> values;
    for (const auto& ds : seqs) values.push_back(ds.values());
    model = build_value_model(values, t);
  }
  write_output(a.output, model.serialize(), out);
  return kOk;
}

struct StatsArgs {
  Common common;
  std::string input = "-";
  std::string output;
  std::string histogram_dir;
  bool include_zeros = false;
};

int cmd_stats(const StatsArgs& a, std::istream& in, std::ostream& out) {
  StatsOptions opts{parse_origin(a.common.origin), a.common.precision, a.include_zeros};
  auto geo = parse_corpus(read_input(a.input, in));
  auto stats = compute_stats(geo, opts);
  write_output(a.output, stats.summary_csv(), out);
  if (!a.histogram_dir.empty()) {
    std::filesystem::create_directories(a.histogram_dir);
    for (const auto& q : stats.quantities) {
      write_output((std::filesystem::path(a.histogram_dir) / (q.name + ".csv")).string(), stats.histogram_csv(q.name),
                   out);
    }
  }
  return kOk;
}

struct GenArgs {
  GenParams p;
  std::string output;
  std::string origin = "1600,6000";
};

int cmd_gen(GenArgs a, std::ostream& out) {
  a.p.origin = parse_origin(a.origin);
  try {
    validate(a.p);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  std::string text;
  for (const auto& g : generate_corpus(a.p)) text += format_polygon(g, a.p.precision) + '\n';
  write_output(a.output, text, out);
  return kOk;
}

struct BenchArgs {
  Common common;
  std::string input = "-";
  std::string codecs;
  std::string out_dir;
  std::string mode = "sliding";
};

int cmd_bench(const BenchArgs& a, std::istream& in, std::ostream& out) {
  auto columns = a.codecs.empty() ? all_bench_columns() : parse_bench_columns(a.codecs);
  const RsdMode mode = parse_rsd_mode(a.mode);
  CodecSuite base = make_suite(a.common);
  auto polys = load_corpus(a.input, in, base.precision());
  CodecSuite suite =
      CodecSuite::train(polys, mode, base.alphabet(), base.origin(), base.precision());
  for (const auto& d : a.common.dicts) suite.set_dictionary(RsdDictionary::parse(read_file(d), suite.alphabet()));
  for (const auto& m : a.common.models) suite.set_model(SymbolModel::parse(read_file(m)));
  auto report = run_bench(suite, polys, columns);
  if (!a.out_dir.empty()) {
    namespace fs = std::filesystem;
    fs::create_directories(a.out_dir);
    fs::path dir(a.out_dir);
    write_output((dir / "rows.csv").string(), report.rows_csv(), out);
    write_output((dir / "summary.csv").string(), report.summary_csv(), out);
    write_output((dir / "histogram.csv").string(), report.histogram_csv(), out);
    write_output((dir / "entropy.csv").string(), report.entropy_csv(), out);
  }
  out << report.summary_csv();
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compact polygon encodings for short alert messages", "polycomp"};
  app.require_subcommand(1);
  const auto codecs = codec_names();

  CompressArgs ca;
  auto* compress = app.add_subcommand("compress", "Encode one polygon per input line");
  compress->add_option("input", ca.input, "Corpus file or -");
  compress->add_option("-o,--output", ca.output, "Output file");
  compress->add_option("--codec", ca.codec)->check(CLI::IsMember(codecs))->capture_default_str();
  compress->add_option("--transform", ca.transform)->check(CLI::IsMember(kTransformNames))->capture_default_str();
  compress->add_flag("--frame", ca.frame, "Wrap payloads in message frames");
  compress->add_option("--message", ca.message, "Message text placed before each frame");
  compress->add_option("--budget", ca.budget, "Framed length that triggers a warning")->capture_default_str();
  compress->add_flag("--skip-errors", ca.skip_errors);
  add_common(compress, ca.common, true);

  DecompressArgs da;
  auto* decompress = app.add_subcommand("decompress", "Decode one payload per input line");
  decompress->add_option("input", da.input, "Payload file or -");
  decompress->add_option("-o,--output", da.output, "Output file");
  decompress->add_option("--codec", da.codec)->check(CLI::IsMember(codecs))->capture_default_str();
  decompress->add_option("--transform", da.transform)->check(CLI::IsMember(kTransformNames))->capture_default_str();
  decompress->add_flag("--frame", da.frame, "Input lines are framed messages");
  decompress->add_flag("--skip-errors", da.skip_errors);
  add_common(decompress, da.common, true);

  DictArgs dia;
  auto* dict = app.add_subcommand("dict-build", "Build an RSD dictionary from a corpus");
  dict->add_option("input", dia.input, "Corpus file or -");
  dict->add_option("-o,--output", dia.output, "Output file");
  dict->add_option("--mode", dia.mode)->check(CLI::IsMember({"sliding", "fixed"}))->capture_default_str();
  dict->add_option("--transform", dia.transform)->check(CLI::IsMember(kTransformNames))->capture_default_str();
  dict->add_option("--capacity", dia.capacity)
      ->check(CLI::Range(std::size_t{1}, RsdDictionary::kMaxEntries))
      ->capture_default_str();
  add_common(dict, dia.common, false);

  ModelArgs ma;
  auto* model = app.add_subcommand("model-build", "Build a symbol model from a corpus");
  model->add_option("input", ma.input, "Corpus file or -");
  model->add_option("-o,--output", ma.output, "Output file");
  model->add_option("--kind", ma.kind, "digit (arithmetic) or value (Huffman)")
      ->check(CLI::IsMember({"digit", "value"}))
      ->capture_default_str();
  model->add_option("--transform", ma.transform)->check(CLI::IsMember(kTransformNames))->capture_default_str();
  add_common(model, ma.common, false);

  StatsArgs sa;
  auto* stats = app.add_subcommand("stats", "Distribution statistics of a corpus");
  stats->add_option("input", sa.input, "Corpus file or -");
  stats->add_option("-o,--output", sa.output, "Summary CSV file");
  stats->add_option("--histograms", sa.histogram_dir, "Directory for per-quantity histogram CSVs");
  stats->add_flag("--include-zeros", sa.include_zeros, "Count zero deltas");
  add_common(stats, sa.common, false);

  GenArgs ga;
  auto* gen = app.add_subcommand("gen-corpus", "Generate a synthetic corpus");
  gen->add_option("-o,--output", ga.output, "Output file");
  gen->add_option("-n,--count", ga.p.n_polygons)->capture_default_str();
  gen->add_option("--seed", ga.p.seed)->capture_default_str();
  gen->add_option("--mean-points", ga.p.mean_points)->capture_default_str();
  gen->add_option("--min-points", ga.p.min_points)->capture_default_str();
  gen->add_option("--max-points", ga.p.max_points)->capture_default_str();
  gen->add_option("--mean-dx", ga.p.mean_dx)->capture_default_str();
  gen->add_option("--mean-dy", ga.p.mean_dy)->capture_default_str();
  gen->add_option("--max-dx", ga.p.max_dx)->capture_default_str();
  gen->add_option("--max-dy", ga.p.max_dy)->capture_default_str();
  gen->add_option("--zero-prob", ga.p.zero_prob)->capture_default_str();
  gen->add_option("--origin", ga.origin)->capture_default_str();
  gen->add_option("--precision", ga.p.precision)->check(CLI::Range(0, 6))->capture_default_str();

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Compressed lengths per codec over a corpus");
  bench->add_option("input", ba.input, "Corpus file or -");
  bench->add_option("--codecs", ba.codecs, "e.g. var,big/delta,poly/delta (default: all)");
  bench->add_option("--out-dir", ba.out_dir, "Write rows, summary, histogram and entropy CSVs here");
  bench->add_option("--mode", ba.mode, "RSD dictionary mode")
      ->check(CLI::IsMember({"sliding", "fixed"}))
      ->capture_default_str();
  add_common(bench, ba.common, true);

  std::vector<std::string> argv_store{"polycomp"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*compress) return cmd_compress(ca, in, out, err);
    if (*decompress) return cmd_decompress(da, in, out, err);
    if (*dict) return cmd_dict_build(dia, in, out);
    if (*model) return cmd_model_build(ma, in, out);
    if (*stats) return cmd_stats(sa, in, out);
    if (*gen) return cmd_gen(ga, out);
    if (*bench) return cmd_bench(ba, in, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what();
    if (e.position()) err << " (position " << *e.position() << ")";
    err << '\n';
    return kDataError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kUsageError;
}

}  // namespace polycomp::cli
