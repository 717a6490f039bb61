#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <sstream>

#include "polycomp/entropy.hpp"
#include "polycomp/error.hpp"

namespace polycomp {
namespace {

constexpr std::uint64_t kMaxDigitTotal = std::uint64_t{1} << 24;

std::string_view kind_name(SymbolKind k) { return k == SymbolKind::Digit ? "digit" : "value"; }

}  // namespace

SymbolModel::SymbolModel(SymbolKind kind, Transform transform,
                         std::vector<std::pair<std::int64_t, std::uint64_t>> counts)
    : kind_(kind), transform_(transform) {
  std::sort(counts.begin(), counts.end());
  symbols_.reserve(counts.size());
  counts_.reserve(counts.size());
  cumulative_.reserve(counts.size() + 1);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i > 0 && counts[i].first == counts[i - 1].first) {
      throw Error(Errc::InvalidArgument, "duplicate model symbol " + std::to_string(counts[i].first));
    }
    if (counts[i].second == 0) {
      throw Error(Errc::InvalidArgument, "model symbol " + std::to_string(counts[i].first) + " has count 0");
    }
    if (kind == SymbolKind::Digit && (counts[i].first < 0 || counts[i].first > 9)) {
      throw Error(Errc::InvalidArgument, "digit model symbol out of range");
    }
    symbols_.push_back(counts[i].first);
    counts_.push_back(counts[i].second);
    total_ += counts[i].second;
    cumulative_.push_back(total_);
  }
}

std::optional<std::size_t> SymbolModel::index_of(std::int64_t symbol) const {
  auto it = std::lower_bound(symbols_.begin(), symbols_.end(), symbol);
  if (it == symbols_.end() || *it != symbol) return std::nullopt;
  return static_cast<std::size_t>(it - symbols_.begin());
}

double SymbolModel::probability(std::int64_t symbol) const {
  auto i = index_of(symbol);
  if (!i || total_ == 0) return 0.0;
  return static_cast<double>(counts_[*i]) / static_cast<double>(total_);
}

std::string SymbolModel::serialize() const {
  std::string out = "model " + std::string(kind_name(kind_)) + " " + std::string(transform_name(transform_)) + "\n";
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    out += symbols_[i] == kEscape && kind_ == SymbolKind::Value ? std::string("esc") : std::to_string(symbols_[i]);
    out += "\t" + std::to_string(counts_[i]) + "\n";
  }
  return out;
}

SymbolModel SymbolModel::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw Error(Errc::ParseError, "empty model file", 1);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::istringstream header(line);
  std::string tag, kind, transform;
  if (!(header >> tag >> kind >> transform) || tag != "model" || (kind != "digit" && kind != "value")) {
    throw Error(Errc::ParseError, "expected 'model <digit|value> <transform>'", 1);
  }
  const SymbolKind k = kind == "digit" ? SymbolKind::Digit : SymbolKind::Value;
  std::vector<std::pair<std::int64_t, std::uint64_t>> counts;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw Error(Errc::ParseError, "expected 'symbol<TAB>count'", line_no);
    const std::string sym = line.substr(0, tab);
    try {
      std::size_t used = 0;
      const std::int64_t s = sym == "esc" ? kEscape : std::stoll(sym, &used);
      if (sym != "esc" && used != sym.size()) throw std::invalid_argument("trailing");
      const std::uint64_t c = std::stoull(line.substr(tab + 1), &used);
      if (used != line.size() - tab - 1) throw std::invalid_argument("trailing");
      counts.emplace_back(s, c);
    } catch (const std::logic_error&) {
      throw Error(Errc::ParseError, "malformed model line '" + line + "'", line_no);
    }
  }
  return SymbolModel(k, parse_transform(transform), std::move(counts));
}

SymbolModel build_digit_model(const std::vector<std::string>& payloads, Transform transform) {
  std::array<std::uint64_t, 10> counts{};
  for (const auto& p : payloads) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] < '0' || p[i] > '9') {
        throw Error(Errc::InvalidArgument, "digit model input holds a non-digit", i);
      }
      ++counts[static_cast<std::size_t>(p[i] - '0')];
    }
  }
  std::uint64_t total = 10;
  for (auto c : counts) total += c;
  unsigned shift = 0;
  while ((total >> shift) > kMaxDigitTotal) ++shift;
  std::vector<std::pair<std::int64_t, std::uint64_t>> smoothed;
  for (std::size_t d = 0; d < counts.size(); ++d) {
    smoothed.emplace_back(static_cast<std::int64_t>(d), std::max<std::uint64_t>(1, (counts[d] + 1) >> shift));
  }
  return SymbolModel(SymbolKind::Digit, transform, std::move(smoothed));
}

SymbolModel build_value_model(const std::vector<std::vector<std::int64_t>>& value_lists, Transform transform,
                              bool with_escape) {
  std::map<std::int64_t, std::uint64_t> counts;
  for (const auto& list : value_lists) {
    for (auto v : list) {
      if (v < 0) throw Error(Errc::InvalidArgument, "value model input holds a negative value");
      ++counts[v];
    }
  }
  if (with_escape) counts[SymbolModel::kEscape] = 1;
  return SymbolModel(SymbolKind::Value, transform, {counts.begin(), counts.end()});
}

double shannon_entropy(const SymbolModel& model) {
  double h = 0.0;
  const double total = static_cast<double>(model.total());
  for (auto c : model.counts()) {
    const double p = static_cast<double>(c) / total;
    h -= p * std::log2(p);
  }
  return h;
}

double information_bits(const SymbolModel& model, std::span<const std::int64_t> symbols) {
  double bits = 0.0;
  const double total = static_cast<double>(model.total());
  for (auto s : symbols) {
    auto i = model.index_of(s);
    if (!i) {
      if (auto esc = model.index_of(SymbolModel::kEscape); esc && model.kind() == SymbolKind::Value) {
        bits += -std::log2(static_cast<double>(model.counts()[*esc]) / total) + HuffmanCode::kRawEscapeBits;
        continue;
      }
      throw Error(Errc::SymbolNotInModel, "symbol " + std::to_string(s) + " is not in the model");
    }
    bits -= std::log2(static_cast<double>(model.counts()[*i]) / total);
  }
  return bits;
}

}  // namespace polycomp
