#include "polycomp/rsd.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <map>
#include <sstream>

#include "polycomp/error.hpp"

namespace polycomp {
namespace {

bool has_any(std::string_view key, const std::array<char, 3>& chars) {
  return std::any_of(key.begin(), key.end(), [&](char c) {
    return std::find(chars.begin(), chars.end(), c) != chars.end();
  });
}

std::array<char, 3> forbidden_of(const Alphabet& a) {
  return {a.reserved().sentinel, a.reserved().rsd, a.reserved().fallback};
}

}  // namespace

std::string_view rsd_mode_name(RsdMode m) {
  return m == RsdMode::FixedField ? "fixed" : "sliding";
}

RsdMode parse_rsd_mode(std::string_view name) {
  if (name == "fixed") return RsdMode::FixedField;
  if (name == "sliding") return RsdMode::SlidingWindow;
  throw Error(Errc::InvalidArgument, "unknown RSD mode '" + std::string(name) + "'");
}

RsdDictionary::RsdDictionary(RsdMode mode, Transform transform, std::size_t digit_base,
                             std::vector<RsdEntry> entries, const Alphabet& a)
    : mode_(mode),
      transform_(transform),
      digit_base_(digit_base),
      entries_(std::move(entries)),
      indicator_(a.reserved().rsd),
      forbidden_(forbidden_of(a)) {
  if (entries_.size() > kMaxEntries || entries_.size() > a.base()) {
    throw Error(Errc::InvalidArgument, "RSD dictionary holds at most " +
                                           std::to_string(std::min(kMaxEntries, a.base())) + " entries");
  }
  index();
}

void RsdDictionary::index() {
  by_key_.clear();
  by_code_.fill(-1);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (e.key.size() != kKeyLength) throw Error(Errc::InvalidArgument, "RSD key '" + e.key + "' is not 3 characters");
    if (has_any(e.key, forbidden_) || std::find(forbidden_.begin(), forbidden_.end(), e.code) != forbidden_.end()) {
      throw Error(Errc::InvalidArgument, "RSD entry '" + e.key + "' uses a reserved character");
    }
    if (!by_key_.emplace(e.key, e.code).second) throw Error(Errc::InvalidArgument, "duplicate RSD key '" + e.key + "'");
    auto& slot = by_code_[static_cast<unsigned char>(e.code)];
    if (slot >= 0) throw Error(Errc::InvalidArgument, std::string("duplicate RSD code '") + e.code + "'");
    slot = static_cast<std::int16_t>(i);
  }
}

bool RsdDictionary::operator==(const RsdDictionary& o) const {
  if (mode_ != o.mode_ || transform_ != o.transform_ || digit_base_ != o.digit_base_ ||
      entries_.size() != o.entries_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].key != o.entries_[i].key || entries_[i].code != o.entries_[i].code) return false;
  }
  return true;
}

RsdDictionary RsdDictionary::build(const std::vector<std::string>& payloads, RsdMode mode, Transform transform,
                                   std::size_t digit_base, std::size_t capacity, const Alphabet& a) {
  if (capacity == 0 || capacity > kMaxEntries) {
    throw Error(Errc::InvalidArgument, "dictionary capacity must be in [1, " + std::to_string(kMaxEntries) + "]");
  }
  capacity = std::min(capacity, a.base());
  const auto forbidden = forbidden_of(a);
  std::map<std::string, std::uint64_t, std::less<>> counts;
  const std::size_t step = mode == RsdMode::FixedField ? kKeyLength : 1;
  for (const auto& s : payloads) {
    for (std::size_t i = 0; i + kKeyLength <= s.size(); i += step) {
      std::string_view key(s.data() + i, kKeyLength);
      if (has_any(key, forbidden)) continue;
      auto it = counts.find(key);
      if (it == counts.end()) {
        counts.emplace(std::string(key), 1);
      } else {
        ++it->second;
      }
    }
  }
  std::vector<std::pair<std::string, std::uint64_t>> ranked(counts.begin(), counts.end());
  // std::map iteration is already key-ordered, so a stable sort on count
  // leaves ties in lexicographic order.
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& l, const auto& r) { return l.second > r.second; });
  if (ranked.size() > capacity) ranked.resize(capacity);

  std::vector<RsdEntry> entries;
  entries.reserve(ranked.size());
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    entries.push_back({ranked[i].first, a.char_at(i), ranked[i].second});
  }
  return RsdDictionary(mode, transform, digit_base, std::move(entries), a);
}

std::string RsdDictionary::apply(std::string_view payload) const {
  if (payload.find(indicator_) != std::string_view::npos) {
    throw Error(Errc::InvalidArgument, std::string("payload already contains the RSD indicator '") + indicator_ + "'");
  }
  std::string out;
  out.reserve(payload.size());
  std::size_t i = 0;
  while (i < payload.size()) {
    if (i + kKeyLength <= payload.size() && !by_key_.empty()) {
      auto it = by_key_.find(std::string(payload.substr(i, kKeyLength)));
      if (it != by_key_.end()) {
        out.push_back(indicator_);
        out.push_back(it->second);
        i += kKeyLength;
        continue;
      }
    }
    out.push_back(payload[i++]);
  }
  return out;
}

std::string RsdDictionary::strip(std::string_view payload) const {
  std::string out;
  out.reserve(payload.size() + payload.size() / 2);
  for (std::size_t i = 0; i < payload.size(); ++i) {
    if (payload[i] != indicator_) {
      out.push_back(payload[i]);
      continue;
    }
    if (i + 1 >= payload.size()) {
      throw Error(Errc::UnknownCode, "RSD indicator at position " + std::to_string(i) + " has no code", i);
    }
    const auto slot = by_code_[static_cast<unsigned char>(payload[i + 1])];
    if (slot < 0) {
      throw Error(Errc::UnknownCode, std::string("character '") + payload[i + 1] + "' at position " +
                                         std::to_string(i + 1) + " is not an RSD code",
                  i + 1);
    }
    out += entries_[static_cast<std::size_t>(slot)].key;
    ++i;
  }
  return out;
}

std::uint64_t RsdDictionary::fingerprint() const {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&](char c) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  };
  for (const auto& e : entries_) {
    for (char c : e.key) mix(c);
    mix('\t');
    mix(e.code);
    mix('\n');
  }
  return h;
}

std::string RsdDictionary::serialize() const {
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016" PRIx64, fingerprint());
  std::string out = "rsd " + std::string(rsd_mode_name(mode_)) + " " + std::string(transform_name(transform_)) +
                    " " + std::to_string(digit_base_) + " " + std::to_string(entries_.size()) + " " + hash + "\n";
  for (const auto& e : entries_) {
    out += e.key;
    out.push_back('\t');
    out.push_back(e.code);
    out.push_back('\n');
  }
  return out;
}

RsdDictionary RsdDictionary::parse(std::string_view text, const Alphabet& a) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw Error(Errc::ParseError, "empty dictionary file", 1);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::istringstream header(line);
  std::string tag, mode, transform, hash;
  std::size_t base = 0, count = 0;
  if (!(header >> tag >> mode >> transform >> base >> count) || tag != "rsd") {
    throw Error(Errc::ParseError, "expected 'rsd <mode> <transform> <base> <entry-count>'", 1);
  }
  header >> hash;

  std::vector<RsdEntry> entries;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.size() != RsdDictionary::kKeyLength + 2 || line[RsdDictionary::kKeyLength] != '\t') {
      throw Error(Errc::ParseError, "expected 'key<TAB>code'", line_no);
    }
    entries.push_back({line.substr(0, RsdDictionary::kKeyLength), line.back(), 0});
  }
  if (entries.size() != count) {
    throw Error(Errc::ParseError, "header announces " + std::to_string(count) + " entries, found " +
                                      std::to_string(entries.size()));
  }
  RsdDictionary dict(parse_rsd_mode(mode), parse_transform(transform), base, std::move(entries), a);
  if (!hash.empty()) {
    char expected[17];
    std::snprintf(expected, sizeof expected, "%016" PRIx64, dict.fingerprint());
    if (hash != expected) {
      throw Error(Errc::ParseError, "dictionary hash " + hash + " does not match contents (" + expected + ")", 1);
    }
  }
  return dict;
}

}  // namespace polycomp
