#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "polycomp/alphabet.hpp"
#include "polycomp/transforms.hpp"

namespace polycomp {

enum class RsdMode { FixedField, SlidingWindow };

std::string_view rsd_mode_name(RsdMode m);  // "fixed" / "sliding"
RsdMode parse_rsd_mode(std::string_view name);

struct RsdEntry {
  std::string key;  // three characters
  char code = '0';
  std::uint64_t count = 0;
  bool operator==(const RsdEntry&) const = default;
};

// Corpus-level table of frequent three-character substrings of
// variable-length payloads. Entry i is replaced by '@' + alphabet[i].
class RsdDictionary {
 public:
  static constexpr std::size_t kKeyLength = 3;
  static constexpr std::size_t kMaxEntries = 70;

  RsdDictionary() = default;
  RsdDictionary(RsdMode mode, Transform transform, std::size_t digit_base,
                std::vector<RsdEntry> entries, const Alphabet& a = Alphabet::canonical());

  // Counts substrings (disjoint chunks or every offset), keeps the `capacity`
  // most frequent, ties broken by key. Keys containing a reserved character
  // are never counted.
  static RsdDictionary build(const std::vector<std::string>& payloads, RsdMode mode,
                             Transform transform, std::size_t digit_base,
                             std::size_t capacity = kMaxEntries,
                             const Alphabet& a = Alphabet::canonical());

  std::string apply(std::string_view payload) const;
  std::string strip(std::string_view payload) const;

  // File form: `rsd <mode> <transform> <base> <entry-count> <hash>` then one
  // `key<TAB>code` line per entry. The hash is optional when parsing and
  // checked when present.
  std::string serialize() const;
  static RsdDictionary parse(std::string_view text, const Alphabet& a = Alphabet::canonical());
  // FNV-1a over the entry keys and codes.
  std::uint64_t fingerprint() const;

  RsdMode mode() const noexcept { return mode_; }
  Transform transform() const noexcept { return transform_; }
  std::size_t digit_base() const noexcept { return digit_base_; }
  const std::vector<RsdEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  char indicator() const noexcept { return indicator_; }

  // Counts are corpus statistics and do not take part in equality.
  bool operator==(const RsdDictionary& o) const;

 private:
  void index();

  RsdMode mode_ = RsdMode::SlidingWindow;
  Transform transform_ = Transform::DeltaMin;
  std::size_t digit_base_ = 63;
  std::vector<RsdEntry> entries_;
  char indicator_ = '@';
  std::array<char, 3> forbidden_{'#', '@', '-'};
  std::unordered_map<std::string, char> by_key_;
  std::array<std::int16_t, 256> by_code_{};
};

inline std::string apply_rsd(std::string_view payload, const RsdDictionary& d) { return d.apply(payload); }
inline std::string strip_rsd(std::string_view payload, const RsdDictionary& d) { return d.strip(payload); }

}  // namespace polycomp
