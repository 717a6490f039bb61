#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace polycomp {

// Characters with a fixed meaning inside payloads and frames.
struct ReservedChars {
  char sentinel = '#';
  char rsd = '@';
  char fallback = '-';
  // Quotient indicators for q = 1..8 in the variable-length codec.
  std::array<char, 8> quotient{'+', '*', '/', '(', ')', '%', '&', '!'};

  bool operator==(const ReservedChars&) const = default;
};

// Ordered digit set for base-B conversion, B in [2, 70].
//
// The sentinel, RSD indicator and fallback indicator may never be digits.
// Quotient indicators may overlap the full 70-character set; a codec that
// uses them works over a prefix of the alphabet that excludes them (see
// Alphabet::prefix and the variable-length codec).
class Alphabet {
 public:
  static constexpr std::size_t kMaxBase = 70;

  explicit Alphabet(std::string chars, ReservedChars reserved = {});

  // 0-9, A-Z, a-z, then ! $ % & ( ) * +
  static const Alphabet& canonical();

  // Parses the override file format: the first line holds the digit
  // characters, the following lines are `reserved <role>=<char>` with role in
  // {sentinel, rsd, fallback, q1..q8}.
  static Alphabet parse(std::string_view text);
  std::string serialize() const;

  // The first `base` digits, same reserved roles.
  Alphabet prefix(std::size_t base) const;

  std::size_t base() const noexcept { return chars_.size(); }
  char char_at(std::size_t index) const;
  std::optional<std::size_t> index_of(char c) const noexcept {
    auto v = index_[static_cast<unsigned char>(c)];
    return v < 0 ? std::nullopt : std::optional<std::size_t>(static_cast<std::size_t>(v));
  }
  bool contains(char c) const noexcept { return index_[static_cast<unsigned char>(c)] >= 0; }
  const std::string& chars() const noexcept { return chars_; }
  const ReservedChars& reserved() const noexcept { return reserved_; }

  bool operator==(const Alphabet& o) const { return chars_ == o.chars_ && reserved_ == o.reserved_; }

 private:
  std::string chars_;
  ReservedChars reserved_;
  std::array<std::int16_t, 256> index_{};
};

// Minimal big-endian base-B representation; "0" for zero.
std::string int_to_base(std::uint64_t n, const Alphabet& a);
// Left-padded with the zero digit to exactly `width`; FieldOverflow if n does
// not fit.
std::string int_to_base_fixed(std::uint64_t n, std::size_t width, const Alphabet& a);
// UnknownCharacter (with position) on a non-digit; ValueOutOfRange on overflow.
std::uint64_t base_to_int(std::string_view s, const Alphabet& a);

}  // namespace polycomp
