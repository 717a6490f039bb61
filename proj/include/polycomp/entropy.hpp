#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polycomp/alphabet.hpp"
#include "polycomp/codecs.hpp"
#include "polycomp/transforms.hpp"

namespace polycomp {

// ---------------------------------------------------------------------------
// Bits
// ---------------------------------------------------------------------------

struct BitString {
  std::vector<std::uint8_t> bits;  // one 0/1 entry per bit

  std::size_t size() const noexcept { return bits.size(); }
  void push(bool b) { bits.push_back(b ? 1 : 0); }
  // Most-significant bit first.
  void push_bits(std::uint64_t value, unsigned width);
  void append(const BitString& other) { bits.insert(bits.end(), other.bits.begin(), other.bits.end()); }
  std::string to_string() const;
  static BitString from_string(std::string_view zeros_and_ones);
  bool operator==(const BitString&) const = default;
};

// Sequential reader; reads past the end yield zeros.
class BitReader {
 public:
  explicit BitReader(const BitString& bits, std::size_t limit = SIZE_MAX)
      : bits_(bits), limit_(std::min(limit, bits.size())) {}
  bool read();
  std::uint64_t read_bits(unsigned width);
  std::size_t position() const noexcept { return pos_; }
  std::size_t remaining() const noexcept { return pos_ < limit_ ? limit_ - pos_ : 0; }

 private:
  const BitString& bits_;
  std::size_t limit_;
  std::size_t pos_ = 0;
};

// Six bits per character over the first 64 alphabet digits, MSB first,
// zero-padded at the end.
std::string pack_bits(const BitString& bits, const Alphabet& a = Alphabet::canonical());
BitString unpack_bits(std::string_view chars, const Alphabet& a = Alphabet::canonical());

// ---------------------------------------------------------------------------
// Static symbol models
// ---------------------------------------------------------------------------

enum class SymbolKind { Digit, Value };

class SymbolModel {
 public:
  // Escape symbol in value models: marks a value absent from the model.
  static constexpr std::int64_t kEscape = -1;

  SymbolModel() = default;
  SymbolModel(SymbolKind kind, Transform transform,
              std::vector<std::pair<std::int64_t, std::uint64_t>> counts);

  SymbolKind kind() const noexcept { return kind_; }
  Transform transform() const noexcept { return transform_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  const std::vector<std::int64_t>& symbols() const noexcept { return symbols_; }
  const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }
  std::uint64_t total() const noexcept { return total_; }
  // Sum of counts of the symbols before `index` (index == size() gives total).
  std::uint64_t cumulative(std::size_t index) const { return cumulative_[index]; }
  std::optional<std::size_t> index_of(std::int64_t symbol) const;
  double probability(std::int64_t symbol) const;

  // `model <digit|value> <transform>` then `symbol<TAB>count`; the escape
  // symbol is written as `esc`.
  std::string serialize() const;
  static SymbolModel parse(std::string_view text);

  bool operator==(const SymbolModel& o) const {
    return kind_ == o.kind_ && transform_ == o.transform_ && symbols_ == o.symbols_ && counts_ == o.counts_;
  }

 private:
  SymbolKind kind_ = SymbolKind::Digit;
  Transform transform_ = Transform::DeltaMin;
  std::vector<std::int64_t> symbols_;
  std::vector<std::uint64_t> counts_;
  std::vector<std::uint64_t> cumulative_{0};
  std::uint64_t total_ = 0;
};

// Digit counts over fixed-field payloads, +1 on every digit. Totals above
// 2^24 are scaled down (keeping every count >= 1) to stay inside the coder
// precision.
SymbolModel build_digit_model(const std::vector<std::string>& payloads,
                              Transform transform = Transform::DeltaMin);
// Counts over integer values; adds the escape symbol with count 1.
SymbolModel build_value_model(const std::vector<std::vector<std::int64_t>>& value_lists,
                              Transform transform, bool with_escape = true);

// Bits per symbol: sum of -p log2 p.
double shannon_entropy(const SymbolModel& model);
// Ideal code length of a symbol sequence under the model, in bits.
double information_bits(const SymbolModel& model, std::span<const std::int64_t> symbols);

// ---------------------------------------------------------------------------
// Arithmetic coding (static model, 31-bit integer range)
// ---------------------------------------------------------------------------

BitString ae_encode_bits(std::string_view digits, const SymbolModel& model);
std::string ae_decode_bits(const BitString& bits, const SymbolModel& model, std::size_t count);

// Digit count of the fixed-field form of an n-point polygon.
std::size_t fixed_digit_count(std::size_t n_points, Transform t);

// payload = char(n_points) + packed coder bits.
Encoded ae_encode(std::string_view digits, const SymbolModel& model, std::size_t n_points,
                  Transform transform, const Alphabet& a = Alphabet::canonical());
std::string ae_decode(const Encoded& enc, const SymbolModel& model, const Alphabet& a = Alphabet::canonical());

Encoded encode_ae(const DeltaSeq& ds, const SymbolModel& model, const Alphabet& a = Alphabet::canonical());
DeltaSeq decode_ae(const Encoded& enc, const SymbolModel& model, const Alphabet& a = Alphabet::canonical(),
                   const SeqContext& ctx = {});

// ---------------------------------------------------------------------------
// Golomb-Rice
// ---------------------------------------------------------------------------

// M must be a power of two.
BitString golomb_encode(std::span<const std::uint64_t> values, std::uint64_t m);
std::vector<std::uint64_t> golomb_decode(const BitString& bits, std::uint64_t m, std::size_t count);
std::uint64_t golomb_bit_length(std::uint64_t value, std::uint64_t m);
// Exhaustive scan over M in {1, 2, 4, ..., 1024} minimising total bits.
std::uint64_t choose_rice_parameter(std::span<const std::uint64_t> values);

// payload = char(N) + char(log2 M) + packed bits; the head travels as 12 + 14
// raw bits, every delta as a Rice code.
Encoded encode_golomb(const DeltaSeq& ds, std::uint64_t m, const Alphabet& a = Alphabet::canonical());
DeltaSeq decode_golomb(const Encoded& enc, const Alphabet& a = Alphabet::canonical(), const SeqContext& ctx = {});

// ---------------------------------------------------------------------------
// Canonical Huffman
// ---------------------------------------------------------------------------

class HuffmanCode {
 public:
  static constexpr unsigned kRawEscapeBits = 17;

  HuffmanCode() = default;
  explicit HuffmanCode(const SymbolModel& model);

  std::size_t size() const noexcept { return symbols_.size(); }
  // Code length per model symbol, in model order.
  const std::vector<unsigned>& lengths() const noexcept { return lengths_; }
  unsigned length_of(std::int64_t symbol) const;
  std::string code_of(std::int64_t symbol) const;  // as "0101"
  double average_length(const SymbolModel& model) const;
  bool has_escape() const noexcept { return escape_index_.has_value(); }

  // Values absent from the code go out as escape + 17-bit raw value.
  void encode(std::span<const std::int64_t> values, BitString& out) const;
  std::vector<std::int64_t> decode(BitReader& in, std::size_t count) const;

 private:
  std::vector<std::int64_t> symbols_;            // model order
  std::vector<unsigned> lengths_;                // model order
  std::vector<std::uint64_t> codes_;             // model order
  std::vector<std::size_t> canonical_order_;     // indices sorted by (length, symbol)
  std::vector<std::uint64_t> first_code_;        // per length
  std::vector<std::size_t> first_index_;         // per length, into canonical_order_
  std::vector<std::size_t> count_per_length_;
  std::optional<std::size_t> escape_index_;
  std::vector<std::pair<std::int64_t, std::size_t>> lookup_;  // sorted symbol -> index
};

HuffmanCode huffman_build(const SymbolModel& model);

// payload = char(N) + packed bits of every sequence value.
Encoded encode_huffman(const DeltaSeq& ds, const HuffmanCode& code, const Alphabet& a = Alphabet::canonical());
DeltaSeq decode_huffman(const Encoded& enc, const HuffmanCode& code, const Alphabet& a = Alphabet::canonical(),
                        const SeqContext& ctx = {});

// ---------------------------------------------------------------------------
// LZW over comma strings
// ---------------------------------------------------------------------------

// Initial table: '0'..'9' -> 0..9, ',' -> 10. Code i is written with
// ceil(log2(11 + i)) bits.
std::vector<std::uint32_t> lzw_codes(std::string_view text);
BitString lzw_encode_bits(std::string_view text);
std::string lzw_decode_bits(const BitString& bits);

// payload = char(padding bits) + packed bits.
Encoded lzw_encode(std::string_view comma_payload, Transform transform, const Alphabet& a = Alphabet::canonical());
std::string lzw_decode(const Encoded& enc, const Alphabet& a = Alphabet::canonical());

Encoded encode_lzw(const DeltaSeq& ds, const Alphabet& a = Alphabet::canonical());
DeltaSeq decode_lzw(const Encoded& enc, const Alphabet& a = Alphabet::canonical(), const SeqContext& ctx = {});

}  // namespace polycomp
