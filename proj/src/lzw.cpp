#include <bit>
#include <string>
#include <unordered_map>

#include "polycomp/entropy.hpp"
#include "polycomp/error.hpp"

namespace polycomp {
namespace {

constexpr std::uint32_t kInitialSize = 11;

int symbol_code(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c == ',') return 10;
  return -1;
}

char code_symbol(std::uint32_t code) { return code == 10 ? ',' : static_cast<char>('0' + code); }

// Bits for the i-th emitted code: the table then holds kInitialSize + i
// entries counting the one the decoder is about to add.
unsigned code_width(std::size_t i) {
  return static_cast<unsigned>(std::bit_width(kInitialSize + i - 1));
}

}  // namespace

std::vector<std::uint32_t> lzw_codes(std::string_view text) {
  std::unordered_map<std::string, std::uint32_t> table;
  for (std::uint32_t c = 0; c < kInitialSize; ++c) table.emplace(std::string(1, code_symbol(c)), c);
  std::vector<std::uint32_t> codes;
  std::string w;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (symbol_code(text[i]) < 0) {
      throw Error(Errc::InvalidArgument, std::string("character '") + text[i] + "' at position " +
                                             std::to_string(i) + " is outside the LZW alphabet",
                  i);
    }
    std::string wc = w + text[i];
    if (table.count(wc)) {
      w = std::move(wc);
      continue;
    }
    codes.push_back(table.at(w));
    table.emplace(std::move(wc), static_cast<std::uint32_t>(table.size()));
    w = std::string(1, text[i]);
  }
  if (!w.empty()) codes.push_back(table.at(w));
  return codes;
}

BitString lzw_encode_bits(std::string_view text) {
  BitString out;
  const auto codes = lzw_codes(text);
  for (std::size_t i = 0; i < codes.size(); ++i) out.push_bits(codes[i], code_width(i));
  return out;
}

std::string lzw_decode_bits(const BitString& bits) {
  std::vector<std::string> table;
  for (std::uint32_t c = 0; c < kInitialSize; ++c) table.emplace_back(1, code_symbol(c));
  BitReader in(bits);
  std::string out;
  std::string prev;
  for (std::size_t i = 0; in.remaining() > 0; ++i) {
    const unsigned width = code_width(i);
    if (in.remaining() < width) throw Error(Errc::MalformedPayload, "LZW stream ends inside a code");
    const auto code = static_cast<std::size_t>(in.read_bits(width));
    std::string entry;
    if (code < table.size()) {
      entry = table[code];
    } else if (code == table.size() && !prev.empty()) {
      entry = prev + prev[0];
    } else {
      throw Error(Errc::MalformedPayload, "LZW code " + std::to_string(code) + " is not in the table");
    }
    if (!prev.empty()) table.push_back(prev + entry[0]);
    out += entry;
    prev = std::move(entry);
  }
  return out;
}

Encoded lzw_encode(std::string_view comma_payload, Transform transform, const Alphabet& a) {
  const BitString bits = lzw_encode_bits(comma_payload);
  const std::size_t padding = (6 - bits.size() % 6) % 6;
  std::string payload(1, a.char_at(padding));
  payload += pack_bits(bits, a);
  return {CodecId::Lzw, transform, std::move(payload)};
}

std::string lzw_decode(const Encoded& enc, const Alphabet& a) {
  const std::string_view s = enc.payload;
  if (s.empty()) throw Error(Errc::MalformedPayload, "empty LZW payload");
  auto pad = a.index_of(s[0]);
  if (!pad || *pad > 5) throw Error(Errc::MalformedPayload, "invalid padding character", 0);
  BitString bits;
  try {
    bits = unpack_bits(s.substr(1), a);
  } catch (const Error& e) {
    throw Error(e.code(), e.what(), e.position() ? std::optional<std::size_t>(*e.position() + 1) : std::nullopt);
  }
  if (bits.size() < *pad) throw Error(Errc::MalformedPayload, "LZW padding exceeds payload");
  bits.bits.resize(bits.size() - *pad);
  return lzw_decode_bits(bits);
}

Encoded encode_lzw(const DeltaSeq& ds, const Alphabet& a) {
  return lzw_encode(encode_comma(ds).payload, ds.kind, a);
}

DeltaSeq decode_lzw(const Encoded& enc, const Alphabet& a, const SeqContext& ctx) {
  return decode_comma({CodecId::Comma, enc.transform, lzw_decode(enc, a)}, ctx);
}

}  // namespace polycomp
