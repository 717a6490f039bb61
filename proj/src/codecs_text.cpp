#include <string>

#include "polycomp/codecs.hpp"
#include "polycomp/error.hpp"

namespace polycomp {
namespace {

DeltaSeq finish(Transform kind, const std::vector<std::int64_t>& values, const SeqContext& ctx) {
  return delta_seq_from_values(kind, values, ctx.origin, ctx.precision);
}

std::string zero_pad(std::int64_t v, std::size_t width) {
  std::string digits = std::to_string(v);
  if (digits.size() > width) {
    throw Error(Errc::FieldOverflow,
                std::to_string(v) + " does not fit in " + std::to_string(width) + " decimal digits");
  }
  return std::string(width - digits.size(), '0') + digits;
}

std::int64_t parse_decimal(std::string_view s, std::size_t offset) {
  if (s.empty()) throw Error(Errc::MalformedPayload, "empty field at position " + std::to_string(offset), offset);
  if (s.size() > 15) throw Error(Errc::ValueOutOfRange, "decimal field too long", offset);
  std::int64_t v = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw Error(Errc::UnknownCharacter,
                  std::string("character '") + s[i] + "' at position " + std::to_string(offset + i) +
                      " is not a decimal digit",
                  offset + i);
    }
    v = v * 10 + (s[i] - '0');
  }
  return v;
}

template <typename Fn>
std::vector<std::int64_t> split_commas(std::string_view payload, Fn parse_field) {
  std::vector<std::int64_t> values;
  std::size_t start = 0;
  while (true) {
    auto comma = payload.find(',', start);
    auto field = payload.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    values.push_back(parse_field(field, start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

std::int64_t parse_bigits(std::string_view s, std::size_t offset, const Alphabet& a) {
  if (s.empty()) throw Error(Errc::MalformedPayload, "empty field at position " + std::to_string(offset), offset);
  try {
    return static_cast<std::int64_t>(base_to_int(s, a));
  } catch (const Error& e) {
    if (e.code() == Errc::UnknownCharacter && e.position()) {
      throw Error(Errc::UnknownCharacter,
                  std::string("character '") + s[*e.position()] + "' at position " +
                      std::to_string(offset + *e.position()) + " is not a base-" +
                      std::to_string(a.base()) + " digit",
                  offset + *e.position());
    }
    throw;
  }
}

void check_fixed_length(std::string_view payload, std::size_t head, std::size_t field) {
  if (payload.size() < head || (payload.size() - head) % (2 * field) != 0) {
    throw Error(Errc::MalformedPayload, "fixed-field payload length " + std::to_string(payload.size()) +
                                            " is not head + whole pairs");
  }
}

}  // namespace

std::string_view codec_name(CodecId id) {
  switch (id) {
    case CodecId::Comma: return "comma";
    case CodecId::Fixed: return "fixed";
    case CodecId::CommaB: return "comma70";
    case CodecId::FixedB: return "fixed70";
    case CodecId::Var: return "var";
    case CodecId::VarRsd: return "var-rsd";
    case CodecId::Big: return "big";
    case CodecId::Poly: return "poly";
    case CodecId::Ae: return "ae";
    case CodecId::Golomb: return "golomb";
    case CodecId::Huffman: return "huffman";
    case CodecId::Lzw: return "lzw";
  }
  return "?";
}

CodecId parse_codec(std::string_view name) {
  for (CodecId id : kAllCodecs) {
    if (codec_name(id) == name) return id;
  }
  throw Error(Errc::InvalidArgument, "unknown codec '" + std::string(name) + "'");
}

Encoded encode_comma(const DeltaSeq& ds) {
  validate(ds);
  std::string out;
  for (auto v : ds.values()) {
    if (!out.empty()) out.push_back(',');
    out += std::to_string(v);
  }
  return {CodecId::Comma, ds.kind, std::move(out)};
}

DeltaSeq decode_comma(const Encoded& enc, const SeqContext& ctx) {
  return finish(enc.transform, split_commas(enc.payload, parse_decimal), ctx);
}

Encoded encode_fixed(const DeltaSeq& ds) {
  validate(ds);
  std::string out = zero_pad(ds.head_x, 4) + zero_pad(ds.head_y, 5);
  for (const auto& p : ds.deltas) {
    out += zero_pad(p.dx, 3);
    out += zero_pad(p.dy, 3);
  }
  return {CodecId::Fixed, ds.kind, std::move(out)};
}

DeltaSeq decode_fixed(const Encoded& enc, const SeqContext& ctx) {
  std::string_view s = enc.payload;
  check_fixed_length(s, 9, 3);
  std::vector<std::int64_t> values{parse_decimal(s.substr(0, 4), 0), parse_decimal(s.substr(4, 5), 4)};
  for (std::size_t i = 9; i < s.size(); i += 3) values.push_back(parse_decimal(s.substr(i, 3), i));
  return finish(enc.transform, values, ctx);
}

Encoded encode_comma_b(const DeltaSeq& ds, const Alphabet& a) {
  validate(ds);
  std::string out;
  for (auto v : ds.values()) {
    if (!out.empty()) out.push_back(',');
    out += int_to_base(static_cast<std::uint64_t>(v), a);
  }
  return {CodecId::CommaB, ds.kind, std::move(out)};
}

DeltaSeq decode_comma_b(const Encoded& enc, const Alphabet& a, const SeqContext& ctx) {
  auto values = split_commas(enc.payload, [&](std::string_view f, std::size_t off) {
    return parse_bigits(f, off, a);
  });
  return finish(enc.transform, values, ctx);
}

Encoded encode_fixed_b(const DeltaSeq& ds, const Alphabet& a) {
  validate(ds);
  auto field = [&](std::int64_t v, std::size_t w) {
    return int_to_base_fixed(static_cast<std::uint64_t>(v), w, a);
  };
  std::string out = field(ds.head_x, 2) + field(ds.head_y, 3);
  for (const auto& p : ds.deltas) {
    out += field(p.dx, 2);
    out += field(p.dy, 2);
  }
  return {CodecId::FixedB, ds.kind, std::move(out)};
}

DeltaSeq decode_fixed_b(const Encoded& enc, const Alphabet& a, const SeqContext& ctx) {
  std::string_view s = enc.payload;
  check_fixed_length(s, 5, 2);
  std::vector<std::int64_t> values{parse_bigits(s.substr(0, 2), 0, a), parse_bigits(s.substr(2, 3), 2, a)};
  for (std::size_t i = 5; i < s.size(); i += 2) values.push_back(parse_bigits(s.substr(i, 2), i, a));
  return finish(enc.transform, values, ctx);
}

}  // namespace polycomp
