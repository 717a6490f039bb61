#include <bit>
#include <limits>
#include <string>

#include "polycomp/entropy.hpp"
#include "polycomp/error.hpp"

namespace polycomp {
namespace {

constexpr unsigned kHeadXBits = 12;
constexpr unsigned kHeadYBits = 14;
constexpr std::uint64_t kMaxRiceM = 1024;
// Unary prefixes longer than this mark a corrupted stream.
constexpr std::uint64_t kMaxQuotient = 1u << 20;

unsigned rice_shift(std::uint64_t m) {
  if (m == 0 || !std::has_single_bit(m)) {
    throw Error(Errc::InvalidArgument, "Rice parameter M=" + std::to_string(m) + " is not a power of two");
  }
  return static_cast<unsigned>(std::countr_zero(m));
}

void encode_one(std::uint64_t v, unsigned k, BitString& out) {
  for (std::uint64_t q = v >> k; q > 0; --q) out.push(true);
  out.push(false);
  out.push_bits(v & ((std::uint64_t{1} << k) - 1), k);
}

std::uint64_t decode_one(BitReader& in, unsigned k) {
  std::uint64_t q = 0;
  while (in.read()) {
    if (++q > kMaxQuotient) throw Error(Errc::MalformedPayload, "Rice prefix runs past the stream");
  }
  return (q << k) | in.read_bits(k);
}

}  // namespace

BitString golomb_encode(std::span<const std::uint64_t> values, std::uint64_t m) {
  const unsigned k = rice_shift(m);
  BitString out;
  for (auto v : values) encode_one(v, k, out);
  return out;
}

std::vector<std::uint64_t> golomb_decode(const BitString& bits, std::uint64_t m, std::size_t count) {
  const unsigned k = rice_shift(m);
  BitReader in(bits);
  std::vector<std::uint64_t> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(decode_one(in, k));
  return out;
}

std::uint64_t golomb_bit_length(std::uint64_t value, std::uint64_t m) {
  return value / m + 1 + rice_shift(m);
}

std::uint64_t choose_rice_parameter(std::span<const std::uint64_t> values) {
  std::uint64_t best_m = 1;
  std::uint64_t best_bits = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t m = 1; m <= kMaxRiceM; m <<= 1) {
    std::uint64_t bits = 0;
    for (auto v : values) bits += golomb_bit_length(v, m);
    if (bits < best_bits) {
      best_bits = bits;
      best_m = m;
    }
  }
  return best_m;
}

Encoded encode_golomb(const DeltaSeq& ds, std::uint64_t m, const Alphabet& a) {
  validate(ds);
  const unsigned k = rice_shift(m);
  const std::size_t n = ds.point_count();
  if (n >= a.base()) {
    throw Error(Errc::ValueOutOfRange, "point count " + std::to_string(n) + " does not fit one character");
  }
  if (ds.head_x >= (1 << kHeadXBits) || ds.head_y >= (1 << kHeadYBits)) {
    throw Error(Errc::FieldOverflow, "head does not fit the 12/14-bit raw fields");
  }
  BitString bits;
  bits.push_bits(static_cast<std::uint64_t>(ds.head_x), kHeadXBits);
  bits.push_bits(static_cast<std::uint64_t>(ds.head_y), kHeadYBits);
  for (const auto& p : ds.deltas) {
    encode_one(static_cast<std::uint64_t>(p.dx), k, bits);
    encode_one(static_cast<std::uint64_t>(p.dy), k, bits);
  }
  std::string payload{a.char_at(n), a.char_at(k)};
  payload += pack_bits(bits, a);
  return {CodecId::Golomb, ds.kind, std::move(payload)};
}

DeltaSeq decode_golomb(const Encoded& enc, const Alphabet& a, const SeqContext& ctx) {
  const std::string_view s = enc.payload;
  if (s.size() < 2) throw Error(Errc::MalformedPayload, "Golomb payload too short");
  auto n = a.index_of(s[0]);
  auto k = a.index_of(s[1]);
  if (!n || *n < 4) throw Error(Errc::MalformedPayload, "invalid point-count character", 0);
  if (!k || *k > 10) throw Error(Errc::MalformedPayload, "invalid Rice parameter character", 1);
  BitString bits;
  try {
    bits = unpack_bits(s.substr(2), a);
  } catch (const Error& e) {
    throw Error(e.code(), e.what(), e.position() ? std::optional<std::size_t>(*e.position() + 2) : std::nullopt);
  }
  BitReader in(bits);
  DeltaSeq ds;
  ds.kind = enc.transform;
  ds.origin = ctx.origin;
  ds.precision = ctx.precision;
  ds.head_x = static_cast<std::int64_t>(in.read_bits(kHeadXBits));
  ds.head_y = static_cast<std::int64_t>(in.read_bits(kHeadYBits));
  const std::size_t pairs = *n - (enc.transform == Transform::DeltaMin ? 1 : 2);
  for (std::size_t i = 0; i < pairs; ++i) {
    const auto dx = decode_one(in, static_cast<unsigned>(*k));
    const auto dy = decode_one(in, static_cast<unsigned>(*k));
    ds.deltas.push_back({static_cast<std::int64_t>(dx), static_cast<std::int64_t>(dy)});
  }
  if (in.position() > bits.size()) throw Error(Errc::MalformedPayload, "Golomb payload truncated");
  return ds;
}

}  // namespace polycomp
