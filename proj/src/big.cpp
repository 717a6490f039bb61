#include <algorithm>
#include <string>

#include "polycomp/codecs.hpp"
#include "polycomp/error.hpp"

namespace polycomp {
namespace {

void check_params(const BigParams& p) {
  if (p.d < 1 || p.x_factor < 2 || p.y_factor < 2) {
    throw Error(Errc::InvalidArgument, "bignum parameters need d >= 1 and factors >= 2");
  }
}

std::uint32_t squared_radix(std::uint32_t xx) {
  if (xx >= 65536) throw Error(Errc::SOverflow, "pair radix " + std::to_string(xx) + " too large");
  return xx * xx;
}

}  // namespace

BigParams BigParams::defaults_for(Transform t) {
  return t == Transform::DeltaMin ? BigParams{6, 3500, 10000} : BigParams{9, 3500, 10000};
}

std::uint32_t big_scale(std::int64_t max_delta, std::uint32_t d) {
  if (max_delta < 0) throw Error(Errc::InvalidDeltaSeq, "negative delta");
  if (d == 0) throw Error(Errc::InvalidArgument, "d must be positive");
  const std::int64_t s = max_delta / d + 1;
  if (s > 0xFFFF) throw Error(Errc::SOverflow, "scale " + std::to_string(s) + " too large");
  return static_cast<std::uint32_t>(s);
}

BigAccumulator big_accumulate(const DeltaSeq& ds, const BigParams& p) {
  validate(ds);
  check_params(p);
  if (ds.head_x >= p.x_factor || ds.head_y >= p.y_factor) {
    throw Error(Errc::HeadOverflow, "head (" + std::to_string(ds.head_x) + "," + std::to_string(ds.head_y) +
                                        ") does not fit factors (" + std::to_string(p.x_factor) + "," +
                                        std::to_string(p.y_factor) + ")");
  }
  const std::uint32_t xx = big_radix(big_scale(ds.max_delta(), p.d), p.d);
  const std::uint32_t xx2 = squared_radix(xx);
  BigAccumulator acc;
  for (const auto& pair : ds.deltas) {
    const auto term = static_cast<std::uint32_t>((pair.dx + 1) * xx + (pair.dy + 1));
    acc.mul_add(xx2, term);
  }
  acc.mul_add(p.x_factor, static_cast<std::uint32_t>(ds.head_x));
  acc.mul_add(p.y_factor, static_cast<std::uint32_t>(ds.head_y));
  return acc;
}

Encoded encode_big(const DeltaSeq& ds, const BigParams& p, const Alphabet& a) {
  validate(ds);
  const std::uint32_t s = big_scale(ds.max_delta(), p.d);
  if (s >= a.base()) {
    throw Error(Errc::SOverflow, "scale character S=" + std::to_string(s) + " needs base > " +
                                     std::to_string(a.base()));
  }
  std::string payload(1, a.char_at(s));
  payload += bignum_to_base(big_accumulate(ds, p), a);
  return {CodecId::Big, ds.kind, std::move(payload)};
}

DeltaSeq decode_big(const Encoded& enc, const BigParams& p, const Alphabet& a, const SeqContext& ctx) {
  check_params(p);
  const std::string_view s = enc.payload;
  if (s.size() < 2) throw Error(Errc::MalformedPayload, "bignum payload too short");
  auto scale = a.index_of(s[0]);
  if (!scale) {
    throw Error(Errc::UnknownCharacter, std::string("character '") + s[0] + "' at position 0 is not a scale digit", 0);
  }
  if (*scale == 0) throw Error(Errc::MalformedPayload, "scale character is zero", 0);
  const std::uint32_t xx = big_radix(static_cast<std::uint32_t>(*scale), p.d);
  const std::uint32_t xx2 = squared_radix(xx);

  BigAccumulator acc;
  try {
    acc = base_to_bignum(s.substr(1), a);
  } catch (const Error& e) {
    if (e.code() == Errc::UnknownCharacter && e.position()) {
      throw Error(Errc::UnknownCharacter, std::string("character '") + s[*e.position() + 1] +
                                              "' at position " + std::to_string(*e.position() + 1) +
                                              " is not a base-" + std::to_string(a.base()) + " digit",
                  *e.position() + 1);
    }
    throw;
  }

  DeltaSeq ds;
  ds.kind = enc.transform;
  ds.origin = ctx.origin;
  ds.precision = ctx.precision;
  ds.head_y = acc.divmod(p.y_factor);
  ds.head_x = acc.divmod(p.x_factor);
  while (!acc.is_zero()) {
    const std::uint32_t term = acc.divmod(xx2);
    const std::uint32_t hi = term / xx;
    const std::uint32_t lo = term % xx;
    if (hi == 0 || lo == 0) {
      throw Error(Errc::MalformedPayload, "bignum payload decodes to an invalid pair");
    }
    ds.deltas.push_back({static_cast<std::int64_t>(hi) - 1, static_cast<std::int64_t>(lo) - 1});
  }
  std::reverse(ds.deltas.begin(), ds.deltas.end());
  return ds;
}

}  // namespace polycomp
