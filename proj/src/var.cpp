#include <string>

#include "polycomp/codecs.hpp"
#include "polycomp/error.hpp"
#include "polycomp/rsd.hpp"

namespace polycomp {
namespace {

// Digit alphabet for the given parameters; rejects overlaps between digits
// and the indicators the codec will emit.
Alphabet digit_alphabet(const Alphabet& a, const VarParams& p) {
  if (p.max_quotient < 1 || p.max_quotient > 8) {
    throw Error(Errc::InvalidArgument, "max_quotient must be in [1,8]");
  }
  Alphabet digits = a.prefix(p.digit_base);
  for (std::size_t q = 0; q < p.max_quotient; ++q) {
    if (digits.contains(a.reserved().quotient[q])) {
      throw Error(Errc::InvalidArgument, std::string("quotient indicator '") + a.reserved().quotient[q] +
                                             "' is also a base-" + std::to_string(p.digit_base) + " digit");
    }
  }
  return digits;
}

int quotient_of(char c, const ReservedChars& r, std::size_t max_quotient) {
  for (std::size_t q = 0; q < max_quotient; ++q) {
    if (r.quotient[q] == c) return static_cast<int>(q + 1);
  }
  return 0;
}

std::vector<std::int64_t> split_values(const DeltaSeq& ds, std::int64_t base) {
  validate(ds);
  std::vector<std::int64_t> v{ds.head_x / base, ds.head_x % base, ds.head_y / base, ds.head_y % base};
  v.reserve(4 + 2 * ds.deltas.size());
  for (const auto& p : ds.deltas) {
    v.push_back(p.dx);
    v.push_back(p.dy);
  }
  return v;
}

DeltaSeq join_values(Transform kind, const std::vector<std::int64_t>& v, std::int64_t base,
                     const SeqContext& ctx) {
  if (v.size() < 4 || v.size() % 2 != 0) {
    throw Error(Errc::MalformedPayload, "variable-length payload holds " + std::to_string(v.size()) +
                                            " values, expected 4 head parts plus whole pairs");
  }
  if (v[1] >= base || v[3] >= base) {
    throw Error(Errc::MalformedPayload, "head remainder part exceeds the digit base");
  }
  std::vector<std::int64_t> flat{v[0] * base + v[1], v[2] * base + v[3]};
  flat.insert(flat.end(), v.begin() + 4, v.end());
  return delta_seq_from_values(kind, flat, ctx.origin, ctx.precision);
}

}  // namespace

VarParams VarParams::defaults_for(Transform t) {
  return t == Transform::DeltaMin ? VarParams{64, 6} : VarParams{62, 8};
}

VarParams VarParams::rsd_defaults_for(Transform t) {
  auto p = defaults_for(t);
  --p.digit_base;
  return p;
}

std::string var_encode_values(const std::vector<std::int64_t>& values, const Alphabet& a,
                              const VarParams& p) {
  const Alphabet digits = digit_alphabet(a, p);
  const auto base = static_cast<std::int64_t>(p.digit_base);
  const auto& r = a.reserved();
  std::string out;
  out.reserve(values.size() * 2);
  for (auto v : values) {
    if (v < 0) throw Error(Errc::InvalidDeltaSeq, "negative value");
    const std::int64_t q = v / base;
    const std::int64_t rem = v % base;
    if (q == 0) {
      out.push_back(digits.chars()[rem]);
    } else if (q <= static_cast<std::int64_t>(p.max_quotient)) {
      out.push_back(r.quotient[q - 1]);
      out.push_back(digits.chars()[rem]);
    } else if (q <= base) {
      out.push_back(r.fallback);
      out.push_back(digits.chars()[q - 1]);
      out.push_back(digits.chars()[rem]);
    } else {
      throw Error(Errc::ValueOutOfRange, std::to_string(v) + " exceeds the variable-length range " +
                                             std::to_string(base * (base + 1) - 1));
    }
  }
  return out;
}

std::vector<std::int64_t> var_decode_values(std::string_view payload, const Alphabet& a,
                                            const VarParams& p) {
  const Alphabet digits = digit_alphabet(a, p);
  const auto base = static_cast<std::int64_t>(p.digit_base);
  const auto& r = a.reserved();
  auto digit_at = [&](std::size_t i) -> std::int64_t {
    if (i >= payload.size()) {
      throw Error(Errc::MalformedPayload, "payload ends inside a value at position " + std::to_string(i), i);
    }
    auto d = digits.index_of(payload[i]);
    if (!d) {
      throw Error(Errc::UnknownCharacter, std::string("character '") + payload[i] + "' at position " +
                                              std::to_string(i) + " is not a base-" +
                                              std::to_string(base) + " digit",
                  i);
    }
    return static_cast<std::int64_t>(*d);
  };

  std::vector<std::int64_t> values;
  std::size_t i = 0;
  while (i < payload.size()) {
    const char c = payload[i];
    if (c == r.fallback) {
      const std::int64_t q = digit_at(i + 1) + 1;
      values.push_back(q * base + digit_at(i + 2));
      i += 3;
    } else if (int q = quotient_of(c, r, p.max_quotient); q > 0) {
      values.push_back(q * base + digit_at(i + 1));
      i += 2;
    } else {
      values.push_back(digit_at(i));
      i += 1;
    }
  }
  return values;
}

Encoded encode_var(const DeltaSeq& ds, const Alphabet& a) {
  return encode_var(ds, a, VarParams::defaults_for(ds.kind));
}

Encoded encode_var(const DeltaSeq& ds, const Alphabet& a, const VarParams& p) {
  auto values = split_values(ds, static_cast<std::int64_t>(p.digit_base));
  return {CodecId::Var, ds.kind, var_encode_values(values, a, p)};
}

DeltaSeq decode_var(const Encoded& enc, const Alphabet& a, const SeqContext& ctx) {
  return decode_var(enc, a, VarParams::defaults_for(enc.transform), ctx);
}

DeltaSeq decode_var(const Encoded& enc, const Alphabet& a, const VarParams& p, const SeqContext& ctx) {
  auto values = var_decode_values(enc.payload, a, p);
  return join_values(enc.transform, values, static_cast<std::int64_t>(p.digit_base), ctx);
}

namespace {

VarParams rsd_params(const RsdDictionary& dict, Transform t) {
  if (dict.transform() != t) {
    throw Error(Errc::InvalidArgument, "RSD dictionary was built for transform " +
                                           std::string(transform_name(dict.transform())));
  }
  VarParams p = VarParams::rsd_defaults_for(t);
  if (dict.digit_base() != p.digit_base) {
    throw Error(Errc::InvalidArgument, "RSD dictionary base " + std::to_string(dict.digit_base()) +
                                           " does not match " + std::to_string(p.digit_base));
  }
  return p;
}

}  // namespace

Encoded encode_var_rsd(const DeltaSeq& ds, const RsdDictionary& dict, const Alphabet& a) {
  const VarParams p = rsd_params(dict, ds.kind);
  auto values = split_values(ds, static_cast<std::int64_t>(p.digit_base));
  return {CodecId::VarRsd, ds.kind, dict.apply(var_encode_values(values, a, p))};
}

DeltaSeq decode_var_rsd(const Encoded& enc, const RsdDictionary& dict, const Alphabet& a,
                        const SeqContext& ctx) {
  const VarParams p = rsd_params(dict, enc.transform);
  auto values = var_decode_values(dict.strip(enc.payload), a, p);
  return join_values(enc.transform, values, static_cast<std::int64_t>(p.digit_base), ctx);
}

}  // namespace polycomp
