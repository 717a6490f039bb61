#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "polycomp/alphabet.hpp"
#include "polycomp/bignum.hpp"
#include "polycomp/transforms.hpp"

namespace polycomp {

class RsdDictionary;

enum class CodecId { Comma, Fixed, CommaB, FixedB, Var, VarRsd, Big, Poly, Ae, Golomb, Huffman, Lzw };

inline constexpr std::array<CodecId, 12> kAllCodecs{
    CodecId::Comma, CodecId::Fixed, CodecId::CommaB, CodecId::FixedB,
    CodecId::Var,   CodecId::VarRsd, CodecId::Big,   CodecId::Poly,
    CodecId::Ae,    CodecId::Golomb, CodecId::Huffman, CodecId::Lzw};

// CLI names: comma, fixed, comma70, fixed70, var, var-rsd, big, poly, ae,
// golomb, huffman, lzw.
std::string_view codec_name(CodecId id);
CodecId parse_codec(std::string_view name);

struct Encoded {
  CodecId codec = CodecId::Comma;
  Transform transform = Transform::DeltaMin;
  std::string payload;
  bool operator==(const Encoded&) const = default;
};

// Agreed values a decoder needs that the payload does not carry.
struct SeqContext {
  Origin origin{};
  int precision = 2;
};

// Bignum codec parameters. d = 6 for delta-min and 9 for consecutive deltas.
struct BigParams {
  std::uint32_t d = 6;
  std::uint32_t x_factor = 3500;
  std::uint32_t y_factor = 10000;
  static BigParams defaults_for(Transform t);
};

// Variable-length codec parameters: digit base and the number of quotient
// indicator characters. Defaults: 64/6 for delta-min, 62/8 for consecutive
// deltas. The RSD variant cedes one digit to the '@' indicator.
struct VarParams {
  std::size_t digit_base = 64;
  std::size_t max_quotient = 6;
  static VarParams defaults_for(Transform t);
  static VarParams rsd_defaults_for(Transform t);
};

// --- decimal and higher-base text forms --------------------------------------

Encoded encode_comma(const DeltaSeq& ds);
DeltaSeq decode_comma(const Encoded& enc, const SeqContext& ctx = {});

// Head x in 4 digits, head y in 5, every delta in 3.
Encoded encode_fixed(const DeltaSeq& ds);
DeltaSeq decode_fixed(const Encoded& enc, const SeqContext& ctx = {});

Encoded encode_comma_b(const DeltaSeq& ds, const Alphabet& a = Alphabet::canonical());
DeltaSeq decode_comma_b(const Encoded& enc, const Alphabet& a = Alphabet::canonical(),
                        const SeqContext& ctx = {});

// Head x in 2 bigits, head y in 3, every delta in 2.
Encoded encode_fixed_b(const DeltaSeq& ds, const Alphabet& a = Alphabet::canonical());
DeltaSeq decode_fixed_b(const Encoded& enc, const Alphabet& a = Alphabet::canonical(),
                        const SeqContext& ctx = {});

// --- variable-length ----------------------------------------------------------

// Encodes a flat value list (split head parts first) with the single-bigit /
// indicator / fallback rule.
std::string var_encode_values(const std::vector<std::int64_t>& values, const Alphabet& a,
                              const VarParams& p);
std::vector<std::int64_t> var_decode_values(std::string_view payload, const Alphabet& a,
                                            const VarParams& p);

// Parameters default to VarParams::defaults_for(transform).
Encoded encode_var(const DeltaSeq& ds, const Alphabet& a = Alphabet::canonical());
Encoded encode_var(const DeltaSeq& ds, const Alphabet& a, const VarParams& p);
DeltaSeq decode_var(const Encoded& enc, const Alphabet& a = Alphabet::canonical(),
                    const SeqContext& ctx = {});
DeltaSeq decode_var(const Encoded& enc, const Alphabet& a, const VarParams& p,
                    const SeqContext& ctx = {});

Encoded encode_var_rsd(const DeltaSeq& ds, const RsdDictionary& dict,
                       const Alphabet& a = Alphabet::canonical());
DeltaSeq decode_var_rsd(const Encoded& enc, const RsdDictionary& dict,
                        const Alphabet& a = Alphabet::canonical(), const SeqContext& ctx = {});

// --- bignum -------------------------------------------------------------------

// S = floor(max_delta / d) + 1, XX = d*S + 1.
std::uint32_t big_scale(std::int64_t max_delta, std::uint32_t d);
inline std::uint32_t big_radix(std::uint32_t scale, std::uint32_t d) { return d * scale + 1; }

// Folds every pair (plus one) and the head into a single integer.
BigAccumulator big_accumulate(const DeltaSeq& ds, const BigParams& p);

// Payload = char(S) followed by the accumulator in base B.
Encoded encode_big(const DeltaSeq& ds, const BigParams& p, const Alphabet& a = Alphabet::canonical());
DeltaSeq decode_big(const Encoded& enc, const BigParams& p, const Alphabet& a = Alphabet::canonical(),
                    const SeqContext& ctx = {});

// --- polyalgorithm ------------------------------------------------------------

// Emits the bignum payload unchanged when it is not longer than the RSD
// variable-length payload plus its '0' discriminator.
Encoded encode_poly(const DeltaSeq& ds, const RsdDictionary& dict, const BigParams& p,
                    const Alphabet& a = Alphabet::canonical());
DeltaSeq decode_poly(const Encoded& enc, const RsdDictionary& dict, const BigParams& p,
                     const Alphabet& a = Alphabet::canonical(), const SeqContext& ctx = {});
bool poly_uses_var(const Encoded& enc, const Alphabet& a = Alphabet::canonical());

}  // namespace polycomp
