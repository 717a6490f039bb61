#include <string>

#include "polycomp/codecs.hpp"
#include "polycomp/error.hpp"
#include "polycomp/rsd.hpp"

namespace polycomp {

Encoded encode_poly(const DeltaSeq& ds, const RsdDictionary& dict, const BigParams& p, const Alphabet& a) {
  Encoded big = encode_big(ds, p, a);
  Encoded var = encode_var_rsd(ds, dict, a);
  if (big.payload.size() <= var.payload.size() + 1) {
    return {CodecId::Poly, ds.kind, std::move(big.payload)};
  }
  return {CodecId::Poly, ds.kind, std::string(1, a.char_at(0)) + var.payload};
}

bool poly_uses_var(const Encoded& enc, const Alphabet& a) {
  return !enc.payload.empty() && enc.payload.front() == a.char_at(0);
}

DeltaSeq decode_poly(const Encoded& enc, const RsdDictionary& dict, const BigParams& p, const Alphabet& a,
                     const SeqContext& ctx) {
  if (enc.payload.empty()) throw Error(Errc::MalformedPayload, "empty polyalgorithm payload");
  if (poly_uses_var(enc, a)) {
    return decode_var_rsd({CodecId::VarRsd, enc.transform, enc.payload.substr(1)}, dict, a, ctx);
  }
  return decode_big({CodecId::Big, enc.transform, enc.payload}, p, a, ctx);
}

}  // namespace polycomp
