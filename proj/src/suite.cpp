#include "polycomp/suite.hpp"

#include "polycomp/error.hpp"

namespace polycomp {
namespace {

constexpr Transform kTransforms[2] = {Transform::DeltaMin, Transform::DeltaConsec};

TransformResources empty_resources(Transform t, const Alphabet& a) {
  TransformResources r;
  r.dictionary = RsdDictionary(RsdMode::SlidingWindow, t, VarParams::rsd_defaults_for(t).digit_base, {}, a);
  r.digit_model = build_digit_model({}, t);
  return r;
}

}  // namespace

std::vector<std::string> rsd_training_payloads(const std::vector<DeltaSeq>& seqs, const Alphabet& a) {
  std::vector<std::string> out;
  out.reserve(seqs.size());
  for (const auto& ds : seqs) out.push_back(encode_var(ds, a, VarParams::rsd_defaults_for(ds.kind)).payload);
  return out;
}

std::vector<std::string> fixed_payloads(const std::vector<DeltaSeq>& seqs) {
  std::vector<std::string> out;
  out.reserve(seqs.size());
  for (const auto& ds : seqs) out.push_back(encode_fixed(ds).payload);
  return out;
}

CodecSuite::CodecSuite(Alphabet alphabet, Origin origin, int precision)
    : alphabet_(std::move(alphabet)),
      origin_(origin),
      precision_(precision),
      big_{BigParams::defaults_for(Transform::DeltaMin), BigParams::defaults_for(Transform::DeltaConsec)},
      res_{empty_resources(Transform::DeltaMin, alphabet_), empty_resources(Transform::DeltaConsec, alphabet_)} {}

CodecSuite CodecSuite::train(const std::vector<IntPolygon>& corpus, RsdMode mode, Alphabet alphabet, Origin origin,
                             int precision) {
  if (corpus.empty()) throw Error(Errc::EmptyCorpus, "cannot train on an empty corpus");
  CodecSuite s(std::move(alphabet), origin, precision);
  for (Transform t : kTransforms) {
    std::vector<DeltaSeq> seqs;
    seqs.reserve(corpus.size());
    for (const auto& p : corpus) seqs.push_back(to_delta(p, t, origin));
    s.set_dictionary(RsdDictionary::build(rsd_training_payloads(seqs, s.alphabet_), mode, t,
                                          VarParams::rsd_defaults_for(t).digit_base, RsdDictionary::kMaxEntries,
                                          s.alphabet_));
    s.set_model(build_digit_model(fixed_payloads(seqs), t));
    std::vector<std::vector<std::int64_t>> values;
    values.reserve(seqs.size());
    for (const auto& ds : seqs) values.push_back(ds.values());
    s.set_model(build_value_model(values, t));
  }
  return s;
}

void CodecSuite::set_dictionary(RsdDictionary dict) { res_[index(dict.transform())].dictionary = std::move(dict); }

void CodecSuite::set_model(SymbolModel model) {
  auto& r = res_[index(model.transform())];
  if (model.kind() == SymbolKind::Digit) {
    r.digit_model = std::move(model);
  } else {
    r.huffman = huffman_build(model);
    r.value_model = std::move(model);
  }
}

Encoded CodecSuite::encode(const DeltaSeq& ds, CodecId codec) const {
  const auto& r = resources(ds.kind);
  const auto& a = alphabet_;
  switch (codec) {
    case CodecId::Comma: return encode_comma(ds);
    case CodecId::Fixed: return encode_fixed(ds);
    case CodecId::CommaB: return encode_comma_b(ds, a);
    case CodecId::FixedB: return encode_fixed_b(ds, a);
    case CodecId::Var: return encode_var(ds, a);
    case CodecId::VarRsd: return encode_var_rsd(ds, r.dictionary, a);
    case CodecId::Big: return encode_big(ds, big_params(ds.kind), a);
    case CodecId::Poly: return encode_poly(ds, r.dictionary, big_params(ds.kind), a);
    case CodecId::Ae: return encode_ae(ds, r.digit_model, a);
    case CodecId::Golomb: {
      std::uint64_t m = r.golomb_m;
      if (m == 0) {
        std::vector<std::uint64_t> deltas;
        for (const auto& p : ds.deltas) {
          deltas.push_back(static_cast<std::uint64_t>(p.dx));
          deltas.push_back(static_cast<std::uint64_t>(p.dy));
        }
        m = choose_rice_parameter(deltas);
      }
      return encode_golomb(ds, m, a);
    }
    case CodecId::Huffman:
      if (!r.huffman) throw Error(Errc::MissingResource, "Huffman coding needs a value model");
      return encode_huffman(ds, *r.huffman, a);
    case CodecId::Lzw: return encode_lzw(ds, a);
  }
  throw Error(Errc::InvalidArgument, "unknown codec");
}

Encoded CodecSuite::encode(const IntPolygon& poly, CodecId codec, Transform t) const {
  return encode(to_delta(poly, t, origin_), codec);
}

DeltaSeq CodecSuite::decode_seq(const Encoded& enc) const {
  const auto& r = resources(enc.transform);
  const auto& a = alphabet_;
  const SeqContext ctx = context();
  switch (enc.codec) {
    case CodecId::Comma: return decode_comma(enc, ctx);
    case CodecId::Fixed: return decode_fixed(enc, ctx);
    case CodecId::CommaB: return decode_comma_b(enc, a, ctx);
    case CodecId::FixedB: return decode_fixed_b(enc, a, ctx);
    case CodecId::Var: return decode_var(enc, a, ctx);
    case CodecId::VarRsd: return decode_var_rsd(enc, r.dictionary, a, ctx);
    case CodecId::Big: return decode_big(enc, big_params(enc.transform), a, ctx);
    case CodecId::Poly: return decode_poly(enc, r.dictionary, big_params(enc.transform), a, ctx);
    case CodecId::Ae: return decode_ae(enc, r.digit_model, a, ctx);
    case CodecId::Golomb: return decode_golomb(enc, a, ctx);
    case CodecId::Huffman:
      if (!r.huffman) throw Error(Errc::MissingResource, "Huffman decoding needs a value model");
      return decode_huffman(enc, *r.huffman, a, ctx);
    case CodecId::Lzw: return decode_lzw(enc, a, ctx);
  }
  throw Error(Errc::InvalidArgument, "unknown codec");
}

IntPolygon CodecSuite::decode(const Encoded& enc) const { return from_delta(decode_seq(enc)); }

}  // namespace polycomp
