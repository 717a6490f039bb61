#pragma once

#include <array>
#include <optional>
#include <vector>

#include "polycomp/alphabet.hpp"
#include "polycomp/codecs.hpp"
#include "polycomp/entropy.hpp"
#include "polycomp/rsd.hpp"
#include "polycomp/transforms.hpp"

namespace polycomp {

// Corpus-trained resources for one transform.
struct TransformResources {
  RsdDictionary dictionary;
  SymbolModel digit_model;                // arithmetic coder
  std::optional<SymbolModel> value_model;  // Huffman
  std::optional<HuffmanCode> huffman;
  std::uint64_t golomb_m = 0;             // 0: chosen per polygon
};

// Everything needed to run any codec in either direction.
class CodecSuite {
 public:
  explicit CodecSuite(Alphabet alphabet = Alphabet::canonical(), Origin origin = {}, int precision = 2);

  // Builds dictionaries and models for both transforms from a corpus.
  static CodecSuite train(const std::vector<IntPolygon>& corpus, RsdMode mode = RsdMode::SlidingWindow,
                          Alphabet alphabet = Alphabet::canonical(), Origin origin = {}, int precision = 2);

  void set_dictionary(RsdDictionary dict);
  // Digit models feed the arithmetic coder, value models the Huffman coder.
  void set_model(SymbolModel model);

  Encoded encode(const DeltaSeq& ds, CodecId codec) const;
  Encoded encode(const IntPolygon& poly, CodecId codec, Transform t) const;
  DeltaSeq decode_seq(const Encoded& enc) const;
  IntPolygon decode(const Encoded& enc) const;

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  Origin origin() const noexcept { return origin_; }
  int precision() const noexcept { return precision_; }
  SeqContext context() const noexcept { return {origin_, precision_}; }
  const TransformResources& resources(Transform t) const { return res_[index(t)]; }
  TransformResources& resources(Transform t) { return res_[index(t)]; }
  BigParams& big_params(Transform t) { return big_[index(t)]; }
  const BigParams& big_params(Transform t) const { return big_[index(t)]; }

 private:
  static std::size_t index(Transform t) { return t == Transform::DeltaConsec ? 1 : 0; }

  Alphabet alphabet_;
  Origin origin_;
  int precision_;
  std::array<BigParams, 2> big_;
  std::array<TransformResources, 2> res_;
};

// Training inputs, exposed for the CLI builders.
std::vector<std::string> rsd_training_payloads(const std::vector<DeltaSeq>& seqs, const Alphabet& a);
std::vector<std::string> fixed_payloads(const std::vector<DeltaSeq>& seqs);

}  // namespace polycomp
