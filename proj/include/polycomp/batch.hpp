#pragma once

#include <optional>
#include <vector>

#include "polycomp/error.hpp"
#include "polycomp/suite.hpp"

namespace polycomp {

template <class T>
struct Outcome {
  std::optional<T> value;
  std::optional<Error> error;
  bool ok() const noexcept { return value.has_value(); }
};

// Results keep input order. The parallel forms split the input across
// OpenMP threads; the serial forms are the reference they are tested against.
std::vector<Outcome<Encoded>> encode_batch_serial(const CodecSuite& suite, const std::vector<IntPolygon>& polys,
                                                  CodecId codec, Transform t);
std::vector<Outcome<Encoded>> encode_batch_parallel(const CodecSuite& suite, const std::vector<IntPolygon>& polys,
                                                    CodecId codec, Transform t);

std::vector<Outcome<IntPolygon>> decode_batch_serial(const CodecSuite& suite, const std::vector<Encoded>& encs);
std::vector<Outcome<IntPolygon>> decode_batch_parallel(const CodecSuite& suite, const std::vector<Encoded>& encs);

// Payload lengths, 0 where encoding failed.
std::vector<std::size_t> payload_lengths(const std::vector<Outcome<Encoded>>& out);

}  // namespace polycomp
