#include "polycomp/batch.hpp"

namespace polycomp {
namespace {

template <class In, class Out, class F>
void run_one(const In& in, Outcome<Out>& out, F&& f) {
  try {
    out.value = f(in);
  } catch (const Error& e) {
    out.error = e;
  }
}

template <class In, class Out, class F>
std::vector<Outcome<Out>> map_serial(const std::vector<In>& in, F&& f) {
  std::vector<Outcome<Out>> out(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) run_one(in[i], out[i], f);
  return out;
}

template <class In, class Out, class F>
std::vector<Outcome<Out>> map_parallel(const std::vector<In>& in, F&& f) {
  std::vector<Outcome<Out>> out(in.size());
  const auto n = static_cast<std::int64_t>(in.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < n; ++i) {
    run_one(in[static_cast<std::size_t>(i)], out[static_cast<std::size_t>(i)], f);
  }
  return out;
}

}  // namespace

std::vector<Outcome<Encoded>> encode_batch_serial(const CodecSuite& suite, const std::vector<IntPolygon>& polys,
                                                  CodecId codec, Transform t) {
  return map_serial<IntPolygon, Encoded>(polys, [&](const IntPolygon& p) { return suite.encode(p, codec, t); });
}

std::vector<Outcome<Encoded>> encode_batch_parallel(const CodecSuite& suite, const std::vector<IntPolygon>& polys,
                                                    CodecId codec, Transform t) {
  return map_parallel<IntPolygon, Encoded>(polys, [&](const IntPolygon& p) { return suite.encode(p, codec, t); });
}

std::vector<Outcome<IntPolygon>> decode_batch_serial(const CodecSuite& suite, const std::vector<Encoded>& encs) {
  return map_serial<Encoded, IntPolygon>(encs, [&](const Encoded& e) { return suite.decode(e); });
}

std::vector<Outcome<IntPolygon>> decode_batch_parallel(const CodecSuite& suite, const std::vector<Encoded>& encs) {
  return map_parallel<Encoded, IntPolygon>(encs, [&](const Encoded& e) { return suite.decode(e); });
}

std::vector<std::size_t> payload_lengths(const std::vector<Outcome<Encoded>>& out) {
  std::vector<std::size_t> lens;
  lens.reserve(out.size());
  for (const auto& o : out) lens.push_back(o.ok() ? o.value->payload.size() : 0);
  return lens;
}

}  // namespace polycomp
