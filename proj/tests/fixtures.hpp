#pragma once

#include <optional>
#include <vector>

#include "polycomp/corpus.hpp"
#include "polycomp/error.hpp"
#include "polycomp/transforms.hpp"

namespace fixtures {

inline polycomp::GeoPolygon waco_ring() {
  return {{{31.3, -97.4}, {31.51, -97.55}, {31.8, -96.99}, {31.58, -96.84}, {31.3, -97.4}}};
}

inline polycomp::GeoPolygon louisiana_ring() {
  return {{{30.97, -92.28}, {30.89, -92.04}, {30.61, -92.22}, {30.65, -92.34}, {30.97, -92.28}}};
}

inline std::vector<polycomp::IntPolygon> synthetic(std::size_t n, std::uint64_t seed = 1) {
  polycomp::GenParams p;
  p.n_polygons = n;
  p.seed = seed;
  std::vector<polycomp::IntPolygon> out;
  for (const auto& g : polycomp::generate_corpus(p)) out.push_back(polycomp::quantize(g));
  return out;
}

// Error code thrown by f, or nullopt when it returns normally.
template <class F>
std::optional<polycomp::Errc> error_of(F&& f) {
  try {
    f();
  } catch (const polycomp::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

template <class F>
polycomp::Errc code_of(F&& f) {
  auto e = error_of(f);
  return e ? *e : static_cast<polycomp::Errc>(-1);
}

}  // namespace fixtures
