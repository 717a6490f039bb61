#include <charconv>
#include <string>

#include "polycomp/corpus.hpp"
#include "polycomp/error.hpp"

namespace polycomp {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

double parse_coordinate(std::string_view s, std::size_t line_no) {
  double v = 0.0;
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": bad coordinate '" + std::string(s) + "'",
                line_no);
  }
  return v;
}

std::string trim_decimal(std::string s) {
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

std::string format_fixed(double v, int precision) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, precision);
  return trim_decimal(std::string(buf, res.ptr));
}

std::string format_scaled(std::int64_t v, int precision) {
  std::string digits = std::to_string(v < 0 ? -v : v);
  if (digits.size() <= static_cast<std::size_t>(precision)) {
    digits.insert(0, static_cast<std::size_t>(precision) + 1 - digits.size(), '0');
  }
  digits.insert(digits.size() - static_cast<std::size_t>(precision), ".");
  return (v < 0 ? "-" : "") + trim_decimal(std::move(digits));
}

}  // namespace

GeoPolygon parse_polygon_line(std::string_view line, std::size_t line_no) {
  GeoPolygon poly;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    std::string_view token = line.substr(i, j - i);
    auto comma = token.find(',');
    if (comma == std::string_view::npos || token.find(',', comma + 1) != std::string_view::npos) {
      throw Error(Errc::ParseError,
                  "line " + std::to_string(line_no) + ": expected 'lat,lon', got '" + std::string(token) + "'",
                  line_no);
    }
    poly.points.push_back({parse_coordinate(token.substr(0, comma), line_no),
                           parse_coordinate(token.substr(comma + 1), line_no)});
    i = j;
  }
  if (!poly.points.empty() && poly.points.front() != poly.points.back()) {
    poly.points.push_back(poly.points.front());
  }
  if (poly.points.size() < 4) {
    throw Error(Errc::TooFewPoints,
                "line " + std::to_string(line_no) + ": polygon has " + std::to_string(poly.points.size()) +
                    " points after closing, need at least 4",
                line_no);
  }
  return poly;
}

std::vector<GeoPolygon> parse_corpus(std::string_view text) {
  std::vector<GeoPolygon> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    bool blank = true;
    for (char c : line) blank = blank && is_space(c);
    if (!blank) out.push_back(parse_polygon_line(line, line_no));
    start = end + 1;
  }
  return out;
}

std::string format_polygon(const GeoPolygon& poly, int precision) {
  std::string out;
  for (const auto& p : poly.points) {
    if (!out.empty()) out.push_back(' ');
    out += format_fixed(p.lat, precision);
    out.push_back(',');
    out += format_fixed(p.lon, precision);
  }
  return out;
}

std::string format_polygon(const IntPolygon& poly) {
  std::string out;
  for (const auto& p : poly.points) {
    if (!out.empty()) out.push_back(' ');
    out += format_scaled(p.x, poly.precision);
    out.push_back(',');
    out += format_scaled(-p.y, poly.precision);
  }
  return out;
}

std::size_t original_length(const IntPolygon& poly) {
  if (poly.points.empty()) return 0;
  std::size_t len = 2 * poly.points.size() - 1;
  for (const auto& p : poly.points) {
    len += format_scaled(p.x, poly.precision).size() + format_scaled(-p.y, poly.precision).size();
  }
  return len;
}

}  // namespace polycomp
