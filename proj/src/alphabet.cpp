#include "polycomp/alphabet.hpp"

#include <sstream>

#include "polycomp/error.hpp"

namespace polycomp {
namespace {

constexpr std::string_view kCanonical =
    "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz!$%&()*+";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

}  // namespace

Alphabet::Alphabet(std::string chars, ReservedChars reserved)
    : chars_(std::move(chars)), reserved_(reserved) {
  if (chars_.size() < 2 || chars_.size() > kMaxBase) {
    throw Error(Errc::InvalidArgument,
                "alphabet size must be in [2,70], got " + std::to_string(chars_.size()));
  }
  index_.fill(-1);
  for (std::size_t i = 0; i < chars_.size(); ++i) {
    auto& slot = index_[static_cast<unsigned char>(chars_[i])];
    if (slot >= 0) {
      throw Error(Errc::InvalidArgument, std::string("duplicate alphabet character '") + chars_[i] + "'");
    }
    slot = static_cast<std::int16_t>(i);
  }
  for (char c : {reserved_.sentinel, reserved_.rsd, reserved_.fallback}) {
    if (contains(c)) {
      throw Error(Errc::InvalidArgument, std::string("reserved character '") + c + "' used as a digit");
    }
  }
}

const Alphabet& Alphabet::canonical() {
  static const Alphabet a{std::string(kCanonical)};
  return a;
}

Alphabet Alphabet::prefix(std::size_t base) const {
  if (base > chars_.size()) {
    throw Error(Errc::InvalidArgument, "prefix base " + std::to_string(base) +
                                           " exceeds alphabet size " + std::to_string(chars_.size()));
  }
  return Alphabet(chars_.substr(0, base), reserved_);
}

char Alphabet::char_at(std::size_t index) const {
  if (index >= chars_.size()) {
    throw Error(Errc::ValueOutOfRange, "digit " + std::to_string(index) + " outside base " +
                                           std::to_string(chars_.size()));
  }
  return chars_[index];
}

Alphabet Alphabet::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::string digits;
  bool have_digits = false;
  ReservedChars reserved;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
    if (!have_digits) {
      digits = std::string(view);
      have_digits = true;
      continue;
    }
    view = trim(view);
    if (view.empty()) continue;
    if (view.substr(0, 9) != "reserved ") {
      throw Error(Errc::ParseError, "expected 'reserved <role>=<char>'", line_no);
    }
    view.remove_prefix(9);
    auto eq = view.find('=');
    if (eq == std::string_view::npos || eq + 2 != view.size()) {
      throw Error(Errc::ParseError, "expected 'reserved <role>=<char>'", line_no);
    }
    auto role = view.substr(0, eq);
    char c = view[eq + 1];
    if (role == "sentinel") {
      reserved.sentinel = c;
    } else if (role == "rsd") {
      reserved.rsd = c;
    } else if (role == "fallback") {
      reserved.fallback = c;
    } else if (role.size() == 2 && role[0] == 'q' && role[1] >= '1' && role[1] <= '8') {
      reserved.quotient[role[1] - '1'] = c;
    } else {
      throw Error(Errc::ParseError, "unknown reserved role '" + std::string(role) + "'", line_no);
    }
  }
  if (!have_digits) throw Error(Errc::ParseError, "empty alphabet file");
  return Alphabet(std::move(digits), reserved);
}

std::string Alphabet::serialize() const {
  std::string out = chars_ + "\n";
  out += std::string("reserved sentinel=") + reserved_.sentinel + "\n";
  out += std::string("reserved rsd=") + reserved_.rsd + "\n";
  out += std::string("reserved fallback=") + reserved_.fallback + "\n";
  for (std::size_t q = 0; q < reserved_.quotient.size(); ++q) {
    out += "reserved q" + std::to_string(q + 1) + "=" + reserved_.quotient[q] + "\n";
  }
  return out;
}

std::string int_to_base(std::uint64_t n, const Alphabet& a) {
  if (n == 0) return std::string(1, a.char_at(0));
  const std::uint64_t b = a.base();
  std::string out;
  while (n > 0) {
    out.push_back(a.chars()[n % b]);
    n /= b;
  }
  return {out.rbegin(), out.rend()};
}

std::string int_to_base_fixed(std::uint64_t n, std::size_t width, const Alphabet& a) {
  std::string digits = int_to_base(n, a);
  if (digits.size() > width) {
    throw Error(Errc::FieldOverflow, std::to_string(n) + " does not fit in " + std::to_string(width) +
                                         " base-" + std::to_string(a.base()) + " digits");
  }
  return std::string(width - digits.size(), a.chars()[0]) + digits;
}

std::uint64_t base_to_int(std::string_view s, const Alphabet& a) {
  if (s.empty()) throw Error(Errc::MalformedPayload, "empty digit string");
  const std::uint64_t b = a.base();
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto d = a.index_of(s[i]);
    if (!d) {
      throw Error(Errc::UnknownCharacter, std::string("character '") + s[i] + "' at position " +
                                              std::to_string(i) + " is not a base-" +
                                              std::to_string(b) + " digit",
                  i);
    }
    if (__builtin_mul_overflow(out, b, &out) || __builtin_add_overflow(out, *d, &out)) {
      throw Error(Errc::ValueOutOfRange, "digit string overflows 64 bits");
    }
  }
  return out;
}

}  // namespace polycomp
