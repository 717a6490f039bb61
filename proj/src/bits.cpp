#include <string>

#include "polycomp/entropy.hpp"
#include "polycomp/error.hpp"

namespace polycomp {

void BitString::push_bits(std::uint64_t value, unsigned width) {
  for (unsigned i = width; i-- > 0;) push((value >> i) & 1u);
}

std::string BitString::to_string() const {
  std::string out;
  out.reserve(bits.size());
  for (auto b : bits) out.push_back(b ? '1' : '0');
  return out;
}

BitString BitString::from_string(std::string_view s) {
  BitString out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '0' && s[i] != '1') throw Error(Errc::ParseError, "bit string holds a non-binary character", i);
    out.push(s[i] == '1');
  }
  return out;
}

bool BitReader::read() {
  if (pos_ >= limit_) {
    ++pos_;
    return false;
  }
  return bits_.bits[pos_++] != 0;
}

std::uint64_t BitReader::read_bits(unsigned width) {
  std::uint64_t v = 0;
  for (unsigned i = 0; i < width; ++i) v = (v << 1) | (read() ? 1u : 0u);
  return v;
}

std::string pack_bits(const BitString& bits, const Alphabet& a) {
  if (a.base() < 64) throw Error(Errc::InvalidArgument, "bit packing needs at least 64 alphabet characters");
  std::string out;
  out.reserve((bits.size() + 5) / 6);
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    unsigned v = 0;
    for (std::size_t j = 0; j < 6; ++j) {
      v = (v << 1) | (i + j < bits.size() ? bits.bits[i + j] : 0u);
    }
    out.push_back(a.chars()[v]);
  }
  return out;
}

BitString unpack_bits(std::string_view chars, const Alphabet& a) {
  if (a.base() < 64) throw Error(Errc::InvalidArgument, "bit packing needs at least 64 alphabet characters");
  BitString out;
  out.bits.reserve(chars.size() * 6);
  for (std::size_t i = 0; i < chars.size(); ++i) {
    auto d = a.index_of(chars[i]);
    if (!d || *d >= 64) {
      throw Error(Errc::UnknownCharacter, std::string("character '") + chars[i] + "' at position " +
                                              std::to_string(i) + " is not a 6-bit digit",
                  i);
    }
    out.push_bits(*d, 6);
  }
  return out;
}

}  // namespace polycomp
