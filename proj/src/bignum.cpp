#include "polycomp/bignum.hpp"

#include <algorithm>

#include "polycomp/error.hpp"

namespace polycomp {
namespace {

void check_modulus(std::uint32_t m) {
  if (m < 2) throw Error(Errc::InvalidArgument, "bignum modulus must be at least 2");
}

}  // namespace

BigAccumulator::BigAccumulator(std::uint64_t value) {
  while (value != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(value));
    value >>= 32;
  }
}

void BigAccumulator::mul_add(std::uint32_t m, std::uint32_t a) {
  check_modulus(m);
  std::uint64_t carry = a;
  for (auto& limb : limbs_) {
    const std::uint64_t t = static_cast<std::uint64_t>(limb) * m + carry;
    limb = static_cast<std::uint32_t>(t);
    carry = t >> 32;
  }
  if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
}

std::uint32_t BigAccumulator::divmod(std::uint32_t m) {
  check_modulus(m);
  std::uint64_t rem = 0;
  for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it) {
    const std::uint64_t cur = (rem << 32) | *it;
    *it = static_cast<std::uint32_t>(cur / m);
    rem = cur % m;
  }
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  return static_cast<std::uint32_t>(rem);
}

std::size_t BigAccumulator::bit_length() const noexcept {
  if (limbs_.empty()) return 0;
  return 32 * (limbs_.size() - 1) + (32 - static_cast<std::size_t>(__builtin_clz(limbs_.back())));
}

std::string BigAccumulator::to_decimal() const {
  if (is_zero()) return "0";
  BigAccumulator tmp = *this;
  std::string out;
  while (!tmp.is_zero()) {
    // nine digits per division
    std::uint32_t chunk = tmp.divmod(1000000000u);
    for (int i = 0; i < 9; ++i) {
      out.push_back(static_cast<char>('0' + chunk % 10));
      chunk /= 10;
      if (tmp.is_zero() && chunk == 0) break;
    }
  }
  while (out.size() > 1 && out.back() == '0') out.pop_back();
  std::reverse(out.begin(), out.end());
  return out;
}

BigAccumulator BigAccumulator::from_decimal(std::string_view digits) {
  if (digits.empty()) throw Error(Errc::ParseError, "empty decimal string");
  BigAccumulator acc;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const char c = digits[i];
    if (c < '0' || c > '9') throw Error(Errc::ParseError, "non-digit in decimal string", i);
    acc.mul_add(10, static_cast<std::uint32_t>(c - '0'));
  }
  return acc;
}

BigAccumulator acc_mul_add(BigAccumulator acc, std::uint32_t m, std::uint32_t a) {
  acc.mul_add(m, a);
  return acc;
}

DivMod acc_divmod(BigAccumulator acc, std::uint32_t m) {
  const std::uint32_t r = acc.divmod(m);
  return {std::move(acc), r};
}

std::string bignum_to_base(BigAccumulator acc, const Alphabet& a) {
  if (acc.is_zero()) return std::string(1, a.char_at(0));
  const auto b = static_cast<std::uint32_t>(a.base());
  std::string out;
  while (!acc.is_zero()) out.push_back(a.chars()[acc.divmod(b)]);
  std::reverse(out.begin(), out.end());
  return out;
}

BigAccumulator base_to_bignum(std::string_view s, const Alphabet& a) {
  if (s.empty()) throw Error(Errc::MalformedPayload, "empty digit string");
  const auto b = static_cast<std::uint32_t>(a.base());
  BigAccumulator acc;
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto d = a.index_of(s[i]);
    if (!d) {
      throw Error(Errc::UnknownCharacter, std::string("character '") + s[i] + "' at position " +
                                              std::to_string(i) + " is not a base-" +
                                              std::to_string(b) + " digit",
                  i);
    }
    acc.mul_add(b, static_cast<std::uint32_t>(*d));
  }
  return acc;
}

}  // namespace polycomp
