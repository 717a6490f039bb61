#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "polycomp/alphabet.hpp"

namespace polycomp {

// Non-negative arbitrary-precision integer supporting only the two
// operations the bignum codec needs: value*m + a and division by a small
// modulus. Limbs are little-endian base 2^32 with no leading zero limbs.
class BigAccumulator {
 public:
  BigAccumulator() = default;
  explicit BigAccumulator(std::uint64_t value);

  // value = value * m + a, m >= 2.
  void mul_add(std::uint32_t m, std::uint32_t a);
  // value = value / m, returns value % m; m >= 2.
  std::uint32_t divmod(std::uint32_t m);

  bool is_zero() const noexcept { return limbs_.empty(); }
  std::size_t bit_length() const noexcept;
  std::string to_decimal() const;
  static BigAccumulator from_decimal(std::string_view digits);

  const std::vector<std::uint32_t>& limbs() const noexcept { return limbs_; }
  bool operator==(const BigAccumulator&) const = default;

 private:
  std::vector<std::uint32_t> limbs_;
};

BigAccumulator acc_mul_add(BigAccumulator acc, std::uint32_t m, std::uint32_t a);
struct DivMod {
  BigAccumulator quotient;
  std::uint32_t remainder;
};
DivMod acc_divmod(BigAccumulator acc, std::uint32_t m);

// Repeated division by the alphabet base; "0" for zero.
std::string bignum_to_base(BigAccumulator acc, const Alphabet& a);
BigAccumulator base_to_bignum(std::string_view s, const Alphabet& a);

}  // namespace polycomp
