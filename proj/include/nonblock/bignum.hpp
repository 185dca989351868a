#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nonblock {

/// Unsigned arbitrary-precision integer, just large enough for certificate
/// arithmetic: the lasso bounds grow like 2^(m*n+1) and overflow native
/// words, while the certificate check only needs the bits of the exponent.
/// Stored little-endian in base 2^32 with no trailing zero limbs.
class BigUint {
 public:
  BigUint() = default;
  BigUint(uint64_t value);

  static BigUint from_decimal(std::string_view text);
  std::string to_decimal() const;

  bool is_zero() const { return limbs_.empty(); }
  size_t bit_length() const;
  bool bit(size_t i) const;

  BigUint plus_one() const;

  /// Value as uint64_t; only valid when fits_u64().
  bool fits_u64() const { return limbs_.size() <= 2; }
  uint64_t to_u64() const;

  std::strong_ordering operator<=>(const BigUint& other) const;
  bool operator==(const BigUint& other) const { return limbs_ == other.limbs_; }

 private:
  std::vector<uint32_t> limbs_;

  void trim();
  void mul_small_add(uint32_t factor, uint32_t addend);
  uint32_t divmod_small(uint32_t divisor);  // in place; returns remainder
};

}  // namespace nonblock
