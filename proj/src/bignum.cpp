#include "nonblock/bignum.hpp"

#include <algorithm>

#include "nonblock/error.hpp"

namespace nonblock {

BigUint::BigUint(uint64_t value) {
  if (value) limbs_.push_back(static_cast<uint32_t>(value));
  if (value >> 32) limbs_.push_back(static_cast<uint32_t>(value >> 32));
}

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

void BigUint::mul_small_add(uint32_t factor, uint32_t addend) {
  uint64_t carry = addend;
  for (uint32_t& limb : limbs_) {
    uint64_t v = static_cast<uint64_t>(limb) * factor + carry;
    limb = static_cast<uint32_t>(v);
    carry = v >> 32;
  }
  if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
  trim();
}

uint32_t BigUint::divmod_small(uint32_t divisor) {
  uint64_t rem = 0;
  for (size_t i = limbs_.size(); i-- > 0;) {
    uint64_t v = (rem << 32) | limbs_[i];
    limbs_[i] = static_cast<uint32_t>(v / divisor);
    rem = v % divisor;
  }
  trim();
  return static_cast<uint32_t>(rem);
}

BigUint BigUint::from_decimal(std::string_view text) {
  if (text.empty()) {
    throw Error(ErrorCode::ParseError, "empty integer literal");
  }
  BigUint out;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw Error(ErrorCode::ParseError,
                  "invalid decimal integer '" + std::string(text) + "'");
    }
    out.mul_small_add(10, static_cast<uint32_t>(c - '0'));
  }
  return out;
}

std::string BigUint::to_decimal() const {
  if (is_zero()) return "0";
  BigUint tmp = *this;
  std::string digits;
  while (!tmp.is_zero()) {
    uint32_t rem = tmp.divmod_small(10);
    digits.push_back(static_cast<char>('0' + rem));
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

size_t BigUint::bit_length() const {
  if (limbs_.empty()) return 0;
  uint32_t top = limbs_.back();
  size_t bits = (limbs_.size() - 1) * 32;
  while (top) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

bool BigUint::bit(size_t i) const {
  size_t limb = i / 32;
  if (limb >= limbs_.size()) return false;
  return (limbs_[limb] >> (i % 32)) & 1u;
}

BigUint BigUint::plus_one() const {
  BigUint out = *this;
  for (uint32_t& limb : out.limbs_) {
    if (++limb != 0) return out;
  }
  out.limbs_.push_back(1);
  return out;
}

uint64_t BigUint::to_u64() const {
  uint64_t v = 0;
  if (!limbs_.empty()) v = limbs_[0];
  if (limbs_.size() > 1) v |= static_cast<uint64_t>(limbs_[1]) << 32;
  return v;
}

std::strong_ordering BigUint::operator<=>(const BigUint& other) const {
  if (limbs_.size() != other.limbs_.size()) {
    return limbs_.size() <=> other.limbs_.size();
  }
  for (size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != other.limbs_[i]) return limbs_[i] <=> other.limbs_[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace nonblock
