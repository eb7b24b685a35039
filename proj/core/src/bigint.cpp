#include "idemsplit/bigint.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace idemsplit {

BigInt::BigInt(std::int64_t value) {
  negative_ = value < 0;
  // Avoid UB on INT64_MIN: negate as unsigned.
  std::uint64_t mag = negative_ ? ~static_cast<std::uint64_t>(value) + 1
                                : static_cast<std::uint64_t>(value);
  while (mag != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
    mag >>= 32;
  }
  if (limbs_.empty()) negative_ = false;
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) negative_ = false;
}

std::strong_ordering BigInt::compare_magnitude(const std::vector<std::uint32_t>& a,
                                               const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

void BigInt::add_magnitude(std::vector<std::uint32_t>& acc,
                           const std::vector<std::uint32_t>& rhs) {
  if (acc.size() < rhs.size()) acc.resize(rhs.size(), 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < acc.size(); ++i) {
    std::uint64_t sum = carry + acc[i] + (i < rhs.size() ? rhs[i] : 0u);
    acc[i] = static_cast<std::uint32_t>(sum & 0xffffffffu);
    carry = sum >> 32;
  }
  if (carry != 0) acc.push_back(static_cast<std::uint32_t>(carry));
}

void BigInt::sub_magnitude(std::vector<std::uint32_t>& acc,
                           const std::vector<std::uint32_t>& rhs) {
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < acc.size(); ++i) {
    std::int64_t diff = static_cast<std::int64_t>(acc[i]) - borrow -
                        (i < rhs.size() ? static_cast<std::int64_t>(rhs[i]) : 0);
    if (diff < 0) {
      diff += (std::int64_t{1} << 32);
      borrow = 1;
    } else {
      borrow = 0;
    }
    acc[i] = static_cast<std::uint32_t>(diff);
  }
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  if (!out.is_zero()) out.negative_ = !out.negative_;
  return out;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
  if (negative_ == rhs.negative_) {
    add_magnitude(limbs_, rhs.limbs_);
  } else if (compare_magnitude(limbs_, rhs.limbs_) >= 0) {
    sub_magnitude(limbs_, rhs.limbs_);
  } else {
    std::vector<std::uint32_t> tmp = rhs.limbs_;
    sub_magnitude(tmp, limbs_);
    limbs_ = std::move(tmp);
    negative_ = rhs.negative_;
  }
  trim();
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) {
  negative_ = !negative_;
  *this += rhs;
  if (!is_zero()) negative_ = !negative_;
  return *this;
}

BigInt operator*(const BigInt& lhs, const BigInt& rhs) {
  BigInt out;
  if (lhs.is_zero() || rhs.is_zero()) return out;
  out.limbs_.assign(lhs.limbs_.size() + rhs.limbs_.size(), 0);
  for (std::size_t i = 0; i < lhs.limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
      std::uint64_t cur = out.limbs_[i + j] + carry +
                          static_cast<std::uint64_t>(lhs.limbs_[i]) * rhs.limbs_[j];
      out.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    out.limbs_[i + rhs.limbs_.size()] += static_cast<std::uint32_t>(carry);
  }
  out.negative_ = lhs.negative_ != rhs.negative_;
  out.trim();
  return out;
}

BigInt& BigInt::operator<<=(std::size_t bits) {
  if (is_zero() || bits == 0) return *this;
  const std::size_t limb_shift = bits / 32;
  const std::size_t bit_shift = bits % 32;
  limbs_.insert(limbs_.begin(), limb_shift, 0);
  if (bit_shift != 0) {
    std::uint32_t carry = 0;
    for (std::size_t i = limb_shift; i < limbs_.size(); ++i) {
      std::uint64_t cur = (static_cast<std::uint64_t>(limbs_[i]) << bit_shift) | carry;
      limbs_[i] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = static_cast<std::uint32_t>(cur >> 32);
    }
    if (carry != 0) limbs_.push_back(carry);
  }
  return *this;
}

BigInt& BigInt::operator>>=(std::size_t bits) {
  if (is_zero() || bits == 0) return *this;
  const std::size_t limb_shift = bits / 32;
  const std::size_t bit_shift = bits % 32;
  if (limb_shift >= limbs_.size()) {
    limbs_.clear();
    negative_ = false;
    return *this;
  }
  limbs_.erase(limbs_.begin(), limbs_.begin() + static_cast<std::ptrdiff_t>(limb_shift));
  if (bit_shift != 0) {
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      std::uint32_t high = (i + 1 < limbs_.size()) ? limbs_[i + 1] : 0;
      limbs_[i] = static_cast<std::uint32_t>(
          (limbs_[i] >> bit_shift) |
          (static_cast<std::uint64_t>(high) << (32 - bit_shift)));
    }
  }
  trim();
  return *this;
}

std::size_t BigInt::trailing_zero_bits() const {
  if (is_zero()) return 0;
  std::size_t count = 0;
  for (std::uint32_t limb : limbs_) {
    if (limb == 0) {
      count += 32;
    } else {
      count += static_cast<std::size_t>(std::countr_zero(limb));
      break;
    }
  }
  return count;
}

std::size_t BigInt::bit_length() const {
  if (is_zero()) return 0;
  return 32 * (limbs_.size() - 1) +
         static_cast<std::size_t>(32 - std::countl_zero(limbs_.back()));
}

std::strong_ordering BigInt::operator<=>(const BigInt& rhs) const {
  if (negative_ != rhs.negative_) {
    return negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  auto mag = compare_magnitude(limbs_, rhs.limbs_);
  return negative_ ? (0 <=> mag) : mag;
}

std::string BigInt::to_decimal() const {
  if (is_zero()) return "0";
  std::vector<std::uint32_t> work = limbs_;
  std::string digits;
  while (!work.empty()) {
    // Divide the magnitude by 10^9, collecting the remainder.
    std::uint64_t rem = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | work[i];
      work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
      rem = cur % 1000000000u;
    }
    while (!work.empty() && work.back() == 0) work.pop_back();
    std::string chunk = std::to_string(rem);
    if (work.empty()) {
      digits.insert(0, chunk);
    } else {
      digits.insert(0, std::string(9 - chunk.size(), '0') + chunk);
    }
  }
  return negative_ ? "-" + digits : digits;
}

bool BigInt::fits_int64() const {
  if (limbs_.size() < 2) return true;
  if (limbs_.size() > 2) return false;
  std::uint64_t mag = (static_cast<std::uint64_t>(limbs_[1]) << 32) | limbs_[0];
  return negative_ ? mag <= (std::uint64_t{1} << 63)
                   : mag < (std::uint64_t{1} << 63);
}

std::int64_t BigInt::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("BigInt::to_int64: value out of range");
  std::uint64_t mag = 0;
  if (limbs_.size() > 1) mag = static_cast<std::uint64_t>(limbs_[1]) << 32;
  if (!limbs_.empty()) mag |= limbs_[0];
  if (negative_) {
    if (mag == (std::uint64_t{1} << 63)) return std::numeric_limits<std::int64_t>::min();
    return -static_cast<std::int64_t>(mag);
  }
  return static_cast<std::int64_t>(mag);
}

}  // namespace idemsplit
