#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace idemsplit {

// Signed arbitrary-precision integer, sign-magnitude over 32-bit limbs.
//
// Covers exactly what exact dyadic arithmetic needs: ring operations,
// bit shifts, parity queries and decimal rendering. There is no general
// division; the only quotients ever taken are by powers of two (shifts)
// and by 10^9 (decimal output), both private concerns of this class.
class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t value);  // NOLINT: implicit on purpose, ints are values

  bool is_zero() const { return limbs_.empty(); }
  bool is_odd() const { return !limbs_.empty() && (limbs_[0] & 1u); }
  bool is_negative() const { return negative_; }
  int signum() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }

  BigInt operator-() const;
  BigInt& operator+=(const BigInt& rhs);
  BigInt& operator-=(const BigInt& rhs);
  friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
  friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
  friend BigInt operator*(const BigInt& lhs, const BigInt& rhs);

  // Arithmetic shifts. Right shift truncates toward zero; every call site
  // shifts out known-zero bits only.
  BigInt& operator<<=(std::size_t bits);
  BigInt& operator>>=(std::size_t bits);
  friend BigInt operator<<(BigInt v, std::size_t bits) { return v <<= bits; }
  friend BigInt operator>>(BigInt v, std::size_t bits) { return v >>= bits; }

  // Number of trailing zero bits of the magnitude; 0 for the zero value.
  std::size_t trailing_zero_bits() const;
  // Position of the highest set bit plus one; 0 for the zero value.
  std::size_t bit_length() const;

  bool operator==(const BigInt& rhs) const = default;
  std::strong_ordering operator<=>(const BigInt& rhs) const;

  std::string to_decimal() const;

  // Fits in int64? Convenience for callers that know their values are small.
  bool fits_int64() const;
  std::int64_t to_int64() const;  // throws std::overflow_error if it does not fit

 private:
  static std::strong_ordering compare_magnitude(const std::vector<std::uint32_t>& a,
                                                const std::vector<std::uint32_t>& b);
  static void add_magnitude(std::vector<std::uint32_t>& acc,
                            const std::vector<std::uint32_t>& rhs);
  // Requires |acc| >= |rhs|.
  static void sub_magnitude(std::vector<std::uint32_t>& acc,
                            const std::vector<std::uint32_t>& rhs);
  void trim();

  bool negative_ = false;
  std::vector<std::uint32_t> limbs_;  // little-endian, no high zero limbs
};

}  // namespace idemsplit
