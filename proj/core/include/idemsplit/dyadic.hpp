#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "idemsplit/bigint.hpp"

namespace idemsplit {

// Exact dyadic rational numerator / 2^exponent.
//
// Normal form: exponent == 0, or the numerator is odd. All arithmetic
// re-normalizes eagerly, so equality is plain field comparison.
class Dyadic {
 public:
  Dyadic() = default;  // zero
  Dyadic(BigInt numerator, std::uint32_t exponent);
  Dyadic(std::int64_t numerator, std::uint32_t exponent);
  static Dyadic from_int(std::int64_t v) { return Dyadic(v, 0); }

  const BigInt& numerator() const { return num_; }
  std::uint32_t exponent() const { return exp_; }
  bool is_zero() const { return num_.is_zero(); }
  int signum() const { return num_.signum(); }

  Dyadic operator-() const;
  friend Dyadic operator+(const Dyadic& lhs, const Dyadic& rhs);
  friend Dyadic operator-(const Dyadic& lhs, const Dyadic& rhs);
  friend Dyadic operator*(const Dyadic& lhs, const Dyadic& rhs);

  // Value * 2^k for any integer k (negative halves, positive doubles).
  Dyadic times_pow2(std::int64_t k) const;

  bool operator==(const Dyadic& rhs) const = default;
  std::strong_ordering operator<=>(const Dyadic& rhs) const;

  // Renders as "<numerator>/2^<exponent>", integers in decimal.
  std::string to_string() const;

 private:
  void normalize();

  BigInt num_;
  std::uint32_t exp_ = 0;
};

}  // namespace idemsplit
