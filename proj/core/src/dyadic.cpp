#include "idemsplit/dyadic.hpp"

#include <algorithm>
#include <utility>

namespace idemsplit {

Dyadic::Dyadic(BigInt numerator, std::uint32_t exponent)
    : num_(std::move(numerator)), exp_(exponent) {
  normalize();
}

Dyadic::Dyadic(std::int64_t numerator, std::uint32_t exponent)
    : num_(numerator), exp_(exponent) {
  normalize();
}

void Dyadic::normalize() {
  if (num_.is_zero()) {
    exp_ = 0;
    return;
  }
  std::size_t tz = num_.trailing_zero_bits();
  std::size_t drop = std::min<std::size_t>(tz, exp_);
  if (drop > 0) {
    num_ >>= drop;
    exp_ -= static_cast<std::uint32_t>(drop);
  }
}

Dyadic Dyadic::operator-() const {
  Dyadic out = *this;
  out.num_ = -out.num_;
  return out;
}

Dyadic operator+(const Dyadic& lhs, const Dyadic& rhs) {
  std::uint32_t e = std::max(lhs.exp_, rhs.exp_);
  BigInt a = lhs.num_ << (e - lhs.exp_);
  BigInt b = rhs.num_ << (e - rhs.exp_);
  return Dyadic(a + b, e);
}

Dyadic operator-(const Dyadic& lhs, const Dyadic& rhs) { return lhs + (-rhs); }

Dyadic operator*(const Dyadic& lhs, const Dyadic& rhs) {
  return Dyadic(lhs.num_ * rhs.num_, lhs.exp_ + rhs.exp_);
}

Dyadic Dyadic::times_pow2(std::int64_t k) const {
  if (is_zero() || k == 0) return *this;
  Dyadic out = *this;
  if (k > 0) {
    std::uint64_t up = static_cast<std::uint64_t>(k);
    std::uint32_t from_exp = static_cast<std::uint32_t>(
        std::min<std::uint64_t>(up, out.exp_));
    out.exp_ -= from_exp;
    up -= from_exp;
    if (up > 0) out.num_ <<= up;
  } else {
    out.exp_ += static_cast<std::uint32_t>(-k);
    out.normalize();
  }
  return out;
}

std::strong_ordering Dyadic::operator<=>(const Dyadic& rhs) const {
  std::uint32_t e = std::max(exp_, rhs.exp_);
  BigInt a = num_ << (e - exp_);
  BigInt b = rhs.num_ << (e - rhs.exp_);
  return a <=> b;
}

std::string Dyadic::to_string() const {
  return num_.to_decimal() + "/2^" + std::to_string(exp_);
}

}  // namespace idemsplit
