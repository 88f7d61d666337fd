#pragma once

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace artinx {

using i128 = __int128;

namespace detail {

inline i128 abs128(i128 x) { return x < 0 ? -x : x; }

inline i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw LimitError("exact arithmetic overflow (multiply)");
  return r;
}

inline i128 checked_add(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw LimitError("exact arithmetic overflow (add)");
  return r;
}

}  // namespace detail

/// Exact fraction with 128-bit parts; always reduced with a positive denominator.
/// Every operation fails loudly (LimitError) instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(i128 num) : num_(num) {}  // NOLINT(google-explicit-constructor)
  Rational(i128 num, i128 den) : num_(num), den_(den) {
    if (den_ == 0) throw PreconditionError("zero denominator");
    normalize();
  }

  [[nodiscard]] i128 num() const { return num_; }
  [[nodiscard]] i128 den() const { return den_; }
  [[nodiscard]] bool is_integer() const { return den_ == 1; }
  [[nodiscard]] bool is_zero() const { return num_ == 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return Rational(detail::checked_add(a.num_, b.num_), a.den_);
    const i128 g = detail::gcd128(a.den_, b.den_);
    const i128 da = a.den_ / g;
    const i128 db = b.den_ / g;
    return Rational(detail::checked_add(detail::checked_mul(a.num_, db), detail::checked_mul(b.num_, da)),
                    detail::checked_mul(a.den_, db));
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + Rational(-b.num_, b.den_); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    const i128 g1 = detail::gcd128(a.num_, b.den_);
    const i128 g2 = detail::gcd128(b.num_, a.den_);
    const i128 n1 = g1 ? a.num_ / g1 : a.num_;
    const i128 d2 = g1 ? b.den_ / g1 : b.den_;
    const i128 n2 = g2 ? b.num_ / g2 : b.num_;
    const i128 d1 = g2 ? a.den_ / g2 : a.den_;
    return Rational(detail::checked_mul(n1, n2), detail::checked_mul(d1, d2));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw PreconditionError("division by zero");
    return a * Rational(b.den_, b.num_);
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Integer value; caller must check is_integer(). Throws if it leaves int64 range.
  [[nodiscard]] std::int64_t to_int64() const {
    if (den_ != 1) throw PreconditionError("rational is not an integer");
    if (num_ > INT64_MAX || num_ < INT64_MIN) throw LimitError("value exceeds 64-bit range");
    return static_cast<std::int64_t>(num_);
  }

  [[nodiscard]] std::string str() const;

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const i128 g = detail::gcd128(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  i128 num_ = 0;
  i128 den_ = 1;
};

std::string to_string(i128 v);

inline std::string Rational::str() const {
  return den_ == 1 ? to_string(num_) : to_string(num_) + "/" + to_string(den_);
}

}  // namespace artinx
