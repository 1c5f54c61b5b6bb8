#pragma once

// Exact fractions. Rational is 64-bit with overflow detection; BigRational is
// GMP-backed and used where denominators grow without bound (sums of phi(s)/s).

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include <gmpxx.h>

#include "parallelo/error.hpp"

namespace parallelo {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 addition overflow");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 subtraction overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 multiplication overflow");
  return r;
}

inline std::int64_t narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw OverflowError("value does not fit int64");
  return static_cast<std::int64_t>(v);
}

}  // namespace detail

/// Reduced fraction num/den with den >= 1. Every operation re-normalizes and
/// throws OverflowError instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num) : num_(num), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  /// Largest integer <= value.
  std::int64_t floor() const {
    std::int64_t q = num_ / den_;
    if ((num_ % den_ != 0) && (num_ < 0)) --q;
    return q;
  }
  std::int64_t ceil() const {
    std::int64_t q = num_ / den_;
    if ((num_ % den_ != 0) && (num_ > 0)) ++q;
    return q;
  }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  friend Rational operator-(const Rational& r) { return Rational(detail::checked_sub(0, r.num_), r.den_); }

  friend Rational operator+(const Rational& x, const Rational& y) {
    __int128 n = static_cast<__int128>(x.num_) * y.den_ + static_cast<__int128>(y.num_) * x.den_;
    __int128 d = static_cast<__int128>(x.den_) * y.den_;
    return from_wide(n, d);
  }
  friend Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return from_wide(static_cast<__int128>(x.num_) * y.num_, static_cast<__int128>(x.den_) * y.den_);
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0) throw InvalidArgument("division by zero rational");
    return from_wide(static_cast<__int128>(x.num_) * y.den_, static_cast<__int128>(x.den_) * y.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    return static_cast<__int128>(x.num_) * y.den_ <=> static_cast<__int128>(y.num_) * x.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static Rational from_wide(__int128 n, __int128 d) {
    if (d == 0) throw InvalidArgument("zero denominator");
    if (d < 0) { n = -n; d = -d; }
    if (n >= INT64_MIN / 2 && n <= INT64_MAX / 2 && d <= INT64_MAX / 2) {
      auto n64 = static_cast<std::int64_t>(n), d64 = static_cast<std::int64_t>(d);
      std::int64_t g = std::gcd(n64, d64);
      Rational r;
      r.num_ = n64 / g;
      r.den_ = d64 / g;
      return r;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    if (a > 1) { n /= a; d /= a; }
    Rational r;
    r.num_ = detail::narrow(n);
    r.den_ = detail::narrow(d);
    return r;
  }

  void assign(std::int64_t n, std::int64_t d) { *this = from_wide(n, d); }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Arbitrary-precision reduced fraction.
class BigRational {
 public:
  BigRational() = default;
  BigRational(std::int64_t num) : q_(static_cast<long>(num)) {}  // NOLINT(google-explicit-constructor)
  BigRational(const Rational& r) : q_(static_cast<long>(r.num()), static_cast<long>(r.den())) {  // NOLINT
    q_.canonicalize();
  }
  explicit BigRational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  BigRational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    if (den == 0) throw InvalidArgument("zero denominator");
    q_.canonicalize();
  }

  const mpq_class& value() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }
  bool fits_int64() const;
  /// Narrowing conversion; throws OverflowError when either part exceeds int64.
  Rational to_rational() const;
  double to_double() const { return q_.get_d(); }
  std::string str() const { return q_.get_str(); }

  friend BigRational operator+(const BigRational& x, const BigRational& y) { return BigRational(mpq_class(x.q_ + y.q_)); }
  friend BigRational operator-(const BigRational& x, const BigRational& y) { return BigRational(mpq_class(x.q_ - y.q_)); }
  friend BigRational operator*(const BigRational& x, const BigRational& y) { return BigRational(mpq_class(x.q_ * y.q_)); }
  friend BigRational operator/(const BigRational& x, const BigRational& y) {
    if (y.q_ == 0) throw InvalidArgument("division by zero rational");
    return BigRational(mpq_class(x.q_ / y.q_));
  }
  friend BigRational operator-(const BigRational& x) { return BigRational(mpq_class(-x.q_)); }
  friend BigRational abs(const BigRational& x) { return BigRational(mpq_class(::abs(x.q_))); }

  friend bool operator==(const BigRational& x, const BigRational& y) { return x.q_ == y.q_; }
  friend std::strong_ordering operator<=>(const BigRational& x, const BigRational& y) {
    int c = cmp(x.q_, y.q_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

}  // namespace parallelo
