#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace csc {

/// Arbitrary-precision rational. Always reduced, denominator always
/// positive, zero is canonically 0/1. All comparisons and arithmetic
/// are exact; `approx()` exists for rendering only and must never feed
/// back into a predicate.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long n) : v_(n) {}
  Rat(const mpz_class& n) : v_(n) {}
  Rat(long num, long den);
  Rat(const mpz_class& num, const mpz_class& den);

  /// Accepts "p", "p/q" and plain decimals like "0.93" or "-12.5",
  /// all read exactly. Exponent notation is rejected.
  static Rat parse(std::string_view text);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  std::string str() const;  // "p" when q == 1, else "p/q"
  double approx() const { return v_.get_d(); }

  Rat operator-() const;
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.v_ + b.v_); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.v_ - b.v_); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.v_ * b.v_); }
  friend Rat operator/(const Rat& a, const Rat& b);

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) >= 0; }

  friend int compare(const Rat& a, const Rat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? -1 : c > 0 ? 1 : 0;
  }

 private:
  explicit Rat(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

Rat abs(const Rat& a);

mpz_class pow10(unsigned digits);

/// Nearest multiple of 10^-digits; ties round away from zero.
Rat round_to_decimals(const Rat& q, unsigned digits);

/// Smallest d such that q has an exact representation with denominator
/// 10^d, or -1 when the denominator has prime factors other than 2 and 5.
int decimal_digits(const Rat& q);

/// Fixed-point decimal rendering with exactly `digits` fractional digits
/// (exact rounding, ties away from zero). Display only.
std::string fixed_decimal(const Rat& q, unsigned digits);

std::ostream& operator<<(std::ostream& os, const Rat& q);

}  // namespace csc
