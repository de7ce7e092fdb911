#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace bpdfq {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  BigRational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  BigRational(long num, long den);
  explicit BigRational(mpq_class value);

  /// Parses "p", "-p" or "p/q" (decimal). Throws ParseError or DivisionError.
  static BigRational parse(std::string_view text);

  BigRational& operator+=(const BigRational& o);
  BigRational& operator-=(const BigRational& o);
  BigRational& operator*=(const BigRational& o);
  /// Throws DivisionError on zero divisor.
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational l, const BigRational& r) { return l += r; }
  friend BigRational operator-(BigRational l, const BigRational& r) { return l -= r; }
  friend BigRational operator*(BigRational l, const BigRational& r) { return l *= r; }
  friend BigRational operator/(BigRational l, const BigRational& r) { return l /= r; }
  BigRational operator-() const;

  friend bool operator==(const BigRational& l, const BigRational& r) { return l.value_ == r.value_; }
  friend std::strong_ordering operator<=>(const BigRational& l, const BigRational& r);

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const;
  int sign() const { return sgn(value_); }

  BigRational inverse() const;
  /// Integer power; negative exponents invert (throws DivisionError for 0).
  BigRational pow(long exponent) const;

  /// True and sets root if this is the square of a rational.
  bool exact_sqrt(BigRational& root) const;

  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const;
  double to_double() const { return value_.get_d(); }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& q);

inline BigRational zero_like(const BigRational&) { return BigRational{}; }
inline BigRational one_like(const BigRational&) { return BigRational{1}; }
inline BigRational inverse(const BigRational& q) { return q.inverse(); }

}  // namespace bpdfq
