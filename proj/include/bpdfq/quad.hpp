#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>

#include "bpdfq/rational.hpp"

namespace bpdfq {

/// The radicand D of a quadratic extension Q(sqrt D). When D is the square
/// of a rational the extension collapses and rational_root holds sqrt(D).
class Discriminant {
 public:
  explicit Discriminant(BigRational value);

  /// D = a^2 b^2 + 4ab.
  static std::shared_ptr<const Discriminant> for_params(const BigRational& a, const BigRational& b);

  const BigRational& value() const { return value_; }
  bool is_perfect_square() const { return root_.has_value(); }
  const std::optional<BigRational>& rational_root() const { return root_; }

  friend bool operator==(const Discriminant& l, const Discriminant& r) { return l.value_ == r.value_; }

 private:
  BigRational value_;
  std::optional<BigRational> root_;
};

using DiscriminantPtr = std::shared_ptr<const Discriminant>;

/// u + v sqrt(D). Elements over a perfect-square D are stored with v = 0.
class QuadElem {
 public:
  QuadElem(BigRational u, BigRational v, DiscriminantPtr disc);
  static QuadElem rational(BigRational u, DiscriminantPtr disc);
  /// The formal symbol sqrt(D) itself (rational root when D is a square).
  static QuadElem sqrt_d(DiscriminantPtr disc);

  const BigRational& u() const { return u_; }
  const BigRational& v() const { return v_; }
  const DiscriminantPtr& disc() const { return disc_; }

  bool is_rational() const { return v_.is_zero(); }
  bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
  /// u^2 - v^2 D.
  BigRational norm() const;

  QuadElem& operator+=(const QuadElem& o);
  QuadElem& operator-=(const QuadElem& o);
  QuadElem& operator*=(const QuadElem& o);
  QuadElem& operator/=(const QuadElem& o);
  QuadElem& operator*=(const BigRational& s);

  friend QuadElem operator+(QuadElem l, const QuadElem& r) { return l += r; }
  friend QuadElem operator-(QuadElem l, const QuadElem& r) { return l -= r; }
  friend QuadElem operator*(QuadElem l, const QuadElem& r) { return l *= r; }
  friend QuadElem operator/(QuadElem l, const QuadElem& r) { return l /= r; }
  friend QuadElem operator*(QuadElem l, const BigRational& s) { return l *= s; }
  friend QuadElem operator*(const BigRational& s, QuadElem r) { return r *= s; }
  QuadElem operator-() const;

  /// Throws ParameterSetError when the discriminants differ.
  friend bool operator==(const QuadElem& l, const QuadElem& r);

  QuadElem conj() const;
  /// Throws DivisionError for zero or zero-norm input.
  QuadElem inverse() const;
  /// Repeated squaring; negative exponents go through inverse().
  QuadElem pow(long exponent) const;

  std::string to_string() const;
  double to_double() const;

 private:
  void check_compatible(const QuadElem& o) const;
  void normalize();

  BigRational u_;
  BigRational v_;
  DiscriminantPtr disc_;
};

std::ostream& operator<<(std::ostream& os, const QuadElem& x);

QuadElem quad_mul(const QuadElem& x, const QuadElem& y);
QuadElem quad_inv(const QuadElem& x);
QuadElem quad_conj(const QuadElem& x);

inline QuadElem zero_like(const QuadElem& x) { return QuadElem::rational(BigRational{}, x.disc()); }
inline QuadElem one_like(const QuadElem& x) { return QuadElem::rational(BigRational{1}, x.disc()); }
inline QuadElem inverse(const QuadElem& x) { return x.inverse(); }

}  // namespace bpdfq
