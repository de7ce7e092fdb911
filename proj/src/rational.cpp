#include "bpdfq/rational.hpp"

#include <cctype>
#include <ostream>

#include "bpdfq/error.hpp"

namespace bpdfq {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_decimal_integer(s)) throw ParseError("not a rational number: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

BigRational::BigRational(long num, long den) {
  if (den == 0) throw DivisionError("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

BigRational::BigRational(mpq_class value) : value_(std::move(value)) {
  if (sgn(value_.get_den()) == 0) throw DivisionError("zero denominator");
  value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(mpq_class(parse_integer(text)));
  mpz_class num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text.front() == '-') {
    throw ParseError("denominator must be unsigned: '" + std::string(text) + "'");
  }
  mpz_class den = parse_integer(den_text);
  if (sgn(den) == 0) throw DivisionError("zero denominator in '" + std::string(text) + "'");
  return BigRational(mpq_class(num, den));
}

BigRational& BigRational::operator+=(const BigRational& o) {
  value_ += o.value_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& o) {
  value_ -= o.value_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& o) {
  value_ *= o.value_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw DivisionError("division by zero rational");
  value_ /= o.value_;
  return *this;
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-value_)); }

std::strong_ordering operator<=>(const BigRational& l, const BigRational& r) {
  const int c = cmp(l.value_, r.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool BigRational::is_integer() const { return value_.get_den() == 1; }

BigRational BigRational::inverse() const {
  if (is_zero()) throw DivisionError("inverse of zero rational");
  return BigRational(mpq_class(1) / value_);
}

BigRational BigRational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return BigRational(mpq_class(num, den));
}

bool BigRational::exact_sqrt(BigRational& root) const {
  if (sign() < 0) return false;
  const mpz_class& num = value_.get_num();
  const mpz_class& den = value_.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  root = BigRational(mpq_class(sqrt(num), sqrt(den)));
  return true;
}

std::string BigRational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.to_string(); }

}  // namespace bpdfq
