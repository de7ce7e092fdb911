#include "bpdfq/quad.hpp"

#include <cmath>
#include <ostream>
#include <utility>

#include "bpdfq/error.hpp"

namespace bpdfq {

Discriminant::Discriminant(BigRational value) : value_(std::move(value)) {
  BigRational root;
  if (value_.exact_sqrt(root)) root_ = std::move(root);
}

DiscriminantPtr Discriminant::for_params(const BigRational& a, const BigRational& b) {
  const BigRational ab = a * b;
  return std::make_shared<const Discriminant>(ab * ab + BigRational(4) * ab);
}

QuadElem::QuadElem(BigRational u, BigRational v, DiscriminantPtr disc)
    : u_(std::move(u)), v_(std::move(v)), disc_(std::move(disc)) {
  if (!disc_) throw ParameterSetError("quadratic element without a discriminant");
  normalize();
}

QuadElem QuadElem::rational(BigRational u, DiscriminantPtr disc) {
  return QuadElem(std::move(u), BigRational{}, std::move(disc));
}

QuadElem QuadElem::sqrt_d(DiscriminantPtr disc) { return QuadElem(BigRational{}, BigRational{1}, std::move(disc)); }

void QuadElem::normalize() {
  if (disc_->is_perfect_square() && !v_.is_zero()) {
    u_ += v_ * *disc_->rational_root();
    v_ = BigRational{};
  }
}

void QuadElem::check_compatible(const QuadElem& o) const {
  if (disc_ != o.disc_ && !(*disc_ == *o.disc_)) {
    throw ParameterSetError("discriminant mismatch: " + disc_->value().to_string() + " vs " +
                            o.disc_->value().to_string());
  }
}

BigRational QuadElem::norm() const { return u_ * u_ - v_ * v_ * disc_->value(); }

QuadElem& QuadElem::operator+=(const QuadElem& o) {
  check_compatible(o);
  u_ += o.u_;
  v_ += o.v_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
  check_compatible(o);
  u_ -= o.u_;
  v_ -= o.v_;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
  check_compatible(o);
  BigRational u = u_ * o.u_ + v_ * o.v_ * disc_->value();
  BigRational v = u_ * o.v_ + v_ * o.u_;
  u_ = std::move(u);
  v_ = std::move(v);
  return *this;
}

QuadElem& QuadElem::operator/=(const QuadElem& o) { return *this *= o.inverse(); }

QuadElem& QuadElem::operator*=(const BigRational& s) {
  u_ *= s;
  v_ *= s;
  return *this;
}

QuadElem QuadElem::operator-() const { return QuadElem(-u_, -v_, disc_); }

bool operator==(const QuadElem& l, const QuadElem& r) {
  l.check_compatible(r);
  return l.u_ == r.u_ && l.v_ == r.v_;
}

QuadElem QuadElem::conj() const { return QuadElem(u_, -v_, disc_); }

QuadElem QuadElem::inverse() const {
  const BigRational n = norm();
  if (n.is_zero()) throw DivisionError("inverse of zero or zero-norm element " + to_string());
  const BigRational s = n.inverse();
  return QuadElem(u_ * s, -v_ * s, disc_);
}

QuadElem QuadElem::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  QuadElem result = one_like(*this);
  QuadElem base = *this;
  auto e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

std::string QuadElem::to_string() const {
  if (v_.is_zero()) return u_.to_string();
  return u_.to_string() + (v_.sign() < 0 ? " - " : " + ") + (v_.sign() < 0 ? (-v_).to_string() : v_.to_string()) +
         "*sqrt(" + disc_->value().to_string() + ")";
}

double QuadElem::to_double() const {
  return u_.to_double() + v_.to_double() * std::sqrt(disc_->value().to_double());
}

std::ostream& operator<<(std::ostream& os, const QuadElem& x) { return os << x.to_string(); }

QuadElem quad_mul(const QuadElem& x, const QuadElem& y) { return x * y; }
QuadElem quad_inv(const QuadElem& x) { return x.inverse(); }
QuadElem quad_conj(const QuadElem& x) { return x.conj(); }

}  // namespace bpdfq
