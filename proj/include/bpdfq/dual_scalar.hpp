#pragma once

#include <ostream>
#include <utility>

#include "bpdfq/error.hpp"

namespace bpdfq {

/// real + eps * dual with eps central and eps^2 = 0.
template <typename R>
struct DualScalar {
  R real;
  R dual;

  DualScalar(R r, R d) : real(std::move(r)), dual(std::move(d)) {}

  DualScalar& operator+=(const DualScalar& o) {
    real += o.real;
    dual += o.dual;
    return *this;
  }
  DualScalar& operator-=(const DualScalar& o) {
    real -= o.real;
    dual -= o.dual;
    return *this;
  }
  DualScalar& operator*=(const DualScalar& o) {
    R d = real * o.dual + dual * o.real;
    real *= o.real;
    dual = std::move(d);
    return *this;
  }

  friend DualScalar operator+(DualScalar l, const DualScalar& r) { return l += r; }
  friend DualScalar operator-(DualScalar l, const DualScalar& r) { return l -= r; }
  friend DualScalar operator*(DualScalar l, const DualScalar& r) { return l *= r; }
  DualScalar operator-() const { return {-real, -dual}; }

  friend bool operator==(const DualScalar& l, const DualScalar& r) { return l.real == r.real && l.dual == r.dual; }
};

template <typename R>
DualScalar<R> zero_like(const DualScalar<R>& x) {
  return {zero_like(x.real), zero_like(x.real)};
}

template <typename R>
DualScalar<R> one_like(const DualScalar<R>& x) {
  return {one_like(x.real), zero_like(x.real)};
}

/// Defined only when the real part is invertible.
template <typename R>
DualScalar<R> inverse(const DualScalar<R>& x) {
  if (x.real == zero_like(x.real)) throw DivisionError("inverse of a dual scalar with zero real part");
  R inv = inverse(x.real);
  R d = -(x.dual * inv * inv);
  return {std::move(inv), std::move(d)};
}

/// The dual unit eps over the ring of `like`.
template <typename R>
DualScalar<R> epsilon_like(const R& like) {
  return {zero_like(like), one_like(like)};
}

template <typename R>
std::ostream& operator<<(std::ostream& os, const DualScalar<R>& x) {
  return os << x.real << " + eps*" << x.dual;
}

}  // namespace bpdfq
