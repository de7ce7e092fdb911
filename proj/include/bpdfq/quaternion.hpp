#pragma once

#include <array>
#include <ostream>
#include <utility>

#include "bpdfq/dual_scalar.hpp"

namespace bpdfq {

/// w + x i + y j + z k over a commutative coefficient ring R.
///
/// R needs +, -, *, unary -, == and the ADL helpers zero_like / one_like,
/// which build additive and multiplicative identities from a prototype value
/// (QuadElem carries its discriminant, so there is no default-constructed zero).
template <typename R>
struct Quaternion {
  R w;
  R x;
  R y;
  R z;

  Quaternion(R w_, R x_, R y_, R z_) : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

  static Quaternion scalar(const R& s) { return {s, zero_like(s), zero_like(s), zero_like(s)}; }
  static Quaternion basis_i(const R& like) { return {zero_like(like), one_like(like), zero_like(like), zero_like(like)}; }
  static Quaternion basis_j(const R& like) { return {zero_like(like), zero_like(like), one_like(like), zero_like(like)}; }
  static Quaternion basis_k(const R& like) { return {zero_like(like), zero_like(like), zero_like(like), one_like(like)}; }

  Quaternion& operator+=(const Quaternion& o) {
    w += o.w;
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  Quaternion& operator-=(const Quaternion& o) {
    w -= o.w;
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }

  friend Quaternion operator+(Quaternion l, const Quaternion& r) { return l += r; }
  friend Quaternion operator-(Quaternion l, const Quaternion& r) { return l -= r; }
  Quaternion operator-() const { return {-w, -x, -y, -z}; }

  // Hamilton product: i^2 = j^2 = k^2 = -1, ij = k = -ji, jk = i = -kj, ki = j = -ik.
  friend Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,  //
            p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,  //
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,  //
            p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
  }
  Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }

  /// Multiplies every component by a central scalar s (s * R -> R).
  template <typename S>
  Quaternion scaled(const S& s) const {
    return {s * w, s * x, s * y, s * z};
  }

  /// Applies f componentwise, possibly changing the coefficient ring.
  template <typename F>
  auto map(F&& f) const -> Quaternion<decltype(f(w))> {
    return {f(w), f(x), f(y), f(z)};
  }

  Quaternion conj() const { return {w, -x, -y, -z}; }
  /// w^2 + x^2 + y^2 + z^2 (meaningful for commutative R).
  R norm() const { return w * w + x * x + y * y + z * z; }

  std::array<const R*, 4> components() const { return {&w, &x, &y, &z}; }

  friend bool operator==(const Quaternion& l, const Quaternion& r) {
    return l.w == r.w && l.x == r.x && l.y == r.y && l.z == r.z;
  }
};

template <typename R>
Quaternion<R> zero_like(const Quaternion<R>& q) {
  return Quaternion<R>::scalar(zero_like(q.w));
}

template <typename R>
Quaternion<R> one_like(const Quaternion<R>& q) {
  return Quaternion<R>::scalar(one_like(q.w));
}

template <typename R>
Quaternion<R> quat_mul(const Quaternion<R>& p, const Quaternion<R>& q) {
  return p * q;
}

template <typename R>
Quaternion<R> quat_conj(const Quaternion<R>& q) {
  return q.conj();
}

template <typename R>
std::ostream& operator<<(std::ostream& os, const Quaternion<R>& q) {
  return os << '(' << q.w << ',' << q.x << ',' << q.y << ',' << q.z << ')';
}

/// primal + eps * dual, eps central with eps^2 = 0.
template <typename R>
struct DualQuaternion {
  Quaternion<R> primal;
  Quaternion<R> dual;

  DualQuaternion(Quaternion<R> p, Quaternion<R> d) : primal(std::move(p)), dual(std::move(d)) {}

  /// Embeds a plain quaternion with zero dual part.
  static DualQuaternion pure(const Quaternion<R>& q) { return {q, zero_like(q)}; }

  DualQuaternion& operator+=(const DualQuaternion& o) {
    primal += o.primal;
    dual += o.dual;
    return *this;
  }
  DualQuaternion& operator-=(const DualQuaternion& o) {
    primal -= o.primal;
    dual -= o.dual;
    return *this;
  }
  friend DualQuaternion operator+(DualQuaternion l, const DualQuaternion& r) { return l += r; }
  friend DualQuaternion operator-(DualQuaternion l, const DualQuaternion& r) { return l -= r; }
  DualQuaternion operator-() const { return {-primal, -dual}; }

  friend DualQuaternion operator*(const DualQuaternion& p, const DualQuaternion& q) {
    return {p.primal * q.primal, p.primal * q.dual + p.dual * q.primal};
  }
  DualQuaternion& operator*=(const DualQuaternion& o) { return *this = *this * o; }

  template <typename S>
  DualQuaternion scaled(const S& s) const {
    return {primal.scaled(s), dual.scaled(s)};
  }

  template <typename F>
  auto map(F&& f) const -> DualQuaternion<decltype(f(primal.w))> {
    return {primal.map(f), dual.map(f)};
  }

  /// Same element as a quaternion whose coefficients are dual scalars.
  Quaternion<DualScalar<R>> to_dual_coefficients() const {
    return {DualScalar<R>{primal.w, dual.w}, DualScalar<R>{primal.x, dual.x}, DualScalar<R>{primal.y, dual.y},
            DualScalar<R>{primal.z, dual.z}};
  }

  static DualQuaternion from_dual_coefficients(const Quaternion<DualScalar<R>>& q) {
    return {Quaternion<R>{q.w.real, q.x.real, q.y.real, q.z.real},
            Quaternion<R>{q.w.dual, q.x.dual, q.y.dual, q.z.dual}};
  }

  friend bool operator==(const DualQuaternion& l, const DualQuaternion& r) {
    return l.primal == r.primal && l.dual == r.dual;
  }
};

template <typename R>
DualQuaternion<R> zero_like(const DualQuaternion<R>& q) {
  return {zero_like(q.primal), zero_like(q.primal)};
}

template <typename R>
DualQuaternion<R> one_like(const DualQuaternion<R>& q) {
  return {one_like(q.primal), zero_like(q.primal)};
}

template <typename R>
DualQuaternion<R> dualquat_mul(const DualQuaternion<R>& p, const DualQuaternion<R>& q) {
  return p * q;
}

template <typename R>
DualQuaternion<R> dualquat_add(const DualQuaternion<R>& p, const DualQuaternion<R>& q) {
  return p + q;
}

template <typename R>
std::ostream& operator<<(std::ostream& os, const DualQuaternion<R>& q) {
  return os << q.primal << " + eps" << q.dual;
}

}  // namespace bpdfq
