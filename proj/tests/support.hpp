#pragma once

#include <random>
#include <vector>

#include "bpdfq/dual_scalar.hpp"
#include "bpdfq/quad.hpp"
#include "bpdfq/quaternion.hpp"
#include "bpdfq/rational.hpp"

namespace bpdfq::testing {

// Hand-rolled generators; fixed seeds keep failures reproducible.
class Gen {
 public:
  explicit Gen(std::uint64_t seed = 20261017) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  BigRational rational(long bound = 50) {
    const long den = integer(1, bound);
    return BigRational(integer(-bound, bound), den);
  }

  BigRational nonzero_rational(long bound = 50) {
    for (;;) {
      BigRational q = rational(bound);
      if (!q.is_zero()) return q;
    }
  }

  QuadElem quad(const DiscriminantPtr& disc) { return QuadElem(rational(), rational(), disc); }

  template <typename R, typename Make>
  Quaternion<R> quaternion(Make&& make) {
    R w = make();
    R x = make();
    R y = make();
    R z = make();
    return {std::move(w), std::move(x), std::move(y), std::move(z)};
  }

 private:
  std::mt19937_64 rng_;
};

// Independent reference for F_n: a straight loop, and the sign rule for n < 0.
inline BigRational reference_fib(const BigRational& a, const BigRational& b, long n) {
  if (n < 0) {
    BigRational v = reference_fib(a, b, -n);
    return (-n - 1) % 2 == 0 ? v : -v;
  }
  BigRational prev(0);
  BigRational cur(1);
  if (n == 0) return prev;
  for (long k = 2; k <= n; ++k) {
    BigRational next = (k % 2 == 0 ? a : b) * cur + prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

inline Quaternion<BigRational> rq(long w, long x, long y, long z) {
  return {BigRational(w), BigRational(x), BigRational(y), BigRational(z)};
}

inline DualQuaternion<BigRational> rdq(std::initializer_list<long> p, std::initializer_list<long> d) {
  std::vector<long> pv(p), dv(d);
  return {rq(pv[0], pv[1], pv[2], pv[3]), rq(dv[0], dv[1], dv[2], dv[3])};
}

// The parameter matrix used throughout the verification suites.
inline std::vector<std::pair<long, long>> parameter_matrix() { return {{1, 1}, {2, 2}, {3, 3}, {1, 2}, {2, 3}, {5, 7}}; }

}  // namespace bpdfq::testing
