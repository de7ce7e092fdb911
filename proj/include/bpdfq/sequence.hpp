#pragma once

#include <string>
#include <vector>

#include "bpdfq/dual_scalar.hpp"
#include "bpdfq/quad.hpp"
#include "bpdfq/quaternion.hpp"
#include "bpdfq/rational.hpp"

namespace bpdfq {

using RationalQuaternion = Quaternion<BigRational>;
using RationalDualQuaternion = DualQuaternion<BigRational>;
using RationalDualScalar = DualScalar<BigRational>;

/// Parameters a, b of the bi-periodic recurrence
///   F_n = a F_{n-1} + F_{n-2} (n even),  F_n = b F_{n-1} + F_{n-2} (n odd),
/// with F_0 = 0, F_1 = 1.
class BiperiodicParams {
 public:
  /// Throws PreconditionError if a or b is zero.
  BiperiodicParams(BigRational a, BigRational b);

  const BigRational& a() const { return a_; }
  const BigRational& b() const { return b_; }
  BigRational ab() const { return a_ * b_; }
  const DiscriminantPtr& disc() const { return disc_; }

  /// ab != 0 and ab + 4 != 0, i.e. the Binet roots are distinct and nonzero.
  bool has_distinct_roots() const;
  /// Throws DegenerateParameters naming the Binet precondition.
  void require_distinct_roots() const;

  /// Multiplier used when stepping to index n (a for even n, b for odd n).
  const BigRational& step_multiplier(long n) const;

  std::string to_string() const;

  friend bool operator==(const BiperiodicParams& l, const BiperiodicParams& r) { return l.a_ == r.a_ && l.b_ == r.b_; }

 private:
  BigRational a_;
  BigRational b_;
  DiscriminantPtr disc_;
};

/// Mathematical parity: 0 for even, 1 for odd, also for negative n.
inline int parity(long n) { return static_cast<int>(((n % 2) + 2) % 2); }
/// floor(n / 2) for any integer n.
inline long floor_half(long n) { return (n - parity(n)) / 2; }

/// Memoized F_n for one parameter set, grown in both directions.
///
/// fill() and the non-const accessors extend the cache and must not run
/// concurrently with anything else. The const accessors only read and throw
/// std::out_of_range for indices outside the filled range, so they are safe
/// to call from many threads after a fill.
class SequenceCache {
 public:
  explicit SequenceCache(BiperiodicParams params);

  const BiperiodicParams& params() const { return params_; }

  /// Ensures F_lo .. F_hi are cached.
  void fill(long lo, long hi);
  long min_index() const { return -static_cast<long>(negative_.size()); }
  long max_index() const { return static_cast<long>(nonnegative_.size()) - 1; }

  // Returns a copy: a later call may grow the cache and move its storage.
  BigRational fib(long n);
  RationalDualScalar dual_fib(long n);
  RationalQuaternion fib_quat(long n);
  RationalDualQuaternion dual_fib_quat(long n);

  const BigRational& fib(long n) const;
  RationalDualScalar dual_fib(long n) const;
  RationalQuaternion fib_quat(long n) const;
  RationalDualQuaternion dual_fib_quat(long n) const;

  /// Re-checks the recurrence on every cached consecutive triple.
  bool validate() const;

 private:
  void extend_up(long n);
  void extend_down(long n);

  BiperiodicParams params_;
  std::vector<BigRational> nonnegative_;  // F_0, F_1, ...
  std::vector<BigRational> negative_;     // F_-1, F_-2, ...
};

// One-shot conveniences; each builds a temporary cache.
BigRational fib(const BiperiodicParams& params, long n);
RationalDualScalar dual_fib(const BiperiodicParams& params, long n);
RationalQuaternion fib_quat(const BiperiodicParams& params, long n);
RationalDualQuaternion dual_fib_quat(const BiperiodicParams& params, long n);

}  // namespace bpdfq
