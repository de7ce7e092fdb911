#include "bpdfq/sequence.hpp"

#include <stdexcept>
#include <utility>

#include "bpdfq/error.hpp"

namespace bpdfq {

BiperiodicParams::BiperiodicParams(BigRational a, BigRational b)
    : a_(std::move(a)), b_(std::move(b)), disc_(Discriminant::for_params(a_, b_)) {
  if (a_.is_zero() || b_.is_zero()) {
    throw PreconditionError("bi-periodic parameters must be nonzero (a=" + a_.to_string() + ", b=" + b_.to_string() +
                            ")");
  }
}

bool BiperiodicParams::has_distinct_roots() const { return !ab().is_zero() && !disc_->value().is_zero(); }

void BiperiodicParams::require_distinct_roots() const {
  if (!has_distinct_roots()) {
    throw DegenerateParameters("Binet formula needs ab != 0 and ab + 4 != 0 (distinct roots of x^2 - ab x - ab); got " +
                               to_string() + ", D = " + disc_->value().to_string());
  }
}

const BigRational& BiperiodicParams::step_multiplier(long n) const { return parity(n) == 0 ? a_ : b_; }

std::string BiperiodicParams::to_string() const { return "a=" + a_.to_string() + ", b=" + b_.to_string(); }

SequenceCache::SequenceCache(BiperiodicParams params) : params_(std::move(params)) {
  nonnegative_.emplace_back(0);
  nonnegative_.emplace_back(1);
}

void SequenceCache::extend_up(long n) {
  while (max_index() < n) {
    const long next = max_index() + 1;
    const std::size_t i = nonnegative_.size();
    nonnegative_.push_back(params_.step_multiplier(next) * nonnegative_[i - 1] + nonnegative_[i - 2]);
  }
}

void SequenceCache::extend_down(long n) {
  // F_{m-2} = F_m - c(m) F_{m-1}, with m = min_index() + 1.
  while (min_index() > n) {
    const long m = min_index() + 1;
    const BigRational& fm = m >= 0 ? nonnegative_[static_cast<std::size_t>(m)]
                                   : negative_[static_cast<std::size_t>(-m - 1)];
    const long m1 = m - 1;
    const BigRational& fm1 = m1 >= 0 ? nonnegative_[static_cast<std::size_t>(m1)]
                                     : negative_[static_cast<std::size_t>(-m1 - 1)];
    BigRational next = fm - params_.step_multiplier(m) * fm1;
    negative_.push_back(std::move(next));
  }
}

void SequenceCache::fill(long lo, long hi) {
  if (hi > max_index()) extend_up(hi);
  if (lo < min_index()) extend_down(lo);
}

BigRational SequenceCache::fib(long n) {
  fill(n, n);
  return std::as_const(*this).fib(n);
}

RationalDualScalar SequenceCache::dual_fib(long n) {
  fill(n, n + 1);
  return std::as_const(*this).dual_fib(n);
}

RationalQuaternion SequenceCache::fib_quat(long n) {
  fill(n, n + 3);
  return std::as_const(*this).fib_quat(n);
}

RationalDualQuaternion SequenceCache::dual_fib_quat(long n) {
  fill(n, n + 4);
  return std::as_const(*this).dual_fib_quat(n);
}

const BigRational& SequenceCache::fib(long n) const {
  if (n > max_index() || n < min_index()) {
    throw std::out_of_range("F_" + std::to_string(n) + " not cached for " + params_.to_string());
  }
  return n >= 0 ? nonnegative_[static_cast<std::size_t>(n)] : negative_[static_cast<std::size_t>(-n - 1)];
}

RationalDualScalar SequenceCache::dual_fib(long n) const { return {fib(n), fib(n + 1)}; }

RationalQuaternion SequenceCache::fib_quat(long n) const { return {fib(n), fib(n + 1), fib(n + 2), fib(n + 3)}; }

RationalDualQuaternion SequenceCache::dual_fib_quat(long n) const { return {fib_quat(n), fib_quat(n + 1)}; }

bool SequenceCache::validate() const {
  for (long n = min_index() + 2; n <= max_index(); ++n) {
    if (fib(n) != params_.step_multiplier(n) * fib(n - 1) + fib(n - 2)) return false;
  }
  return true;
}

BigRational fib(const BiperiodicParams& params, long n) { return SequenceCache(params).fib(n); }

RationalDualScalar dual_fib(const BiperiodicParams& params, long n) { return SequenceCache(params).dual_fib(n); }

RationalQuaternion fib_quat(const BiperiodicParams& params, long n) { return SequenceCache(params).fib_quat(n); }

RationalDualQuaternion dual_fib_quat(const BiperiodicParams& params, long n) {
  return SequenceCache(params).dual_fib_quat(n);
}

}  // namespace bpdfq
