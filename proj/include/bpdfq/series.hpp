#pragma once

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bpdfq/error.hpp"

namespace bpdfq {

/// Truncated formal Laurent series  sum_{e >= min_exp} c_e t^e  over a ring R.
///
/// Coefficients at exponents above trunc() are unknown, not zero. A series
/// built from a polynomial is exact: trunc() == kExact and every exponent past
/// the stored coefficients is zero.
template <typename R>
class LaurentSeries {
 public:
  static constexpr long kExact = std::numeric_limits<long>::max() / 4;

  /// The zero series known up to `trunc`; `zero` is the ring's additive identity.
  LaurentSeries(R zero, long trunc) : zero_(std::move(zero)), min_exp_(0), trunc_(clamp(trunc)) {}

  LaurentSeries(R zero, long min_exp, std::vector<R> coeffs, long trunc)
      : zero_(std::move(zero)), min_exp_(min_exp), coeffs_(std::move(coeffs)), trunc_(clamp(trunc)) {
    trim();
  }

  static LaurentSeries monomial(R coeff, long exponent, long trunc = kExact) {
    R zero = zero_like(coeff);
    return LaurentSeries(std::move(zero), exponent, {std::move(coeff)}, trunc);
  }

  /// Exact polynomial c_0 + c_1 t + ... .
  static LaurentSeries polynomial(R zero, std::vector<R> coeffs) {
    return LaurentSeries(std::move(zero), 0, std::move(coeffs), kExact);
  }

  long trunc() const { return trunc_; }
  bool is_exact() const { return trunc_ >= kExact; }
  const R& zero() const { return zero_; }
  /// Lowest stored exponent (coefficients may still be zero there).
  long min_exp() const { return min_exp_; }
  /// Highest stored exponent, or min_exp() - 1 when nothing is stored.
  long max_stored_exp() const { return min_exp_ + static_cast<long>(coeffs_.size()) - 1; }

  /// Coefficient of t^e; throws std::out_of_range for e > trunc().
  R coeff(long e) const {
    if (e > trunc_) {
      throw std::out_of_range("coefficient t^" + std::to_string(e) + " beyond truncation order " +
                              std::to_string(trunc_));
    }
    if (e < min_exp_ || e > max_stored_exp()) return zero_;
    return coeffs_[static_cast<std::size_t>(e - min_exp_)];
  }

  /// Exponent of the lowest nonzero coefficient, or trunc()+1 if none is known.
  long valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (!(coeffs_[i] == zero_)) return min_exp_ + static_cast<long>(i);
    }
    return is_exact() ? kExact : trunc_ + 1;
  }

  bool has_negative_exponents() const { return valuation() < 0; }

  /// Forgets everything above exponent `order`.
  LaurentSeries truncated(long order) const {
    LaurentSeries out = *this;
    out.trunc_ = std::min(trunc_, clamp(order));
    out.trim();
    return out;
  }

  /// Multiplies by t^k.
  LaurentSeries shifted(long k) const {
    LaurentSeries out = *this;
    out.min_exp_ += k;
    if (!is_exact()) out.trunc_ = clamp(trunc_ + k);
    return out;
  }

  template <typename F>
  auto map(F&& f) const -> LaurentSeries<decltype(f(std::declval<const R&>()))> {
    using T = decltype(f(zero_));
    std::vector<T> mapped;
    mapped.reserve(coeffs_.size());
    for (const R& c : coeffs_) mapped.push_back(f(c));
    return LaurentSeries<T>(f(zero_), min_exp_, std::move(mapped), trunc_);
  }

  LaurentSeries operator-() const {
    return map([](const R& c) { return -c; });
  }

  friend LaurentSeries operator+(const LaurentSeries& x, const LaurentSeries& y) { return combine(x, y, false); }
  friend LaurentSeries operator-(const LaurentSeries& x, const LaurentSeries& y) { return combine(x, y, true); }

  /// Equal on every exponent known to both operands.
  friend bool operator==(const LaurentSeries& x, const LaurentSeries& y) {
    const long hi = std::min({std::min(x.trunc_, y.trunc_), std::max(x.max_stored_exp(), y.max_stored_exp())});
    const long lo = std::min(x.min_exp_, y.min_exp_);
    for (long e = lo; e <= hi; ++e) {
      if (!(x.coeff(e) == y.coeff(e))) return false;
    }
    return true;
  }

  static long clamp(long t) { return std::min(t, kExact); }

 private:
  static LaurentSeries combine(const LaurentSeries& x, const LaurentSeries& y, bool subtract) {
    const long trunc = std::min(x.trunc_, y.trunc_);
    const long lo = std::min(x.min_exp_, y.min_exp_);
    const long hi = std::min(trunc, std::max(x.max_stored_exp(), y.max_stored_exp()));
    std::vector<R> out;
    for (long e = lo; e <= hi; ++e) {
      R c = x.coeff_or_zero(e);
      if (subtract) {
        c -= y.coeff_or_zero(e);
      } else {
        c += y.coeff_or_zero(e);
      }
      out.push_back(std::move(c));
    }
    return LaurentSeries(x.zero_, lo, std::move(out), trunc);
  }

  R coeff_or_zero(long e) const {
    if (e < min_exp_ || e > max_stored_exp()) return zero_;
    return coeffs_[static_cast<std::size_t>(e - min_exp_)];
  }

  // Drops coefficients above trunc and zero padding at both ends.
  void trim() {
    if (!is_exact() && max_stored_exp() > trunc_) {
      coeffs_.resize(static_cast<std::size_t>(std::max(0L, trunc_ - min_exp_ + 1)), zero_);
    }
    while (!coeffs_.empty() && coeffs_.back() == zero_) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == zero_) ++lead;
    if (lead == coeffs_.size()) {
      coeffs_.clear();
      min_exp_ = 0;
    } else if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
      min_exp_ += static_cast<long>(lead);
    }
  }

  template <typename>
  friend class LaurentSeries;

  R zero_;
  long min_exp_;
  std::vector<R> coeffs_;
  long trunc_;
};

namespace detail {

// c * x for a central scalar c: plain product when defined, else x.scaled(c).
template <typename A, typename B>
auto scale(const A& c, const B& x) {
  if constexpr (requires { c* x; }) {
    return c * x;
  } else {
    return x.scaled(c);
  }
}

}  // namespace detail

/// Cauchy product. Known up to min(trunc(x) + val(y), trunc(y) + val(x)).
template <typename A, typename B>
auto series_mul(const LaurentSeries<A>& x, const LaurentSeries<B>& y) {
  using T = decltype(detail::scale(x.zero(), y.zero()));
  const T zero = detail::scale(x.zero(), y.zero());
  const long vx = x.valuation();
  const long vy = y.valuation();
  const long K = LaurentSeries<T>::kExact;
  long trunc = K;
  if (!x.is_exact()) trunc = std::min(trunc, vy >= K ? K : x.trunc() + vy);
  if (!y.is_exact()) trunc = std::min(trunc, vx >= K ? K : y.trunc() + vx);
  if (x.max_stored_exp() < x.min_exp() || y.max_stored_exp() < y.min_exp()) {
    return LaurentSeries<T>(zero, trunc);
  }
  const long lo = x.min_exp() + y.min_exp();
  const long hi = std::min(trunc, x.max_stored_exp() + y.max_stored_exp());
  std::vector<T> out;
  for (long e = lo; e <= hi; ++e) {
    T acc = zero;
    const long i_lo = std::max(x.min_exp(), e - y.max_stored_exp());
    const long i_hi = std::min(x.max_stored_exp(), e - y.min_exp());
    for (long i = i_lo; i <= i_hi; ++i) acc += detail::scale(x.coeff(i), y.coeff(e - i));
    out.push_back(std::move(acc));
  }
  return LaurentSeries<T>(zero, lo, std::move(out), trunc);
}

template <typename A, typename B>
auto operator*(const LaurentSeries<A>& x, const LaurentSeries<B>& y) {
  return series_mul(x, y);
}

/// Reciprocal of a series over a commutative ring whose lowest nonzero
/// coefficient is invertible, computed up to exponent `order` (never past
/// what the input determines). Throws DivisionError otherwise.
template <typename R>
LaurentSeries<R> series_inverse(const LaurentSeries<R>& den, long order) {
  const long v = den.valuation();
  if (v > den.trunc() || v >= LaurentSeries<R>::kExact) {
    throw DivisionError("series division by a series with no known nonzero coefficient");
  }
  R lead_inv = den.zero();
  try {
    lead_inv = inverse(den.coeff(v));
  } catch (const DivisionError& e) {
    throw DivisionError(std::string("series division: lowest coefficient is not invertible (") + e.what() + ")");
  }
  long trunc = order;
  if (!den.is_exact()) trunc = std::min(trunc, den.trunc() - 2 * v);
  // den = t^v u(t); 1/u = w with w_0 = 1/u_0, w_k = -(1/u_0) sum_{i=1..k} u_i w_{k-i}.
  const long terms = trunc + v + 1;
  std::vector<R> w;
  for (long k = 0; k < terms; ++k) {
    if (k == 0) {
      w.push_back(lead_inv);
      continue;
    }
    R acc = den.zero();
    for (long i = 1; i <= k && v + i <= den.max_stored_exp(); ++i) acc += den.coeff(v + i) * w[static_cast<std::size_t>(k - i)];
    w.push_back(-(lead_inv * acc));
  }
  return LaurentSeries<R>(den.zero(), -v, std::move(w), trunc);
}

/// num / den with den over a commutative coefficient ring acting centrally on num's ring.
template <typename N, typename D>
auto series_div(const LaurentSeries<N>& num, const LaurentSeries<D>& den) {
  const long v = den.valuation();
  const long K = LaurentSeries<N>::kExact;
  if (v > den.trunc() || v >= K) throw DivisionError("series division by a series with no known nonzero coefficient");
  const long vn = num.valuation();
  long q_trunc = K;
  if (!num.is_exact()) q_trunc = num.trunc() - v;
  if (!den.is_exact() && vn < K) q_trunc = std::min(q_trunc, den.trunc() - 2 * v + vn);
  if (q_trunc >= K) {
    throw DivisionError("series division of two exact series needs a truncation order; truncate the numerator first");
  }
  if (vn >= K || vn > num.trunc()) {
    series_inverse(den, 0);  // still validates the divisor
    return series_mul(LaurentSeries<D>(den.zero(), LaurentSeries<D>::kExact), num).truncated(q_trunc);
  }
  const LaurentSeries<D> inv = series_inverse(den, q_trunc - vn);
  return series_mul(inv, num).truncated(q_trunc);
}

}  // namespace bpdfq
