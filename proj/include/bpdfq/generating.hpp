#pragma once

#include <optional>
#include <vector>

#include "bpdfq/sequence.hpp"
#include "bpdfq/series.hpp"

namespace bpdfq {

using ScalarSeries = LaurentSeries<BigRational>;
using QuaternionSeries = LaurentSeries<RationalQuaternion>;
using DualQuaternionSeries = LaurentSeries<RationalDualQuaternion>;

inline constexpr long kDefaultScalarOrder = 32;
inline constexpr long kDefaultQuaternionOrder = 24;

/// F(x) = (x + a x^2 - x^3) / (1 - (ab+2) x^2 + x^4), known through x^order.
ScalarSeries gf_scalar(const BiperiodicParams& params, long order);

/// f(t) = sum_{k>=1} F_{2k-1} t^{2k-1}, taken from the sequence, known through t^order.
ScalarSeries f_odd(const BiperiodicParams& params, long order);

/// R(t) = t f + (f - t) i + (f/t - 1) j + (f/t^2 - 1/t - (ab+1) t) k.
/// Throws FormulaTranscriptionError if a component keeps a negative power.
QuaternionSeries build_R(const BiperiodicParams& params, long order);

/// S(t) = (f - t) + (f/t - 1) i + (f/t^2 - 1/t - (ab+1) t) j + (f/t^3 - 1/t^2 - (ab+1)) k.
QuaternionSeries build_S(const BiperiodicParams& params, long order);

/// Components of R or S before the negative-power check, for inspection.
struct QuaternionComponentSeries {
  ScalarSeries w, x, y, z;
};
QuaternionComponentSeries build_R_components(const BiperiodicParams& params, long order);
QuaternionComponentSeries build_S_components(const BiperiodicParams& params, long order);

/// G(t) = [Q0 + (Q1 - b Q0) t + (a-b) R(t)] / (1 - b t - t^2)
///      + eps [Q1 + (Q2 - b Q1) t + (a-b) S(t)] / (1 - b t - t^2).
DualQuaternionSeries gf_dual_quat(const BiperiodicParams& params, long order);

/// The same generating function with the (a-b) terms dropped. Only valid for
/// a = b; at a = b = 1 this is (Q0 + (Q1-Q0)t)/(1-t-t^2) + eps(...).
/// Throws PreconditionError when a != b.
DualQuaternionSeries gf_dual_quat_reduced(const BiperiodicParams& params, long order);

/// Compares sum_{n>=2} (Q_n - b Q_{n-1} - Q_{n-2}) t^n against (a-b) R(t) and
/// sum_{n>=2} (Q_{n+1} - b Q_n - Q_{n-1}) t^n against (a-b) S(t), through t^order.
struct ProofStepCheck {
  long order = 0;
  std::optional<long> first_mismatch_R;
  std::optional<long> first_mismatch_S;
  bool holds() const { return !first_mismatch_R && !first_mismatch_S; }
};
ProofStepCheck check_gf_proof_step(const BiperiodicParams& params, long order);

template <typename R>
std::vector<R> coefficients(const LaurentSeries<R>& s, long from, long to) {
  std::vector<R> out;
  for (long e = from; e <= to; ++e) out.push_back(s.coeff(e));
  return out;
}

}  // namespace bpdfq
