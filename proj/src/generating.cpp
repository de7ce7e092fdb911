#include "bpdfq/generating.hpp"

#include <string>

#include "bpdfq/error.hpp"

namespace bpdfq {

namespace {

ScalarSeries t_pow(long e, const BigRational& c = BigRational(1)) { return ScalarSeries::monomial(c, e); }

QuaternionSeries assemble(const QuaternionComponentSeries& parts, const char* what, long order) {
  const char* names[] = {"w", "x", "y", "z"};
  const ScalarSeries* comps[] = {&parts.w, &parts.x, &parts.y, &parts.z};
  long trunc = order;
  for (int c = 0; c < 4; ++c) {
    if (comps[c]->has_negative_exponents()) {
      const long e = comps[c]->valuation();
      throw FormulaTranscriptionError(std::string(what) + "." + names[c] + " keeps a t^" + std::to_string(e) +
                                      " term with coefficient " + comps[c]->coeff(e).to_string());
    }
    trunc = std::min(trunc, comps[c]->trunc());
  }
  std::vector<RationalQuaternion> coeffs;
  for (long e = 0; e <= trunc; ++e) {
    coeffs.emplace_back(parts.w.coeff(e), parts.x.coeff(e), parts.y.coeff(e), parts.z.coeff(e));
  }
  return QuaternionSeries(RationalQuaternion::scalar(BigRational{}), 0, std::move(coeffs), trunc);
}

void require_order(long order, long minimum, const char* what) {
  if (order < minimum) {
    throw PreconditionError(std::string(what) + " needs order >= " + std::to_string(minimum) + ", got " +
                            std::to_string(order));
  }
}

ScalarSeries denominator(const BiperiodicParams& params) {
  return ScalarSeries::polynomial(BigRational{}, {BigRational(1), -params.b(), BigRational(-1)});
}

DualQuaternionSeries divide_by_denominator(const BiperiodicParams& params, std::vector<RationalDualQuaternion> num,
                                           long order) {
  const RationalDualQuaternion zero = zero_like(num.front());
  const DualQuaternionSeries numerator(zero, 0, std::move(num), order);
  return series_div(numerator, denominator(params));
}

}  // namespace

ScalarSeries gf_scalar(const BiperiodicParams& params, long order) {
  require_order(order, 0, "gf_scalar");
  const BigRational& a = params.a();
  const ScalarSeries num =
      ScalarSeries::polynomial(BigRational{}, {BigRational(0), BigRational(1), a, BigRational(-1)}).truncated(order);
  const ScalarSeries den = ScalarSeries::polynomial(
      BigRational{}, {BigRational(1), BigRational(0), -(params.ab() + BigRational(2)), BigRational(0), BigRational(1)});
  return series_div(num, den);
}

ScalarSeries f_odd(const BiperiodicParams& params, long order) {
  require_order(order, 1, "f_odd");
  SequenceCache cache(params);
  cache.fill(0, order);
  std::vector<BigRational> coeffs;
  for (long e = 0; e <= order; ++e) coeffs.push_back(parity(e) == 1 ? cache.fib(e) : BigRational{});
  return ScalarSeries(BigRational{}, 0, std::move(coeffs), order);
}

QuaternionComponentSeries build_R_components(const BiperiodicParams& params, long order) {
  const ScalarSeries f = f_odd(params, order + 3);
  const BigRational ab1 = params.ab() + BigRational(1);
  return {
      t_pow(1) * f,
      f - t_pow(1),
      f.shifted(-1) - t_pow(0),
      f.shifted(-2) - t_pow(-1) - t_pow(1, ab1),
  };
}

QuaternionComponentSeries build_S_components(const BiperiodicParams& params, long order) {
  const ScalarSeries f = f_odd(params, order + 3);
  const BigRational ab1 = params.ab() + BigRational(1);
  return {
      f - t_pow(1),
      f.shifted(-1) - t_pow(0),
      f.shifted(-2) - t_pow(-1) - t_pow(1, ab1),
      f.shifted(-3) - t_pow(-2) - t_pow(0, ab1),
  };
}

QuaternionSeries build_R(const BiperiodicParams& params, long order) {
  require_order(order, 2, "build_R");
  return assemble(build_R_components(params, order), "R", order);
}

QuaternionSeries build_S(const BiperiodicParams& params, long order) {
  require_order(order, 2, "build_S");
  return assemble(build_S_components(params, order), "S", order);
}

DualQuaternionSeries gf_dual_quat(const BiperiodicParams& params, long order) {
  require_order(order, 0, "gf_dual_quat");
  const long inner = std::max(order, 2L);
  const QuaternionSeries R = build_R(params, inner);
  const QuaternionSeries S = build_S(params, inner);
  SequenceCache cache(params);
  const RationalQuaternion q0 = cache.fib_quat(0);
  const RationalQuaternion q1 = cache.fib_quat(1);
  const RationalQuaternion q2 = cache.fib_quat(2);
  const BigRational& b = params.b();
  const BigRational a_minus_b = params.a() - b;

  std::vector<RationalDualQuaternion> num;
  for (long e = 0; e <= order; ++e) {
    RationalDualQuaternion c(R.coeff(e).scaled(a_minus_b), S.coeff(e).scaled(a_minus_b));
    if (e == 0) c += RationalDualQuaternion(q0, q1);
    if (e == 1) c += RationalDualQuaternion(q1 - q0.scaled(b), q2 - q1.scaled(b));
    num.push_back(std::move(c));
  }
  return divide_by_denominator(params, std::move(num), order);
}

DualQuaternionSeries gf_dual_quat_reduced(const BiperiodicParams& params, long order) {
  require_order(order, 0, "gf_dual_quat_reduced");
  if (params.a() != params.b()) {
    throw PreconditionError("reduced generating function requires a = b (" + params.to_string() + ")");
  }
  SequenceCache cache(params);
  const RationalQuaternion q0 = cache.fib_quat(0);
  const RationalQuaternion q1 = cache.fib_quat(1);
  const RationalQuaternion q2 = cache.fib_quat(2);
  const BigRational& b = params.b();
  std::vector<RationalDualQuaternion> num{RationalDualQuaternion(q0, q1),
                                          RationalDualQuaternion(q1 - q0.scaled(b), q2 - q1.scaled(b))};
  if (order == 0) num.pop_back();
  return divide_by_denominator(params, std::move(num), order);
}

ProofStepCheck check_gf_proof_step(const BiperiodicParams& params, long order) {
  const long inner = std::max(order, 2L);
  const QuaternionSeries R = build_R(params, inner);
  const QuaternionSeries S = build_S(params, inner);
  const BigRational& b = params.b();
  const BigRational a_minus_b = params.a() - b;
  SequenceCache cache(params);
  cache.fill(0, order + 4);
  const RationalQuaternion zero = RationalQuaternion::scalar(BigRational{});

  ProofStepCheck check;
  check.order = order;
  for (long n = 0; n <= order; ++n) {
    RationalQuaternion r_lhs = zero;
    RationalQuaternion s_lhs = zero;
    if (n >= 2) {
      r_lhs = cache.fib_quat(n) - cache.fib_quat(n - 1).scaled(b) - cache.fib_quat(n - 2);
      s_lhs = cache.fib_quat(n + 1) - cache.fib_quat(n).scaled(b) - cache.fib_quat(n - 1);
    }
    if (!check.first_mismatch_R && !(r_lhs == R.coeff(n).scaled(a_minus_b))) check.first_mismatch_R = n;
    if (!check.first_mismatch_S && !(s_lhs == S.coeff(n).scaled(a_minus_b))) check.first_mismatch_S = n;
  }
  return check;
}

}  // namespace bpdfq
