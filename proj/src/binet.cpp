#include "bpdfq/binet.hpp"

#include <string>

#include "bpdfq/error.hpp"

namespace bpdfq {

namespace {

QuadQuaternion quaternion_from_powers(const std::array<BigRational, 4>& coeffs, const QuadElem& root) {
  // coeffs[m] * root^m in component m.
  const QuadElem r2 = root * root;
  return {QuadElem::rational(coeffs[0], root.disc()), coeffs[1] * root, coeffs[2] * r2, coeffs[3] * (r2 * root)};
}

// (lhs_coeff * lhs_root^n - rhs_coeff * rhs_root^n) / (alpha - beta) / (ab)^floor(n/2)
QuadQuaternion branch(const QuadQuaternion& alpha_coeff, const QuadQuaternion& beta_coeff, const QuadElem& alpha,
                      const QuadElem& beta, const BigRational& ab, long n) {
  const QuadElem scale = (alpha - beta).inverse() * ab.pow(-floor_half(n));
  return (alpha_coeff.scaled(alpha.pow(n)) - beta_coeff.scaled(beta.pow(n))).scaled(scale);
}

RationalQuaternion collapse_or_throw(const QuadQuaternion& q, const char* part, long n) {
  const char* names[] = {"w", "x", "y", "z"};
  const auto comps = q.components();
  for (int c = 0; c < 4; ++c) {
    if (!comps[c]->is_rational()) {
      throw ConsistencyFailure(std::string("dual-quaternion Binet value at n=") + std::to_string(n) + " has " + part +
                               "." + names[c] + " = " + comps[c]->to_string() + " (nonzero sqrt(D) part)");
    }
  }
  return q.map([](const QuadElem& e) { return e.u(); });
}

}  // namespace

BinetConstants BinetConstants::conjugated() const {
  auto conj = [](const QuadElem& e) { return e.conj(); };
  return {beta, alpha, alpha_star.map(conj), beta_star.map(conj), alpha_star2.map(conj), beta_star2.map(conj)};
}

BinetConstants binet_constants(const BiperiodicParams& params) {
  params.require_distinct_roots();
  const BigRational& a = params.a();
  const BigRational ab = params.ab();
  const DiscriminantPtr& disc = params.disc();
  const BigRational half(1, 2);
  const QuadElem alpha(ab * half, half, disc);
  const QuadElem beta(ab * half, -half, disc);

  const std::array<BigRational, 4> star = {a, BigRational(1), a / ab, ab.inverse()};
  const std::array<BigRational, 4> star2 = {BigRational(1), a / ab, ab.inverse(), a / (ab * ab)};
  return {alpha,
          beta,
          quaternion_from_powers(star, alpha),
          quaternion_from_powers(star, beta),
          quaternion_from_powers(star2, alpha),
          quaternion_from_powers(star2, beta)};
}

BigRational binet_scalar(const BiperiodicParams& params, long n) {
  return binet_scalar(params, binet_constants(params), n);
}

BigRational binet_scalar(const BiperiodicParams& params, const BinetConstants& constants, long n) {
  if (n < 0) {
    BigRational positive = binet_scalar(params, constants, -n);
    return parity(-n - 1) == 0 ? positive : -positive;
  }
  const QuadElem& alpha = constants.alpha;
  const QuadElem& beta = constants.beta;
  const BigRational factor = params.a().pow(xi(n + 1)) * params.ab().pow(-floor_half(n));
  const QuadElem value = (alpha.pow(n) - beta.pow(n)) / (alpha - beta) * factor;
  if (!value.is_rational()) {
    throw ConsistencyFailure("scalar Binet value at n=" + std::to_string(n) + " is irrational: " + value.to_string());
  }
  return value.u();
}

QuadDualQuaternion binet_dual_quat_exact(const BiperiodicParams& params, const BinetConstants& c, long n) {
  if (n < 0) throw PreconditionError("dual-quaternion Binet form needs n >= 0, got " + std::to_string(n));
  const BigRational ab = params.ab();
  if (parity(n) == 0) {
    return {branch(c.alpha_star, c.beta_star, c.alpha, c.beta, ab, n),
            branch(c.alpha_star2, c.beta_star2, c.alpha, c.beta, ab, n + 1)};
  }
  return {branch(c.alpha_star2, c.beta_star2, c.alpha, c.beta, ab, n),
          branch(c.alpha_star, c.beta_star, c.alpha, c.beta, ab, n + 1)};
}

RationalDualQuaternion binet_dual_quat(const BiperiodicParams& params, const BinetConstants& constants, long n) {
  const QuadDualQuaternion exact = binet_dual_quat_exact(params, constants, n);
  return {collapse_or_throw(exact.primal, "primal", n), collapse_or_throw(exact.dual, "dual", n)};
}

RationalDualQuaternion binet_dual_quat(const BiperiodicParams& params, long n) {
  return binet_dual_quat(params, binet_constants(params), n);
}

bool CollapsedDualQuaternion::is_rational() const { return residue == zero_like(residue); }

CollapsedDualQuaternion collapse(const QuadDualQuaternion& value) {
  return {value.map([](const QuadElem& e) { return e.u(); }), value.map([](const QuadElem& e) { return e.v(); })};
}

}  // namespace bpdfq
