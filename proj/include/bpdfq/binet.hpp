#pragma once

#include "bpdfq/quad.hpp"
#include "bpdfq/quaternion.hpp"
#include "bpdfq/sequence.hpp"

namespace bpdfq {

using QuadQuaternion = Quaternion<QuadElem>;
using QuadDualQuaternion = DualQuaternion<QuadElem>;

/// Roots alpha, beta of x^2 - ab x - ab and the quaternion coefficients of
/// the two parity branches:
///   alpha*  = a + alpha i + (a/ab) alpha^2 j + (1/ab) alpha^3 k
///   alpha** = 1 + (a/ab) alpha i + (1/ab) alpha^2 j + (a/(ab)^2) alpha^3 k
/// and likewise for beta.
struct BinetConstants {
  QuadElem alpha;
  QuadElem beta;
  QuadQuaternion alpha_star;
  QuadQuaternion beta_star;
  QuadQuaternion alpha_star2;
  QuadQuaternion beta_star2;

  /// The same constants with alpha and beta exchanged (componentwise conjugation).
  BinetConstants conjugated() const;
};

/// Throws DegenerateParameters when ab = 0 or D = 0.
BinetConstants binet_constants(const BiperiodicParams& params);

/// xi(n) = n - 2 floor(n/2).
inline int xi(long n) { return parity(n); }

/// Scalar closed form a^xi(n+1) / (ab)^floor(n/2) * (alpha^n - beta^n)/(alpha - beta).
/// Negative n uses F_{-n} = (-1)^{n-1} F_n. Throws ConsistencyFailure if the
/// result keeps a sqrt(D) part.
BigRational binet_scalar(const BiperiodicParams& params, long n);
BigRational binet_scalar(const BiperiodicParams& params, const BinetConstants& constants, long n);

/// Dual-quaternion closed form evaluated in Q(sqrt D), before collapsing.
/// Requires n >= 0.
QuadDualQuaternion binet_dual_quat_exact(const BiperiodicParams& params, const BinetConstants& constants, long n);

/// binet_dual_quat_exact collapsed to rationals; throws ConsistencyFailure
/// naming the offending component if any sqrt(D) part survives.
RationalDualQuaternion binet_dual_quat(const BiperiodicParams& params, const BinetConstants& constants, long n);
RationalDualQuaternion binet_dual_quat(const BiperiodicParams& params, long n);

/// Splits each component into its rational part and its sqrt(D) coefficient.
struct CollapsedDualQuaternion {
  RationalDualQuaternion rational;
  RationalDualQuaternion residue;  // sqrt(D) coefficients; zero when the value is rational
  bool is_rational() const;
};
CollapsedDualQuaternion collapse(const QuadDualQuaternion& value);

}  // namespace bpdfq
