#include "bpdfq/binet.hpp"

#include <gtest/gtest.h>

#include "bpdfq/error.hpp"
#include "support.hpp"

namespace bpdfq {
namespace {

using testing::rdq;

TEST(BinetConstants, VietaRelations) {
  const BiperiodicParams p(2, 3);
  const BinetConstants c = binet_constants(p);
  const auto& d = p.disc();
  EXPECT_EQ(c.alpha * c.beta, QuadElem::rational(BigRational(-6), d));
  EXPECT_EQ(c.alpha + c.beta, QuadElem::rational(BigRational(6), d));
  EXPECT_EQ(c.alpha * c.alpha + c.beta * c.beta, QuadElem::rational(BigRational(6 * 8), d));
}

TEST(BinetConstants, GoldenRatioInverse) {
  const BiperiodicParams p(1, 1);
  const BinetConstants c = binet_constants(p);
  EXPECT_EQ(quad_inv(c.alpha), QuadElem(BigRational(-1, 2), BigRational(1, 2), p.disc()));
}

TEST(BinetConstants, ConjugatedSwapsRoots) {
  const BinetConstants c = binet_constants(BiperiodicParams(3, 5));
  const BinetConstants s = c.conjugated();
  EXPECT_EQ(s.alpha, c.beta);
  EXPECT_EQ(s.beta_star, c.alpha_star);
  EXPECT_EQ(s.alpha_star2, c.beta_star2);
}

TEST(BinetConstants, DegenerateParametersRejected) {
  EXPECT_THROW(binet_constants(BiperiodicParams(2, -2)), DegenerateParameters);
  EXPECT_THROW(binet_scalar(BiperiodicParams(-4, 1), 3), DegenerateParameters);
}

TEST(BinetScalar, MatchesRecurrenceOnMatrix) {
  for (auto [a, b] : testing::parameter_matrix()) {
    const BiperiodicParams p(a, b);
    const BinetConstants c = binet_constants(p);
    for (long n = -20; n <= 40; ++n) {
      EXPECT_EQ(binet_scalar(p, c, n), testing::reference_fib(a, b, n)) << "a=" << a << " b=" << b << " n=" << n;
    }
  }
}

TEST(BinetScalar, PerfectSquareDiscriminant) {
  // ab = -9/2 gives D = 9/4.
  const BigRational a(-9, 2), b(1);
  const BiperiodicParams p(a, b);
  ASSERT_TRUE(p.disc()->is_perfect_square());
  for (long n = 0; n <= 20; ++n) EXPECT_EQ(binet_scalar(p, n), testing::reference_fib(a, b, n));
}

TEST(BinetDualQuat, OracleValues) {
  EXPECT_EQ(binet_dual_quat(BiperiodicParams(1, 2), 4), rdq({4, 11, 15, 41}, {11, 15, 41, 56}));
  EXPECT_EQ(binet_dual_quat(BiperiodicParams(1, 1), 5), rdq({5, 8, 13, 21}, {8, 13, 21, 34}));
}

TEST(BinetDualQuat, MatchesRecurrenceOnMatrix) {
  for (auto [a, b] : testing::parameter_matrix()) {
    const BiperiodicParams p(a, b);
    const BinetConstants c = binet_constants(p);
    SequenceCache cache(p);
    for (long n = 0; n <= 40; ++n) {
      const CollapsedDualQuaternion v = collapse(binet_dual_quat_exact(p, c, n));
      EXPECT_TRUE(v.is_rational()) << "a=" << a << " b=" << b << " n=" << n;
      EXPECT_EQ(v.rational, cache.dual_fib_quat(n)) << "a=" << a << " b=" << b << " n=" << n;
    }
  }
}

TEST(BinetDualQuat, RejectsNegativeIndex) {
  const BiperiodicParams p(1, 1);
  EXPECT_THROW(binet_dual_quat_exact(p, binet_constants(p), -1), PreconditionError);
}

TEST(BinetDualQuat, InvariantUnderRootExchange) {
  const BiperiodicParams p(2, 3);
  const BinetConstants c = binet_constants(p);
  const QuadDualQuaternion x = binet_dual_quat_exact(p, c, 7);
  const QuadDualQuaternion y = binet_dual_quat_exact(p, c.conjugated(), 7);
  EXPECT_EQ(collapse(x).rational, collapse(y).rational);
}

TEST(Collapse, SplitsResidue) {
  const BiperiodicParams p(1, 1);
  const auto& d = p.disc();
  const QuadQuaternion q{QuadElem::sqrt_d(d), QuadElem::rational(BigRational(2), d), zero_like(QuadElem::sqrt_d(d)),
                         zero_like(QuadElem::sqrt_d(d))};
  const CollapsedDualQuaternion v = collapse(QuadDualQuaternion::pure(q));
  EXPECT_FALSE(v.is_rational());
  EXPECT_EQ(v.residue.primal.w, BigRational(1));
  EXPECT_EQ(v.rational.primal.x, BigRational(2));
}

}  // namespace
}  // namespace bpdfq
