#include "bpdfq/generating.hpp"

#include <gtest/gtest.h>

#include "bpdfq/error.hpp"
#include "support.hpp"

namespace bpdfq {
namespace {

TEST(GfScalar, CoefficientsMatchSequenceOnMatrix) {
  for (auto [a, b] : testing::parameter_matrix()) {
    const BiperiodicParams p(a, b);
    const ScalarSeries g = gf_scalar(p, kDefaultScalarOrder);
    for (long n = 0; n <= kDefaultScalarOrder; ++n) {
      EXPECT_EQ(g.coeff(n), testing::reference_fib(a, b, n)) << "a=" << a << " b=" << b << " n=" << n;
    }
  }
}

TEST(FOdd, HoldsOddTermsOnly) {
  const ScalarSeries f = f_odd(BiperiodicParams(1, 1), 9);
  const long expected[] = {0, 1, 0, 2, 0, 5, 0, 13, 0, 34};
  for (long e = 0; e <= 9; ++e) EXPECT_EQ(f.coeff(e), BigRational(expected[e]));
}

TEST(BuildR, KComponentAtFibonacci) {
  const QuaternionSeries r = build_R(BiperiodicParams(1, 1), 8);
  EXPECT_EQ(r.coeff(1).z, BigRational(0));
  EXPECT_EQ(r.coeff(3).z, BigRational(5));
  EXPECT_EQ(r.coeff(5).z, BigRational(13));
  EXPECT_EQ(r.coeff(7).z, BigRational(34));
  EXPECT_EQ(r.coeff(4).z, BigRational(0));
}

TEST(BuildS, WComponentCubicCoefficient) {
  const QuaternionSeries s = build_S(BiperiodicParams(1, 1), 8);
  EXPECT_EQ(s.coeff(3).w, BigRational(2));
}

TEST(BuildRS, NegativePowersCancelOnMatrix) {
  for (auto [a, b] : testing::parameter_matrix()) {
    const BiperiodicParams p(a, b);
    for (const auto& c : {build_R_components(p, 20), build_S_components(p, 20)}) {
      for (const ScalarSeries* s : {&c.w, &c.x, &c.y, &c.z}) EXPECT_GE(s->valuation(), 0);
    }
    EXPECT_NO_THROW(build_R(p, 20));
    EXPECT_NO_THROW(build_S(p, 20));
  }
}

TEST(GfDualQuat, CoefficientsMatchSequenceOnMatrix) {
  for (auto [a, b] : testing::parameter_matrix()) {
    const BiperiodicParams p(a, b);
    SequenceCache cache(p);
    const DualQuaternionSeries g = gf_dual_quat(p, kDefaultQuaternionOrder);
    for (long n = 0; n <= kDefaultQuaternionOrder; ++n) {
      EXPECT_EQ(g.coeff(n), cache.dual_fib_quat(n)) << "a=" << a << " b=" << b << " n=" << n;
    }
  }
}

TEST(GfDualQuat, ReducedFormAgreesWhenParametersCoincide) {
  for (long k : {1L, 2L, 3L}) {
    const BiperiodicParams p(k, k);
    const auto full = gf_dual_quat(p, 16);
    const auto reduced = gf_dual_quat_reduced(p, 16);
    for (long n = 0; n <= 16; ++n) EXPECT_EQ(full.coeff(n), reduced.coeff(n));
  }
  EXPECT_THROW(gf_dual_quat_reduced(BiperiodicParams(1, 2), 8), PreconditionError);
}

TEST(GfProofStep, HoldsOnMatrix) {
  for (auto [a, b] : testing::parameter_matrix()) {
    const ProofStepCheck check = check_gf_proof_step(BiperiodicParams(a, b), 16);
    EXPECT_TRUE(check.holds()) << "a=" << a << " b=" << b;
  }
}

TEST(Coefficients, ExtractsRange) {
  const auto c = coefficients(gf_scalar(BiperiodicParams(2, 2), 6), 0, 6);
  const std::vector<BigRational> pell{0, 1, 2, 5, 12, 29, 70};
  EXPECT_EQ(c, pell);
}

}  // namespace
}  // namespace bpdfq
