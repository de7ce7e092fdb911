#include "bpdfq/quaternion.hpp"

#include <gtest/gtest.h>

#include "bpdfq/quad.hpp"
#include "support.hpp"

namespace bpdfq {
namespace {

using testing::rq;
using RQ = Quaternion<BigRational>;
using RDQ = DualQuaternion<BigRational>;

const BigRational kZero(0);
const RQ kOne = RQ::scalar(BigRational(1));
const RQ kI = RQ::basis_i(kZero);
const RQ kJ = RQ::basis_j(kZero);
const RQ kK = RQ::basis_k(kZero);

TEST(Quaternion, HamiltonTableOnBasis) {
  const RQ minus_one = -kOne;
  EXPECT_EQ(kI * kI, minus_one);
  EXPECT_EQ(kJ * kJ, minus_one);
  EXPECT_EQ(kK * kK, minus_one);
  EXPECT_EQ(kI * kJ * kK, minus_one);
  EXPECT_EQ(quat_mul(kI, kJ), kK);
  EXPECT_EQ(kJ * kI, -kK);
  EXPECT_EQ(kJ * kK, kI);
  EXPECT_EQ(kK * kJ, -kI);
  EXPECT_EQ(kK * kI, kJ);
  EXPECT_EQ(kI * kK, -kJ);
}

TEST(Quaternion, IdentityAndExpansion) {
  const RQ q = rq(3, -1, 4, 1);
  EXPECT_EQ(kOne * q, q);
  EXPECT_EQ(q * kOne, q);
  // (1+i)(1+j) = 1 + j + i + ij = 1 + i + j + k
  EXPECT_EQ((kOne + kI) * (kOne + kJ), rq(1, 1, 1, 1));
}

TEST(Quaternion, NonCommutativityWitness) {
  EXPECT_EQ(quat_mul(kI, kJ), -quat_mul(kJ, kI));
  EXPECT_NE(quat_mul(kI, kJ), zero_like(kI));
}

TEST(Quaternion, Conjugation) {
  EXPECT_EQ(quat_conj(kI), -kI);
  EXPECT_EQ(quat_conj(RQ::scalar(BigRational(3))), RQ::scalar(BigRational(3)));
  EXPECT_EQ(quat_conj(kI * kJ), -kK);
  EXPECT_EQ(quat_conj(kJ) * quat_conj(kI), -kK);
}

TEST(Quaternion, RandomAlgebraOverRationals) {
  testing::Gen gen(10);
  auto make = [&] { return gen.rational(); };
  for (int i = 0; i < 200; ++i) {
    const RQ p = gen.quaternion<BigRational>(make), q = gen.quaternion<BigRational>(make),
             r = gen.quaternion<BigRational>(make);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_EQ((p + q) * r, p * r + q * r);
    EXPECT_EQ(quat_conj(p * q), quat_conj(q) * quat_conj(p));
    EXPECT_EQ((p * q).norm(), p.norm() * q.norm());
  }
}

TEST(Quaternion, RandomAlgebraOverQuadraticField) {
  const auto d = std::make_shared<const Discriminant>(BigRational(21));
  testing::Gen gen(11);
  auto make = [&] { return gen.quad(d); };
  for (int i = 0; i < 200; ++i) {
    const auto p = gen.quaternion<QuadElem>(make), q = gen.quaternion<QuadElem>(make),
               r = gen.quaternion<QuadElem>(make);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_EQ(quat_conj(p * q), quat_conj(q) * quat_conj(p));
  }
}

TEST(DualQuaternion, EpsilonTimesEpsilonVanishes) {
  const RDQ ei(zero_like(kI), kI);
  const RDQ ej(zero_like(kI), kJ);
  EXPECT_EQ(dualquat_mul(ei, ej), zero_like(ei));
}

TEST(DualQuaternion, MixedProduct) {
  // (1 + eps i)(j + eps k) = j + eps(k + ij) = j + 2 eps k
  const RDQ p(kOne, kI);
  const RDQ q(kJ, kK);
  EXPECT_EQ(dualquat_mul(p, q), RDQ(kJ, kK.scaled(BigRational(2))));
}

TEST(DualQuaternion, EmbedsPlainQuaternions) {
  const RQ q = rq(1, 2, 3, 4), p = rq(-2, 0, 5, 1);
  EXPECT_EQ(dualquat_mul(RDQ::pure(q), RDQ::pure(p)), RDQ::pure(q * p));
}

TEST(DualQuaternion, Addition) {
  const RDQ p(kOne, kI);
  EXPECT_EQ(dualquat_add(p, zero_like(p)), p);
  EXPECT_EQ(dualquat_add(RDQ(kOne, kI), RDQ(kJ, kK)), RDQ(kOne + kJ, kI + kK));
  EXPECT_EQ(p + p.scaled(BigRational(-1)), zero_like(p));
}

TEST(DualQuaternion, RandomAlgebraAndDualCoefficientIsomorphism) {
  testing::Gen gen(12);
  auto make = [&] { return gen.rational(); };
  auto dq = [&] { return RDQ(gen.quaternion<BigRational>(make), gen.quaternion<BigRational>(make)); };
  for (int i = 0; i < 200; ++i) {
    const RDQ p = dq(), q = dq(), r = dq();
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    // Same product through quaternions with dual-scalar coefficients.
    const auto alt = p.to_dual_coefficients() * q.to_dual_coefficients();
    EXPECT_EQ(RDQ::from_dual_coefficients(alt), p * q);
    EXPECT_EQ(RDQ::from_dual_coefficients(p.to_dual_coefficients()), p);
  }
}

TEST(DualQuaternion, EpsilonIsCentral) {
  const RDQ eps(zero_like(kOne), kOne);
  for (const RQ& basis : {kOne, kI, kJ, kK}) {
    const RDQ e = RDQ::pure(basis);
    EXPECT_EQ(eps * e, e * eps);
  }
}

}  // namespace
}  // namespace bpdfq
