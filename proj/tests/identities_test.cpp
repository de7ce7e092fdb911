#include "bpdfq/identities.hpp"

#include <gtest/gtest.h>

#include "bpdfq/error.hpp"
#include "support.hpp"

namespace bpdfq {
namespace {

using testing::rdq;

TEST(Catalan, OracleValuesFibonacci) {
  const BiperiodicParams p(1, 1);
  const RationalDualQuaternion expected = rdq({-2, -4, -6, -1}, {-2, -4, -6, -1});
  EXPECT_EQ(catalan_lhs(p, 2, 2), expected);
  EXPECT_EQ(catalan_rhs(p, 2, 2), expected);
}

TEST(Catalan, OracleValuesOddIndex) {
  const BiperiodicParams p(2, 3);
  const RationalDualQuaternion expected = rdq({8, 28, 80, 92}, {24, 88, 192, 308});
  EXPECT_EQ(catalan_lhs(p, 5, 2), expected);
  EXPECT_EQ(catalan_rhs(p, 5, 2), expected);
}

TEST(Catalan, ZeroShiftVanishes) {
  for (auto [a, b] : testing::parameter_matrix()) {
    const BiperiodicParams p(a, b);
    for (long n = 0; n <= 12; ++n) {
      EXPECT_EQ(catalan_lhs(p, n, 0), zero_like(catalan_lhs(p, n, 0)));
      EXPECT_EQ(catalan_rhs(p, n, 0), zero_like(catalan_lhs(p, n, 0)));
    }
  }
}

TEST(Catalan, PreconditionsEnforced) {
  const BiperiodicParams p(1, 1);
  EXPECT_THROW(catalan_lhs(p, 1, 2), PreconditionError);
  EXPECT_THROW(catalan_rhs(p, 5, 3), PreconditionError);
  EXPECT_THROW(catalan_rhs(p, 5, -2), PreconditionError);
  EXPECT_NO_THROW(catalan_rhs_exact(p, binet_constants(p), 5, 3, RhsForm::printed, Mode::exploratory));
}

TEST(Catalan, PrintedFormConfirmedOnMatrix) {
  for (auto [a, b] : testing::parameter_matrix()) {
    const IdentityContext ctx(BiperiodicParams(a, b), -2, 20);
    for (long r : {0L, 2L, 4L}) {
      for (long n = r; n <= 16; ++n) {
        const IdentityCheck c = check_catalan(ctx, n, r);
        EXPECT_EQ(c.status, Status::match) << "a=" << a << " b=" << b << " n=" << n << " r=" << r;
        EXPECT_FALSE(c.residue.has_value());
        EXPECT_FALSE(c.out_of_hypothesis);
        EXPECT_EQ(c.delta, zero_like(c.lhs));
      }
    }
  }
}

TEST(Catalan, ExploratoryOddShiftIsTagged) {
  const IdentityContext ctx(BiperiodicParams(1, 2), -2, 12);
  const IdentityCheck c = check_catalan(ctx, 6, 3, Mode::exploratory);
  EXPECT_TRUE(c.out_of_hypothesis);
  EXPECT_THROW(check_catalan(ctx, 6, 3, Mode::strict), PreconditionError);
}

TEST(Catalan, VariantsRecorded) {
  const IdentityContext ctx(BiperiodicParams(2, 3), -2, 12);
  const IdentityCheck odd = check_catalan(ctx, 5, 2);
  ASSERT_EQ(odd.variants.size(), 2u);
  EXPECT_EQ(odd.variants[0].name, "reversed-products");
  EXPECT_EQ(odd.variants[1].name, "uniform-denominator");
  EXPECT_EQ(check_catalan(ctx, 6, 2).variants.size(), 1u);
}

TEST(Cassini, OracleValues) {
  EXPECT_EQ(cassini(BiperiodicParams(1, 1), 1, IdentityName::cassini_even).lhs,
            rdq({-2, -4, -6, -1}, {-2, -4, -6, -1}));
  const IdentityCheck odd = cassini(BiperiodicParams(2, 2), 2, IdentityName::cassini_odd);
  EXPECT_EQ(odd.lhs, rdq({8, 20, 48, 44}, {16, 40, 96, 88}));
  EXPECT_EQ(odd.status, Status::match);
}

TEST(Cassini, RightSideIndependentOfM) {
  for (auto [a, b] : testing::parameter_matrix()) {
    const IdentityContext ctx(BiperiodicParams(a, b), -4, 24);
    for (IdentityName which : {IdentityName::cassini_odd, IdentityName::cassini_even}) {
      const IdentityCheck first = cassini(ctx, 0, which);
      for (long m = 0; m <= 8; ++m) {
        const IdentityCheck c = cassini(ctx, m, which);
        EXPECT_EQ(c.rhs, first.rhs);
        EXPECT_EQ(c.status, Status::match) << "a=" << a << " b=" << b << " m=" << m << " " << to_string(which);
      }
    }
  }
}

TEST(Cassini, ReducesToCatalanWithShiftTwo) {
  const IdentityContext ctx(BiperiodicParams(5, 7), -4, 24);
  for (long m = 1; m <= 6; ++m) {
    EXPECT_EQ(cassini(ctx, m, IdentityName::cassini_odd).lhs, check_catalan(ctx, 2 * m + 1, 2).lhs);
    EXPECT_EQ(cassini(ctx, m, IdentityName::cassini_even).lhs, check_catalan(ctx, 2 * m, 2).lhs);
  }
}

TEST(Names, Strings) {
  EXPECT_EQ(to_string(IdentityName::cassini_odd), "cassini-odd");
  EXPECT_EQ(to_string(Status::mismatch), "mismatch");
  EXPECT_EQ(to_string(Verdict::confirmed), "confirmed");
}

}  // namespace
}  // namespace bpdfq
