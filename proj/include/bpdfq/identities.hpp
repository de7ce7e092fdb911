#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bpdfq/binet.hpp"
#include "bpdfq/sequence.hpp"

namespace bpdfq {

enum class IdentityName { catalan, cassini_odd, cassini_even };
enum class Status { match, mismatch };
enum class Verdict { confirmed, refuted, mixed };

std::string_view to_string(IdentityName name);
std::string_view to_string(Status status);
std::string_view to_string(Verdict verdict);

/// How a printed right-hand side is evaluated.
///  printed            exactly as displayed, product order preserved
///  reversed_products  every product of two starred constants in reverse order
///  uniform_denominator  (ab)^r in every denominator (odd-n primal prints (ab)^(r-1))
enum class RhsForm { printed, reversed_products, uniform_denominator };
std::string_view to_string(RhsForm form);

/// Strict mode enforces the hypothesis "r even"; exploratory mode evaluates
/// odd r too and tags those cases.
enum class Mode { strict, exploratory };

struct VariantOutcome {
  std::string name;
  Status status;

  friend bool operator==(const VariantOutcome&, const VariantOutcome&) = default;
};

struct IdentityCheck {
  IdentityName name;
  BiperiodicParams params;
  long n;
  long r;
  RationalDualQuaternion lhs;
  RationalDualQuaternion rhs;
  Status status;
  RationalDualQuaternion delta;                   // lhs - rhs
  std::optional<RationalDualQuaternion> residue;  // sqrt(D) part left over by the rhs, if any
  bool out_of_hypothesis = false;
  std::vector<VariantOutcome> variants;  // exploratory evaluations, not part of status
};

/// Precomputed state for one parameter set: constants plus a cache filled over
/// [min_index, max_index]. Evaluation through a context is read-only and may
/// run from several threads at once.
class IdentityContext {
 public:
  IdentityContext(BiperiodicParams params, long min_index, long max_index);

  const BiperiodicParams& params() const { return cache_.params(); }
  const BinetConstants& constants() const { return constants_; }
  const SequenceCache& cache() const { return cache_; }

 private:
  SequenceCache cache_;
  BinetConstants constants_;
};

/// Q~_{n-r} Q~_{n+r} - Q~_n^2 from the recurrence. Requires n >= r >= 0.
RationalDualQuaternion catalan_lhs(const SequenceCache& cache, long n, long r);
RationalDualQuaternion catalan_lhs(const BiperiodicParams& params, long n, long r);

/// Printed Catalan right-hand side for the parity of n, evaluated in Q(sqrt D)
/// before collapse. Strict mode throws PreconditionError for odd r.
QuadDualQuaternion catalan_rhs_exact(const BiperiodicParams& params, const BinetConstants& constants, long n, long r,
                                     RhsForm form = RhsForm::printed, Mode mode = Mode::strict);
/// Collapsed to rationals; throws ConsistencyFailure carrying the residue.
RationalDualQuaternion catalan_rhs(const BiperiodicParams& params, long n, long r, RhsForm form = RhsForm::printed,
                                   Mode mode = Mode::strict);

/// Cassini left side (odd: Q~_{2m-1}Q~_{2m+3} - Q~_{2m+1}^2, even:
/// Q~_{2m-2}Q~_{2m+2} - Q~_{2m}^2) straight from the recurrence. m may be 0.
RationalDualQuaternion cassini_lhs(const SequenceCache& cache, long m, IdentityName parity);
/// The Cassini display for the given parity, evaluated as printed.
QuadDualQuaternion cassini_rhs_exact(const BiperiodicParams& params, const BinetConstants& constants,
                                     IdentityName parity);

IdentityCheck check_catalan(const IdentityContext& ctx, long n, long r, Mode mode = Mode::strict);
IdentityCheck cassini(const IdentityContext& ctx, long m, IdentityName parity);
IdentityCheck cassini(const BiperiodicParams& params, long m, IdentityName parity);

}  // namespace bpdfq
