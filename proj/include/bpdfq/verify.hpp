#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bpdfq/generating.hpp"
#include "bpdfq/identities.hpp"

namespace bpdfq {

/// serial is the reference loop; parallel runs the same per-case work under
/// OpenMP. Both produce identical, identically ordered results.
enum class Execution { serial, parallel };

using CaseValue = std::variant<BigRational, RationalDualQuaternion>;

/// One adjudicated comparison, in the form reports and serializers consume.
struct CheckCase {
  std::string identity;
  BigRational a;
  BigRational b;
  long n = 0;
  std::optional<long> r;
  CaseValue lhs;  // ground truth from the recurrence
  CaseValue rhs;  // closed form / printed formula under test
  CaseValue delta;
  Status status = Status::match;
  std::optional<RationalDualQuaternion> residue;
  bool out_of_hypothesis = false;
  std::vector<VariantOutcome> variants;

  friend bool operator==(const CheckCase&, const CheckCase&) = default;
};

CheckCase to_case(const IdentityCheck& check);

/// A named side condition that must hold for a report to pass.
struct NamedCheck {
  std::string name;
  bool holds = true;
  std::string detail;
};

enum class Suite { binet, gf, catalan, cassini };
std::string_view to_string(Suite suite);

struct IndexRanges {
  long n_from = 0;
  long n_to = 0;
  std::vector<long> r_values;  // identity reports only
};

struct CheckReport {
  std::string identity;  // "binet", "gf", "catalan", "cassini-odd", "cassini-even"
  bool is_identity_report = false;
  std::vector<BiperiodicParams> matrix;
  IndexRanges ranges;
  std::vector<CheckCase> cases;
  std::vector<NamedCheck> consistency;  // must hold
  std::vector<NamedCheck> exploratory;  // recorded findings, never affect the outcome
  std::size_t matched = 0;
  std::size_t mismatched = 0;
  Verdict verdict = Verdict::confirmed;

  /// Recomputes counts and verdict from the cases.
  void tally();
  /// Binet and generating-function reports need every case to match; identity
  /// reports need every case adjudicated and every consistency check to hold
  /// (a refuted printed formula is a finding, not a failure).
  bool passed() const;
};

/// F_n and Q~_n from the closed forms against the recurrence, n in [0, n_to].
CheckReport run_binet(const BiperiodicParams& params, long n_to, Execution exec = Execution::parallel);

/// Generating-function coefficients against the recurrence; a = b adds the reduced form.
CheckReport run_gf(const BiperiodicParams& params, long scalar_order, long quaternion_order,
                   Execution exec = Execution::parallel);

/// Catalan: r in ranges.r_values, n in [max(r, n_from), n_to].
/// Cassini: every m >= 0 whose indices stay within [.., n_to].
CheckReport run_report(IdentityName identity, const std::vector<BiperiodicParams>& matrix, const IndexRanges& ranges,
                       Mode mode = Mode::strict, Execution exec = Execution::parallel);

/// The parameter matrix {(1,1),(2,2),(3,3),(1,2),(2,3),(5,7)}.
std::vector<BiperiodicParams> default_parameter_matrix();

/// Number of OpenMP worker threads (1 when built without OpenMP).
int max_threads();
void set_threads(int n);

}  // namespace bpdfq
