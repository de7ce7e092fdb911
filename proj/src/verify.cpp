#include "bpdfq/verify.hpp"

#include <algorithm>
#include <exception>
#include <sstream>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bpdfq/error.hpp"

namespace bpdfq {

namespace {

// Runs body(i) for i in [0, count). The parallel path rethrows the exception
// of the lowest failing index so failures are as deterministic as results.
template <typename Body>
void for_each_case(std::size_t count, Execution exec, Body&& body) {
  if (exec == Execution::serial || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

template <typename T>
std::vector<T> unwrap(std::vector<std::optional<T>>&& slots) {
  std::vector<T> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

template <typename V>
CheckCase compare_case(std::string identity, const BiperiodicParams& params, long n, V lhs, V rhs) {
  V delta = lhs - rhs;
  const Status status = lhs == rhs ? Status::match : Status::mismatch;
  CheckCase c;
  c.identity = std::move(identity);
  c.a = params.a();
  c.b = params.b();
  c.n = n;
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  c.delta = std::move(delta);
  c.status = status;
  return c;
}

NamedCheck named(std::string name, bool holds, std::string detail = {}) {
  return {std::move(name), holds, std::move(detail)};
}

std::string describe(const BiperiodicParams& p, long n, std::optional<long> r = std::nullopt) {
  std::ostringstream os;
  os << "a=" << p.a() << " b=" << p.b() << " n=" << n;
  if (r) os << " r=" << *r;
  return os.str();
}

// Accumulates "holds for every case" with the first counterexample as detail.
struct AllOf {
  std::string name;
  bool holds = true;
  std::string detail = {};

  void check(bool ok, const std::string& where) {
    if (!ok && holds) {
      holds = false;
      detail = "fails at " + where;
    }
  }
  NamedCheck result() const { return {name, holds, detail}; }
};

}  // namespace

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::binet:
      return "binet";
    case Suite::gf:
      return "gf";
    case Suite::catalan:
      return "catalan";
    case Suite::cassini:
      return "cassini";
  }
  return "?";
}

CheckCase to_case(const IdentityCheck& check) {
  CheckCase c;
  c.identity = std::string(to_string(check.name));
  c.a = check.params.a();
  c.b = check.params.b();
  c.n = check.n;
  c.r = check.r;
  c.lhs = check.lhs;
  c.rhs = check.rhs;
  c.delta = check.delta;
  c.status = check.status;
  c.residue = check.residue;
  c.out_of_hypothesis = check.out_of_hypothesis;
  c.variants = check.variants;
  return c;
}

void CheckReport::tally() {
  matched = 0;
  mismatched = 0;
  for (const CheckCase& c : cases) (c.status == Status::match ? matched : mismatched) += 1;
  if (mismatched == 0) {
    verdict = Verdict::confirmed;
  } else if (matched == 0) {
    verdict = Verdict::refuted;
  } else {
    verdict = Verdict::mixed;
  }
}

bool CheckReport::passed() const {
  for (const NamedCheck& c : consistency) {
    if (!c.holds) return false;
  }
  return is_identity_report || verdict == Verdict::confirmed;
}

CheckReport run_binet(const BiperiodicParams& params, long n_to, Execution exec) {
  params.require_distinct_roots();
  if (n_to < 0) throw PreconditionError("binet suite needs --to >= 0");
  SequenceCache cache(params);
  cache.fill(0, n_to + 5);
  const BinetConstants constants = binet_constants(params);

  const auto per_kind = static_cast<std::size_t>(n_to + 1);
  std::vector<std::optional<CheckCase>> slots(2 * per_kind);
  for_each_case(slots.size(), exec, [&](std::size_t i) {
    const long n = static_cast<long>(i % per_kind);
    if (i < per_kind) {
      slots[i] = compare_case<BigRational>("binet-scalar", params, n, cache.fib(n), binet_scalar(params, constants, n));
    } else {
      slots[i] = compare_case<RationalDualQuaternion>("binet-dualquat", params, n, cache.dual_fib_quat(n),
                                                      binet_dual_quat(params, constants, n));
    }
  });

  CheckReport report;
  report.identity = "binet";
  report.matrix = {params};
  report.ranges = {0, n_to, {}};
  report.cases = unwrap(std::move(slots));

  // Root relations used by the closed forms.
  const QuadElem& alpha = constants.alpha;
  const QuadElem& beta = constants.beta;
  const BigRational ab = params.ab();
  const DiscriminantPtr& disc = params.disc();
  auto rational = [&](const BigRational& q) { return QuadElem::rational(q, disc); };
  report.consistency.push_back(named("alpha+beta=ab", alpha + beta == rational(ab)));
  report.consistency.push_back(named("alpha*beta=-ab", alpha * beta == rational(-ab)));
  report.consistency.push_back(named("(alpha-beta)^2=D", (alpha - beta) * (alpha - beta) == rational(disc->value())));
  report.consistency.push_back(
      named("alpha^2+beta^2=ab(ab+2)", alpha * alpha + beta * beta == rational(ab * (ab + BigRational(2)))));
  const BigRational& a = params.a();
  const RationalDualQuaternion base({BigRational(0), BigRational(1), a, ab + BigRational(1)},
                                    {BigRational(1), a, ab + BigRational(1), a * (ab + BigRational(2))});
  report.consistency.push_back(named("binet Q~0 = (0,1,a,ab+1)+eps(1,a,ab+1,a(ab+2))",
                                     binet_dual_quat(params, constants, 0) == base));
  // The base-case argument also writes alpha - beta = -ab; recorded, not required.
  report.exploratory.push_back(named("alpha-beta=-ab (as written in the base case)", alpha - beta == rational(-ab),
                                     "alpha-beta = " + (alpha - beta).to_string()));
  report.tally();
  return report;
}

CheckReport run_gf(const BiperiodicParams& params, long scalar_order, long quaternion_order, Execution exec) {
  if (scalar_order < 0 || quaternion_order < 0) throw PreconditionError("gf suite needs non-negative orders");
  SequenceCache cache(params);
  cache.fill(0, std::max(scalar_order, quaternion_order) + 5);

  const ScalarSeries scalar = gf_scalar(params, scalar_order);
  const DualQuaternionSeries g = gf_dual_quat(params, quaternion_order);
  const bool reduced_applies = params.a() == params.b();
  std::optional<DualQuaternionSeries> reduced;
  if (reduced_applies) reduced = gf_dual_quat_reduced(params, quaternion_order);

  const auto n_scalar = static_cast<std::size_t>(scalar_order + 1);
  const auto n_quat = static_cast<std::size_t>(quaternion_order + 1);
  std::vector<std::optional<CheckCase>> slots(n_scalar + n_quat * (reduced_applies ? 2 : 1));
  for_each_case(slots.size(), exec, [&](std::size_t i) {
    if (i < n_scalar) {
      const long n = static_cast<long>(i);
      slots[i] = compare_case<BigRational>("gf-scalar", params, n, cache.fib(n), scalar.coeff(n));
      return;
    }
    const std::size_t j = i - n_scalar;
    const long n = static_cast<long>(j % n_quat);
    if (j < n_quat) {
      slots[i] = compare_case<RationalDualQuaternion>("gf-dualquat", params, n, cache.dual_fib_quat(n), g.coeff(n));
    } else {
      slots[i] =
          compare_case<RationalDualQuaternion>("gf-reduced", params, n, cache.dual_fib_quat(n), reduced->coeff(n));
    }
  });

  CheckReport report;
  report.identity = "gf";
  report.matrix = {params};
  report.ranges = {0, std::max(scalar_order, quaternion_order), {}};
  report.cases = unwrap(std::move(slots));
  // build_R/build_S throw if a negative power survives, so reaching here means they cancelled.
  report.consistency.push_back(named("R(t), S(t) negative powers cancel", true));
  const ProofStepCheck step = check_gf_proof_step(params, quaternion_order);
  report.exploratory.push_back(named("sum (Q_n - b Q_{n-1} - Q_{n-2}) t^n = (a-b) R(t)", !step.first_mismatch_R,
                                     step.first_mismatch_R ? "first mismatch at t^" + std::to_string(*step.first_mismatch_R)
                                                           : std::string{}));
  report.exploratory.push_back(named("sum (Q_{n+1} - b Q_n - Q_{n-1}) t^n = (a-b) S(t)", !step.first_mismatch_S,
                                     step.first_mismatch_S ? "first mismatch at t^" + std::to_string(*step.first_mismatch_S)
                                                           : std::string{}));
  report.tally();
  return report;
}

CheckReport run_report(IdentityName identity, const std::vector<BiperiodicParams>& matrix, const IndexRanges& ranges,
                       Mode mode, Execution exec) {
  struct GridCase {
    std::size_t ctx;
    long n;
    long r;  // catalan: r; cassini: m
  };

  long r_max = 0;
  for (long r : ranges.r_values) {
    if (r < 0) throw PreconditionError("r values must be non-negative");
    if (mode == Mode::strict && identity == IdentityName::catalan && parity(r) != 0) {
      throw PreconditionError("Catalan identity is stated for even r only (strict mode), got r=" + std::to_string(r));
    }
    r_max = std::max(r_max, r);
  }

  // Sequential cache fill, then read-only evaluation.
  std::vector<IdentityContext> contexts;
  contexts.reserve(matrix.size());
  for (const BiperiodicParams& p : matrix) contexts.emplace_back(p, -2, ranges.n_to + r_max + 4);

  std::vector<GridCase> grid;
  for (std::size_t k = 0; k < contexts.size(); ++k) {
    if (identity == IdentityName::catalan) {
      for (long n = ranges.n_from; n <= ranges.n_to; ++n) {
        for (long r : ranges.r_values) {
          if (n >= r) grid.push_back({k, n, r});
        }
      }
    } else {
      const bool odd = identity == IdentityName::cassini_odd;
      for (long m = 0; (odd ? 2 * m + 3 : 2 * m + 2) <= ranges.n_to; ++m) {
        const long n = odd ? 2 * m + 1 : 2 * m;
        if (n >= ranges.n_from) grid.push_back({k, n, m});
      }
    }
  }

  std::vector<std::optional<IdentityCheck>> slots(grid.size());
  for_each_case(grid.size(), exec, [&](std::size_t i) {
    const GridCase& g = grid[i];
    if (identity == IdentityName::catalan) {
      slots[i] = check_catalan(contexts[g.ctx], g.n, g.r, mode);
    } else {
      slots[i] = cassini(contexts[g.ctx], g.r, identity);
    }
  });
  const std::vector<IdentityCheck> checks = unwrap(std::move(slots));

  CheckReport report;
  report.identity = std::string(to_string(identity));
  report.is_identity_report = true;
  report.matrix = matrix;
  report.ranges = ranges;
  if (identity != IdentityName::catalan) report.ranges.r_values = {2};

  AllOf lhs_r0{"catalan_lhs(n,0) = 0"};
  AllOf rhs_r0{"catalan_rhs(n,0) = 0"};
  AllOf reduction{identity == IdentityName::cassini_odd ? "cassini-odd lhs = catalan_lhs(2m+1, 2)"
                                                        : "cassini-even lhs = catalan_lhs(2m, 2)"};
  std::vector<std::pair<std::string, std::size_t>> variant_matches;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const IdentityCheck& c = checks[i];
    const IdentityContext& ctx = contexts[grid[i].ctx];
    if (identity == IdentityName::catalan && c.r == 0) {
      lhs_r0.check(c.lhs == zero_like(c.lhs), describe(c.params, c.n));
      rhs_r0.check(c.rhs == zero_like(c.rhs) && !c.residue, describe(c.params, c.n));
    }
    if (identity != IdentityName::catalan && c.n >= 2) {
      reduction.check(c.lhs == catalan_lhs(ctx.cache(), c.n, 2), describe(c.params, c.n, 2));
    }
    for (const VariantOutcome& v : c.variants) {
      auto it = std::find_if(variant_matches.begin(), variant_matches.end(),
                             [&](const auto& e) { return e.first == v.name; });
      if (it == variant_matches.end()) it = variant_matches.insert(variant_matches.end(), {v.name, 0});
      if (v.status == Status::match) ++it->second;
    }
    report.cases.push_back(to_case(c));
  }
  if (identity == IdentityName::catalan) {
    report.consistency.push_back(lhs_r0.result());
    report.consistency.push_back(rhs_r0.result());
  } else {
    report.consistency.push_back(reduction.result());
  }
  for (const auto& [name, count] : variant_matches) {
    report.exploratory.push_back(named("variant " + name, count == checks.size(),
                                       std::to_string(count) + "/" + std::to_string(checks.size()) + " cases match"));
  }
  report.tally();
  return report;
}

std::vector<BiperiodicParams> default_parameter_matrix() {
  return {{1, 1}, {2, 2}, {3, 3}, {1, 2}, {2, 3}, {5, 7}};
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

}  // namespace bpdfq
