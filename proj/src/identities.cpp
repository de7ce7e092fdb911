#include "bpdfq/identities.hpp"

#include <sstream>
#include <string>
#include <utility>

#include "bpdfq/error.hpp"

namespace bpdfq {

std::string_view to_string(IdentityName name) {
  switch (name) {
    case IdentityName::catalan:
      return "catalan";
    case IdentityName::cassini_odd:
      return "cassini-odd";
    case IdentityName::cassini_even:
      return "cassini-even";
  }
  return "?";
}

std::string_view to_string(Status status) { return status == Status::match ? "match" : "mismatch"; }

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::confirmed:
      return "confirmed";
    case Verdict::refuted:
      return "refuted";
    case Verdict::mixed:
      return "mixed";
  }
  return "?";
}

std::string_view to_string(RhsForm form) {
  switch (form) {
    case RhsForm::printed:
      return "printed";
    case RhsForm::reversed_products:
      return "reversed-products";
    case RhsForm::uniform_denominator:
      return "uniform-denominator";
  }
  return "?";
}

namespace {

// Q~_p Q~_q - Q~_s Q~_s without index preconditions.
RationalDualQuaternion product_difference(const SequenceCache& cache, long p, long q, long s) {
  const RationalDualQuaternion qs = cache.dual_fib_quat(s);
  return cache.dual_fib_quat(p) * cache.dual_fib_quat(q) - qs * qs;
}

// Evaluates the printed displays. `mul` honours the requested product order.
class RhsEvaluator {
 public:
  RhsEvaluator(const BiperiodicParams& params, const BinetConstants& c, bool reversed)
      : c_(c), reversed_(reversed), ab_(params.ab()), diff_sq_((c.alpha - c.beta) * (c.alpha - c.beta)) {}

  QuadQuaternion mul(const QuadQuaternion& x, const QuadQuaternion& y) const { return reversed_ ? y * x : x * y; }

  // (ab)^r - beta^{2r} and (ab)^r - alpha^{2r}
  std::pair<QuadElem, QuadElem> weights(long r) const {
    const QuadElem abr = QuadElem::rational(ab_.pow(r), c_.alpha.disc());
    return {abr - c_.beta.pow(2 * r), abr - c_.alpha.pow(2 * r)};
  }

  // 1 / ((ab)^e (alpha - beta)^2)
  QuadElem denominator_inverse(long e) const { return diff_sq_.inverse() * ab_.pow(-e); }

  const BinetConstants& c() const { return c_; }

 private:
  const BinetConstants& c_;
  bool reversed_;
  BigRational ab_;
  QuadElem diff_sq_;
};

}  // namespace

IdentityContext::IdentityContext(BiperiodicParams params, long min_index, long max_index)
    : cache_(params), constants_(binet_constants(params)) {
  cache_.fill(min_index, max_index + 4);
}

RationalDualQuaternion catalan_lhs(const SequenceCache& cache, long n, long r) {
  if (r < 0 || n < r) {
    throw PreconditionError("Catalan identity needs n >= r >= 0, got n=" + std::to_string(n) +
                            ", r=" + std::to_string(r));
  }
  return product_difference(cache, n - r, n + r, n);
}

RationalDualQuaternion catalan_lhs(const BiperiodicParams& params, long n, long r) {
  SequenceCache cache(params);
  if (r >= 0 && n >= r) cache.fill(n - r, n + r + 4);
  return catalan_lhs(std::as_const(cache), n, r);
}

QuadDualQuaternion catalan_rhs_exact(const BiperiodicParams& params, const BinetConstants& constants, long n, long r,
                                     RhsForm form, Mode mode) {
  if (r < 0) throw PreconditionError("Catalan identity needs r >= 0, got r=" + std::to_string(r));
  if (mode == Mode::strict && parity(r) != 0) {
    throw PreconditionError("Catalan identity is stated for even r only (strict mode), got r=" + std::to_string(r));
  }
  const RhsEvaluator ev(params, constants, form == RhsForm::reversed_products);
  const BinetConstants& c = ev.c();
  const auto [wb, wa] = ev.weights(r);
  const QuadElem& alpha = c.alpha;
  const QuadElem& beta = c.beta;

  if (parity(n) == 0) {
    const QuadElem scale = ev.denominator_inverse(r);
    QuadQuaternion primal = (ev.mul(c.alpha_star, c.beta_star).scaled(wb) + ev.mul(c.beta_star, c.alpha_star).scaled(wa))
                                .scaled(scale);
    QuadQuaternion dual = ((ev.mul(c.alpha_star2, c.beta_star).scaled(alpha) +
                            ev.mul(c.alpha_star, c.beta_star2).scaled(beta))
                               .scaled(wb) +
                           (ev.mul(c.beta_star, c.alpha_star2).scaled(alpha) +
                            ev.mul(c.beta_star2, c.alpha_star).scaled(beta))
                               .scaled(wa))
                              .scaled(scale);
    return {std::move(primal), std::move(dual)};
  }

  const long primal_exp = form == RhsForm::uniform_denominator ? r : r - 1;
  QuadQuaternion primal =
      -(ev.mul(c.alpha_star2, c.beta_star2).scaled(wb) + ev.mul(c.beta_star2, c.alpha_star2).scaled(wa))
           .scaled(ev.denominator_inverse(primal_exp));
  QuadQuaternion dual = -((ev.mul(c.alpha_star, c.beta_star2).scaled(alpha) +
                           ev.mul(c.alpha_star2, c.beta_star).scaled(beta))
                              .scaled(wb) +
                          (ev.mul(c.beta_star, c.alpha_star2).scaled(beta) +
                           ev.mul(c.beta_star2, c.alpha_star).scaled(alpha))
                              .scaled(wa))
                             .scaled(ev.denominator_inverse(r));
  return {std::move(primal), std::move(dual)};
}

RationalDualQuaternion catalan_rhs(const BiperiodicParams& params, long n, long r, RhsForm form, Mode mode) {
  const CollapsedDualQuaternion value = collapse(catalan_rhs_exact(params, binet_constants(params), n, r, form, mode));
  if (!value.is_rational()) {
    std::ostringstream msg;
    msg << "Catalan right-hand side at n=" << n << ", r=" << r << " keeps sqrt(D) part " << value.residue;
    throw ConsistencyFailure(msg.str());
  }
  return value.rational;
}

RationalDualQuaternion cassini_lhs(const SequenceCache& cache, long m, IdentityName parity_kind) {
  if (parity_kind == IdentityName::cassini_odd) return product_difference(cache, 2 * m - 1, 2 * m + 3, 2 * m + 1);
  if (parity_kind == IdentityName::cassini_even) return product_difference(cache, 2 * m - 2, 2 * m + 2, 2 * m);
  throw PreconditionError("cassini_lhs needs cassini-odd or cassini-even");
}

QuadDualQuaternion cassini_rhs_exact(const BiperiodicParams& params, const BinetConstants& c,
                                     IdentityName parity_kind) {
  const RhsEvaluator ev(params, c, false);
  const auto [wb, wa] = ev.weights(2);  // (ab)^2 - beta^4, (ab)^2 - alpha^4
  const QuadElem& alpha = c.alpha;
  const QuadElem& beta = c.beta;

  if (parity_kind == IdentityName::cassini_odd) {
    QuadQuaternion primal =
        -((c.alpha_star2 * c.beta_star2).scaled(wb) + (c.beta_star2 * c.alpha_star2).scaled(wa))
             .scaled(ev.denominator_inverse(1));
    QuadQuaternion dual =
        -(((c.alpha_star * c.beta_star2).scaled(wb) + (c.beta_star2 * c.alpha_star).scaled(wa)).scaled(alpha) +
          ((c.beta_star * c.alpha_star2).scaled(wa) + (c.alpha_star2 * c.beta_star).scaled(wb)).scaled(beta))
             .scaled(ev.denominator_inverse(2));
    return {std::move(primal), std::move(dual)};
  }
  if (parity_kind != IdentityName::cassini_even) throw PreconditionError("cassini_rhs needs cassini-odd or cassini-even");

  const QuadElem scale = ev.denominator_inverse(2);
  QuadQuaternion primal = ((c.alpha_star * c.beta_star).scaled(wb) + (c.beta_star * c.alpha_star).scaled(wa)).scaled(scale);
  QuadQuaternion dual =
      ((c.alpha_star2 * c.beta_star).scaled(alpha) + (c.alpha_star * c.beta_star2).scaled(beta)).scaled(wb).scaled(scale) +
      ((c.beta_star * c.alpha_star2).scaled(alpha) + (c.beta_star2 * c.alpha_star).scaled(beta)).scaled(wa).scaled(scale);
  return {std::move(primal), std::move(dual)};
}

namespace {

IdentityCheck adjudicate(IdentityName name, const BiperiodicParams& params, long n, long r, RationalDualQuaternion lhs,
                         const QuadDualQuaternion& rhs_exact) {
  CollapsedDualQuaternion rhs = collapse(rhs_exact);
  const bool rational = rhs.is_rational();
  RationalDualQuaternion delta = lhs - rhs.rational;
  const Status status = rational && delta == zero_like(delta) ? Status::match : Status::mismatch;
  IdentityCheck check{name,   params, n, r, std::move(lhs), std::move(rhs.rational), status, std::move(delta),
                      std::nullopt, false, {}};
  if (!rational) check.residue = std::move(rhs.residue);
  return check;
}

Status compare(const RationalDualQuaternion& lhs, const QuadDualQuaternion& rhs_exact) {
  const CollapsedDualQuaternion rhs = collapse(rhs_exact);
  return rhs.is_rational() && rhs.rational == lhs ? Status::match : Status::mismatch;
}

}  // namespace

IdentityCheck check_catalan(const IdentityContext& ctx, long n, long r, Mode mode) {
  const BiperiodicParams& params = ctx.params();
  IdentityCheck check = adjudicate(IdentityName::catalan, params, n, r, catalan_lhs(ctx.cache(), n, r),
                                   catalan_rhs_exact(params, ctx.constants(), n, r, RhsForm::printed, mode));
  check.out_of_hypothesis = parity(r) != 0;
  check.variants.push_back({std::string(to_string(RhsForm::reversed_products)),
                            compare(check.lhs, catalan_rhs_exact(params, ctx.constants(), n, r,
                                                                 RhsForm::reversed_products, mode))});
  if (parity(n) == 1) {
    check.variants.push_back({std::string(to_string(RhsForm::uniform_denominator)),
                              compare(check.lhs, catalan_rhs_exact(params, ctx.constants(), n, r,
                                                                   RhsForm::uniform_denominator, mode))});
  }
  return check;
}

IdentityCheck cassini(const IdentityContext& ctx, long m, IdentityName parity_kind) {
  const BiperiodicParams& params = ctx.params();
  const long n = parity_kind == IdentityName::cassini_odd ? 2 * m + 1 : 2 * m;
  IdentityCheck check = adjudicate(parity_kind, params, n, 2, cassini_lhs(ctx.cache(), m, parity_kind),
                                   cassini_rhs_exact(params, ctx.constants(), parity_kind));
  check.variants.push_back(
      {"catalan-r2", compare(check.lhs, catalan_rhs_exact(params, ctx.constants(), n, 2, RhsForm::printed))});
  return check;
}

IdentityCheck cassini(const BiperiodicParams& params, long m, IdentityName parity_kind) {
  const IdentityContext ctx(params, 2 * m - 2, 2 * m + 3);
  return cassini(ctx, m, parity_kind);
}

}  // namespace bpdfq
