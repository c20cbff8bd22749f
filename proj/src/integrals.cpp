#include "egc/integrals.hpp"

#include "egc/errors.hpp"
#include "egc/quadrature.hpp"
#include "egc/reference.hpp"

namespace egc {

BigFloat IntegralValue::numeric(const BigFloat& delta_value,
                                const PrecisionContext& ctx) const {
  if (is_exact()) return delta_linear_eval(exact(), delta_value, ctx);
  return std::get<BigFloat>(value).rounded(ctx.working_bits());
}

DeltaLinear I_closed(long n) {
  if (n < 0) throw DomainError("I_n requires n >= 0");
  // sum_{j<n} j! (-1)^{j+1} = -alt_factorial_sum(n)
  const BigRat sign = n % 2 == 0 ? 1 : -1;
  return DeltaLinear(sign * BigRat(-alt_factorial_sum(n)), sign);
}

DeltaLinear I_recurrence(long n) {
  if (n < 0) throw DomainError("I_n requires n >= 0");
  DeltaLinear value = DeltaLinear::delta();
  BigInt fact = 1;  // (k-1)!
  for (long k = 1; k <= n; ++k) {
    if (k > 1) fact *= k - 1;
    value = DeltaLinear::constant(BigRat(fact)) - value;
  }
  return value;
}

DeltaLinear J_closed(long n) {
  if (n < 0) throw DomainError("J_n requires n >= 0");
  const BigInt n_fact = factorial(n);
  DeltaLinear sum;
  BigInt j_fact = 1;
  BigInt inner = 0;  // sum_{i<j} i! (-1)^{i+1}
  for (long j = 0; j <= n; ++j) {
    if (j > 0) {
      const BigInt i_fact = j_fact;  // (j-1)!
      inner += (j - 1) % 2 == 0 ? BigInt(-i_fact) : i_fact;
      j_fact *= j;
    }
    BigRat coeff = BigRat(BigInt(n_fact / j_fact));
    if (j % 2 == 1) coeff = -coeff;
    sum += DeltaLinear(coeff * BigRat(inner), coeff);
  }
  return sum;
}

IntegralValue integral_I(long n, IntegralValue::Provenance provenance,
                         const PrecisionContext& ctx) {
  switch (provenance) {
    case IntegralValue::Provenance::kClosedForm:
      return {I_closed(n), provenance};
    case IntegralValue::Provenance::kRecurrence:
      return {I_recurrence(n), provenance};
    case IntegralValue::Provenance::kQuadrature:
      if (n < 0) throw DomainError("I_n requires n >= 0");
      return {quad_semi_infinite(WeightedIntegrand::power_rational(n, 1, 1), ctx),
              provenance};
  }
  throw DomainError("unknown provenance");
}

IntegralValue integral_J(long n, IntegralValue::Provenance provenance,
                         const PrecisionContext& ctx) {
  switch (provenance) {
    case IntegralValue::Provenance::kClosedForm:
      return {J_closed(n), provenance};
    case IntegralValue::Provenance::kRecurrence: {
      // J_n = n J_{n-1} + I_n, from one integration by parts.
      if (n < 0) throw DomainError("J_n requires n >= 0");
      DeltaLinear j = DeltaLinear::delta();
      for (long k = 1; k <= n; ++k) j = j * BigRat(k) + I_recurrence(k);
      return {j, provenance};
    }
    case IntegralValue::Provenance::kQuadrature:
      if (n < 0) throw DomainError("J_n requires n >= 0");
      return {quad_semi_infinite(WeightedIntegrand::power_log(n, 1), ctx),
              provenance};
  }
  throw DomainError("unknown provenance");
}

BigFloat theorem_integral_quadrature(long k, const BigRat& u,
                                     const PrecisionContext& ctx,
                                     Execution policy) {
  if (u < 0) throw DomainError("theorem integral requires u >= 0");
  if (k < 0) throw DomainError("theorem integral requires k >= 0");
  if (u == 0) return ctx.zero();
  return quad_semi_infinite(WeightedIntegrand::power_log(k - 1, u), ctx,
                            policy);
}

BigFloat theorem_integral(long k, const BigRat& u, const PrecisionContext& ctx,
                          Execution policy) {
  if (u < 0) throw DomainError("theorem integral requires u >= 0");
  if (k < 0) throw DomainError("theorem integral requires k >= 0");
  if (u == 0) return ctx.zero();
  if (u == 1 && k >= 1) {
    return delta_linear_eval(J_closed(k - 1), delta_cached(ctx), ctx);
  }
  return theorem_integral_quadrature(k, u, ctx, policy);
}

BigFloat conjecture_integral(long k, const BigRat& u,
                             const PrecisionContext& ctx, Execution policy) {
  if (u <= 0) throw DomainError("conjecture integral requires u > 0");
  if (k < 1) throw DomainError("conjecture integral requires k >= 1");
  return theorem_integral(k, BigRat(1) / u, ctx, policy);
}

}  // namespace egc
