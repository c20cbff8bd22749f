#pragma once

// The two integral families
//
//   I_n = int_0^inf x^n e^{-x} / (x + 1) dx
//   J_n = int_0^inf x^n ln(x + 1) e^{-x} dx
//
// evaluated exactly in Q[delta], plus numeric evaluation of
// int_0^inf x^{k-1} e^{-x} ln(x u + 1) dx for rational u.

#include <variant>

#include "egc/bigfloat.hpp"
#include "egc/exactmath.hpp"
#include "egc/parallel.hpp"

namespace egc {

struct IntegralValue {
  enum class Provenance { kClosedForm, kRecurrence, kQuadrature };

  std::variant<DeltaLinear, BigFloat> value;
  Provenance provenance;

  bool is_exact() const { return std::holds_alternative<DeltaLinear>(value); }
  const DeltaLinear& exact() const { return std::get<DeltaLinear>(value); }
  // Exact values are evaluated at delta_value; numeric ones are returned.
  BigFloat numeric(const BigFloat& delta_value,
                   const PrecisionContext& ctx) const;
};

// (-1)^n (sum_{j<n} j! (-1)^{j+1} + delta)
DeltaLinear I_closed(long n);
// I_0 = delta, I_n = (n-1)! - I_{n-1}
DeltaLinear I_recurrence(long n);
// sum_{j=0}^{n} n!/j! (-1)^j (sum_{i<j} i! (-1)^{i+1} + delta)
DeltaLinear J_closed(long n);

IntegralValue integral_I(long n, IntegralValue::Provenance provenance,
                         const PrecisionContext& ctx);
IntegralValue integral_J(long n, IntegralValue::Provenance provenance,
                         const PrecisionContext& ctx);

// int_0^inf x^{k-1} e^{-x} ln(x u + 1) dx. For u = 1 and k >= 1 the exact
// J_{k-1} is evaluated at the cached reference delta; otherwise quadrature.
BigFloat theorem_integral(long k, const BigRat& u, const PrecisionContext& ctx,
                          Execution policy = Execution::kParallel);
// Always by quadrature, whatever u and k.
BigFloat theorem_integral_quadrature(long k, const BigRat& u,
                                     const PrecisionContext& ctx,
                                     Execution policy = Execution::kParallel);

// int_0^inf x^{k-1} e^{-x} ln((x + u) / u) dx = theorem_integral(k, 1/u).
BigFloat conjecture_integral(long k, const BigRat& u,
                             const PrecisionContext& ctx,
                             Execution policy = Execution::kParallel);

}  // namespace egc
