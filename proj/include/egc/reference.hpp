#pragma once

// Reference evaluators: Gamma, digamma, Euler's constant, E1(1) and two
// independent routes to the Euler-Gompertz constant.

#include "egc/bigfloat.hpp"
#include "egc/exactmath.hpp"
#include "egc/parallel.hpp"

namespace egc {

// Spouge's approximation after shifting the argument to [1, 2); recurrence
// back down. Throws PoleError at nonpositive integers.
BigFloat gamma_real(const BigFloat& x, const PrecisionContext& ctx);

// Smallest Spouge parameter whose relative error bound
// a^{-1/2} (2 pi)^{-(a + 1/2)} is below 10^-(D+g).
long spouge_parameter(const PrecisionContext& ctx);

// psi(u) for u > 0: shift upward until the first omitted term of the
// Bernoulli asymptotic series is below tolerance. Throws DomainError for
// u <= 0.
BigFloat digamma(const BigFloat& u, const PrecisionContext& ctx);

// gamma = -psi(1).
BigFloat euler_gamma(const PrecisionContext& ctx);

// E1(1) = -gamma + sum_{k>=1} (-1)^{k+1} / (k k!).
BigFloat exp_integral_e1_at_one(const PrecisionContext& ctx);

enum class DeltaMethod { kQuadrature, kETimesE1, kCrossValidated };

// Euler-Gompertz constant. kCrossValidated computes both routes and throws
// CrossCheckFailure if they differ by more than 10^-D.
BigFloat delta_reference(const PrecisionContext& ctx,
                         DeltaMethod method = DeltaMethod::kCrossValidated,
                         Execution policy = Execution::kParallel);

// Cross-validated delta, computed once per precision context and shared.
BigFloat delta_cached(const PrecisionContext& ctx);

}  // namespace egc
