#include "egc/reference.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "egc/errors.hpp"
#include "egc/quadrature.hpp"

namespace egc {

namespace {

constexpr double kLn10 = 2.302585092994045684;
constexpr double kLog2Of2Pi = 2.651496129472318798;
constexpr mpfr_prec_t kGuardBits = 32;

// Gamma(z + 1) for z >= 0 by Spouge's formula with parameter a.
BigFloat spouge(const BigFloat& z, long a, mpfr_prec_t bits) {
  const BigFloat zz = z.rounded(bits);
  BigFloat two_pi = BigFloat::pi(bits) * 2L;
  BigFloat series = sqrt(two_pi);
  BigFloat k_fact(bits, 1L);  // (k-1)!
  for (long k = 1; k < a; ++k) {
    if (k > 1) k_fact *= k - 1;
    const BigFloat base(bits, a - k);
    BigFloat half(bits, 2 * k - 1);
    half /= 2L;
    BigFloat c = pow(base, half) * exp(base);
    c /= k_fact;
    if (k % 2 == 0) c = -c;
    BigFloat denom = zz + k;
    series += c / denom;
  }
  BigFloat shifted = zz + a;
  BigFloat power = zz;
  power += BigFloat(bits, 1L) / BigFloat(bits, 2L);
  BigFloat out = pow(shifted, power) * exp(-shifted);
  out *= series;
  return out;
}

}  // namespace

long spouge_parameter(const PrecisionContext& ctx) {
  // log10 of a^{-1/2} (2 pi)^{-(a+1/2)}
  const double target = -static_cast<double>(ctx.total_digits());
  const double log10_2pi = std::log10(2.0 * 3.14159265358979323846);
  long a = 2;
  while (-0.5 * std::log10(static_cast<double>(a)) - (a + 0.5) * log10_2pi >=
         target) {
    ++a;
  }
  return a;
}

BigFloat gamma_real(const BigFloat& x, const PrecisionContext& ctx) {
  if (!x.is_finite()) throw DomainError("gamma_real of a non-finite value");
  if (x.is_integer() && x.sign() <= 0) {
    throw PoleError("Gamma has a pole at " + x.to_string(20));
  }
  const long a = spouge_parameter(ctx);
  // Spouge's coefficients alternate with magnitude up to ~(2 pi)^a.
  const mpfr_prec_t bits = ctx.working_bits() + kGuardBits +
                           static_cast<mpfr_prec_t>(std::ceil(a * kLog2Of2Pi));
  BigFloat arg = x.rounded(bits);
  BigFloat divisor(bits, 1L);
  while (arg < BigFloat(bits, 1L)) {
    divisor *= arg;
    arg += 1;
  }
  BigFloat z = arg - BigFloat(bits, 1L);
  BigFloat out = spouge(z, a, bits) / divisor;
  return out.rounded(ctx.working_bits());
}

BigFloat digamma(const BigFloat& u, const PrecisionContext& ctx) {
  if (!u.is_finite() || u.sign() <= 0) {
    throw DomainError("digamma requires u > 0");
  }
  const mpfr_prec_t bits = ctx.working_bits() + kGuardBits;
  const BigFloat tol = ctx.tolerance().rounded(bits);
  // The smallest asymptotic term is about e^{-2 pi x}.
  const double threshold = ctx.total_digits() * kLn10 / (2.0 * 3.14159265358979) + 2.0;

  BigFloat x = u.rounded(bits);
  BigFloat shift_sum(bits);
  for (double extra = 0.0;; extra += 5.0) {
    while (x.to_double() < threshold + extra) {
      shift_sum += BigFloat(bits, 1L) / x;
      x += 1;
    }
    BigFloat value = log(x);
    value -= BigFloat(bits, 1L) / (x * 2L);
    const BigFloat inv_x2 = BigFloat(bits, 1L) / (x * x);
    BigFloat power = inv_x2;  // x^{-2n}
    BigFloat previous_term(bits);
    bool converged = false;
    for (long n = 1; n < 10000; ++n) {
      BigFloat term = BigFloat(bits, bernoulli(2 * n)) * power;
      term /= 2 * n;
      if (n > 1 && abs(term) >= abs(previous_term)) break;  // diverging
      value -= term;
      if (abs(term) < tol) {
        converged = true;
        break;
      }
      previous_term = std::move(term);
      power *= inv_x2;
    }
    if (converged) {
      value -= shift_sum;
      return value.rounded(ctx.working_bits());
    }
  }
}

BigFloat euler_gamma(const PrecisionContext& ctx) {
  return -digamma(ctx.from(1), ctx);
}

BigFloat exp_integral_e1_at_one(const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.working_bits() + kGuardBits;
  const PrecisionContext inner(ctx.decimal_digits(), ctx.guard_digits() + 10);
  const BigFloat tol = ctx.tolerance().rounded(bits);
  BigFloat sum(bits);
  BigFloat k_fact(bits, 1L);
  for (long k = 1;; ++k) {
    k_fact *= k;
    BigFloat term = BigFloat(bits, 1L) / (k_fact * k);
    if (k % 2 == 0) term = -term;
    sum += term;
    if (abs(term) < tol) break;
  }
  sum -= euler_gamma(inner).rounded(bits);
  return sum.rounded(ctx.working_bits());
}

BigFloat delta_reference(const PrecisionContext& ctx, DeltaMethod method,
                         Execution policy) {
  auto by_quadrature = [&] {
    return quad_semi_infinite(WeightedIntegrand::power_log(0, 1), ctx, policy);
  };
  auto by_series = [&] {
    const mpfr_prec_t bits = ctx.working_bits() + kGuardBits;
    BigFloat e = exp(BigFloat(bits, 1L));
    return (e * exp_integral_e1_at_one(ctx)).rounded(ctx.working_bits());
  };
  switch (method) {
    case DeltaMethod::kQuadrature:
      return by_quadrature();
    case DeltaMethod::kETimesE1:
      return by_series();
    case DeltaMethod::kCrossValidated: {
      BigFloat q = by_quadrature();
      BigFloat s = by_series();
      if (abs(q - s) > ctx.output_tolerance()) {
        throw CrossCheckFailure("delta: quadrature " + q.to_string(ctx.total_digits()) +
                                " vs e*E1(1) " + s.to_string(ctx.total_digits()));
      }
      return s;
    }
  }
  throw DomainError("unknown delta method");
}

BigFloat delta_cached(const PrecisionContext& ctx) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, BigFloat> cache;
  const std::pair<int, int> key{ctx.decimal_digits(), ctx.guard_digits()};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  BigFloat value = delta_reference(ctx, DeltaMethod::kCrossValidated);
  std::lock_guard lock(mutex);
  return cache.try_emplace(key, std::move(value)).first->second;
}

}  // namespace egc
