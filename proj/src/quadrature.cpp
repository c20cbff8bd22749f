#include "egc/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "egc/errors.hpp"

namespace egc {

namespace {

constexpr double kLn10 = 2.302585092994045684;
constexpr double kPi = 3.14159265358979323846;
constexpr int kTanhSinhMaxLevel = 12;
// Extra bits carried through node evaluation and summation.
constexpr mpfr_prec_t kQuadGuardBits = 24;

bool is_integral(const BigRat& q) { return q.get_den() == 1; }

// Integrand with its exponent pre-rounded to the working precision.
class Evaluator {
 public:
  Evaluator(const WeightedIntegrand& f, mpfr_prec_t bits)
      : f_(f), exponent_(bits, f.exponent), scale_(bits, f.scale) {
    if (is_integral(f.exponent) && f.exponent.get_num().fits_slong_p()) {
      int_exponent_ = f.exponent.get_num().get_si();
    }
  }

  BigFloat operator()(const BigFloat& x) const {
    BigFloat value = int_exponent_ ? pow(x, *int_exponent_) : pow(x, exponent_);
    value *= exp(-x);
    switch (f_.kind) {
      case WeightedIntegrand::Kind::kPower:
        break;
      case WeightedIntegrand::Kind::kPowerLog:
        value *= log1p(scale_ * x);
        break;
      case WeightedIntegrand::Kind::kPowerRational: {
        BigFloat base = scale_ * x;
        base += 1;
        value *= pow(base, -f_.rational_power);
        break;
      }
    }
    return value;
  }

 private:
  const WeightedIntegrand& f_;
  BigFloat exponent_;
  BigFloat scale_;
  std::optional<long> int_exponent_;
};

// Exponent of the x^a-type behaviour at the origin.
BigRat origin_exponent(const WeightedIntegrand& f) {
  if (f.kind == WeightedIntegrand::Kind::kPowerLog) return f.exponent + 1;
  return f.exponent;
}

void check_integrable(const WeightedIntegrand& f) {
  if (f.scale < 0) throw DomainError("integrand scale must be >= 0");
  if (f.kind == WeightedIntegrand::Kind::kPowerRational &&
      f.rational_power < 0) {
    throw DomainError("rational power must be >= 0");
  }
  if (origin_exponent(f) <= -1) {
    throw NonIntegrable("integrand behaves like x^" +
                        to_string(origin_exponent(f)) + " at the origin");
  }
}

bool vanishes(const WeightedIntegrand& f) {
  return f.kind == WeightedIntegrand::Kind::kPowerLog && f.scale == 0;
}

// Tanh-sinh node t mapped to (0, 1): x = 1 / (1 + e^{-2s}), s = pi/2 sinh t.
// Returns weight * f(x); both x and 1 - x are formed without cancellation.
BigFloat tanh_sinh_term(const Evaluator& f, const BigFloat& t,
                        const BigFloat& pi) {
  const mpfr_prec_t bits = t.precision();
  BigFloat s = pi * sinh(t);
  s /= 2;
  const BigFloat e = exp(s * -2L);
  BigFloat denom = e + 1;
  const BigFloat x = BigFloat(bits, 1L) / denom;
  const BigFloat one_minus_x = e / denom;
  BigFloat w = pi * cosh(t);
  w *= x;
  w *= one_minus_x;
  if (x.is_zero() || w.is_zero()) return BigFloat(bits);
  return w * f(x);
}

BigFloat integrate_lower(const Evaluator& f, const QuadratureSpec& spec,
                         const PrecisionContext& ctx, mpfr_prec_t bits,
                         Execution policy) {
  const BigFloat pi = BigFloat::pi(bits);
  const long half = std::lround(spec.ts_half_width.to_double());
  const BigFloat tol = ctx.tolerance().rounded(bits);

  auto level_sum = [&](long count, auto&& node_at) {
    auto terms = map_indices<BigFloat>(
        static_cast<std::size_t>(count), policy,
        [&](std::size_t i) { return tanh_sinh_term(f, node_at(static_cast<long>(i)), pi); });
    BigFloat sum(bits);
    for (const auto& t : terms) sum += t;
    return sum;
  };

  // Level 0: integer nodes -half..half.
  BigFloat estimate = level_sum(2 * half + 1, [&](long i) {
    return BigFloat(bits, i - half);
  });
  for (int level = 1; level <= spec.ts_max_level; ++level) {
    const long per_unit = 1L << (level - 1);
    BigFloat h = BigFloat(bits, 1L);
    mpfr_div_2ui(h.get(), h.get(), static_cast<unsigned long>(level), MPFR_RNDN);
    // New nodes are the odd multiples of h inside [-half, half].
    const long count = 2 * half * per_unit;
    BigFloat fresh = level_sum(count, [&](long i) {
      return BigFloat(bits, 2 * (i - half * per_unit) + 1) * h;
    });
    BigFloat next = estimate;
    mpfr_div_2ui(next.get(), next.get(), 1, MPFR_RNDN);
    next += fresh * h;
    const BigFloat diff = abs(next - estimate);
    estimate = std::move(next);
    // Each level roughly squares the relative error, so once the change
    // drops below sqrt(tol) the next estimate is already below tol.
    BigFloat scale = abs(estimate);
    if (scale < BigFloat(bits, 1L)) scale = BigFloat(bits, 1L);
    if (level >= 3 && diff * diff <= tol * scale * scale) return estimate;
  }
  throw PrecisionUnreachable("tanh-sinh did not converge within " +
                             std::to_string(spec.ts_max_level) + " levels");
}

BigFloat integrate_upper(const Evaluator& f, const QuadratureSpec& spec,
                         mpfr_prec_t bits, Execution policy) {
  const auto& rule = gauss_legendre(spec.gl_points, bits);
  const std::size_t per_panel = rule.nodes.size();
  const std::size_t panels = spec.panel_edges.size() - 1;
  auto terms = map_indices<BigFloat>(
      panels * per_panel, policy, [&](std::size_t idx) {
        const std::size_t p = idx / per_panel;
        const std::size_t k = idx % per_panel;
        BigFloat half_width = spec.panel_edges[p + 1] - spec.panel_edges[p];
        half_width /= 2;
        BigFloat mid = spec.panel_edges[p + 1] + spec.panel_edges[p];
        mid /= 2;
        const BigFloat x = mid + half_width * rule.nodes[k];
        return half_width * rule.weights[k] * f(x);
      });
  BigFloat sum(bits);
  for (const auto& t : terms) sum += t;
  return sum;
}

// Smallest integer X >= max(2c, X0) with 2 K X^c e^{-X} < 10^-(D+g).
double choose_truncation(long degree, double multiplier, int total_digits) {
  const double target = -total_digits * kLn10;
  double x = std::max(2.0 * degree, std::ceil(total_digits * kLn10));
  auto log_bound = [&](double X) {
    return std::log(2.0 * multiplier) + degree * std::log(X) - X;
  };
  while (log_bound(x) >= target) x += 1.0;
  return x;
}

}  // namespace

WeightedIntegrand WeightedIntegrand::power(BigRat exponent) {
  WeightedIntegrand f;
  f.kind = Kind::kPower;
  f.exponent = std::move(exponent);
  return f;
}

WeightedIntegrand WeightedIntegrand::power_log(BigRat exponent, BigRat scale) {
  WeightedIntegrand f;
  f.kind = Kind::kPowerLog;
  f.exponent = std::move(exponent);
  f.scale = std::move(scale);
  return f;
}

WeightedIntegrand WeightedIntegrand::power_rational(BigRat exponent,
                                                    BigRat scale,
                                                    long rational_power) {
  WeightedIntegrand f;
  f.kind = Kind::kPowerRational;
  f.exponent = std::move(exponent);
  f.scale = std::move(scale);
  f.rational_power = rational_power;
  return f;
}

long WeightedIntegrand::envelope_degree() const {
  // ln(1 + b x) <= b x, so the log factor adds one degree.
  BigRat c = exponent;
  if (kind == Kind::kPowerLog) c += 1;
  if (c <= 0) return 0;
  BigInt ceil_c;
  mpz_cdiv_q(ceil_c.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
  return ceil_c.get_si();
}

QuadratureSpec::QuadratureSpec()
    : ts_half_width(64), truncation_x(64), tail_bound(64) {}

QuadratureSpec plan_quadrature(const WeightedIntegrand& f,
                               const PrecisionContext& ctx) {
  const double multiplier =
      f.kind == WeightedIntegrand::Kind::kPowerLog
          ? std::max(1.0, f.scale.get_d())
          : 1.0;
  return plan_quadrature(
      f, ctx,
      choose_truncation(f.envelope_degree(), multiplier, ctx.total_digits()));
}

QuadratureSpec plan_quadrature(const WeightedIntegrand& f,
                               const PrecisionContext& ctx,
                               double truncation_x) {
  check_integrable(f);
  const mpfr_prec_t bits = ctx.working_bits() + kQuadGuardBits;
  QuadratureSpec spec;

  // Half-width T of the tanh-sinh window: both ends decay like
  // exp(-pi sinh(T) * m) where m = min(1, 1 + origin exponent).
  const double m = std::min(1.0, 1.0 + origin_exponent(f).get_d());
  const double sinh_t = (ctx.total_digits() * kLn10 + 20.0) / (kPi * m);
  spec.ts_half_width = BigFloat(bits, static_cast<long>(std::ceil(std::asinh(sinh_t))));
  spec.ts_max_level = kTanhSinhMaxLevel;

  spec.gl_points = static_cast<int>(std::ceil(0.7 * ctx.total_digits())) + 8;
  const double x_max = std::max(truncation_x, 2.0);
  spec.truncation_x = BigFloat(bits, static_cast<long>(std::ceil(x_max)));
  double edge = 1.0;
  spec.panel_edges.emplace_back(bits, 1L);
  while (edge < x_max) {
    edge = std::min({2.0 * edge, edge + 4.0, std::ceil(x_max)});
    spec.panel_edges.emplace_back(bits, static_cast<long>(edge));
  }

  const long degree = f.envelope_degree();
  BigRat multiplier = 2;
  if (f.kind == WeightedIntegrand::Kind::kPowerLog && f.scale > 1) {
    multiplier *= f.scale;
  }
  BigFloat bound = pow(spec.truncation_x, degree) * exp(-spec.truncation_x);
  bound *= BigFloat(bits, multiplier);
  spec.tail_bound = std::move(bound);
  return spec;
}

BigFloat quad_semi_infinite(const WeightedIntegrand& f,
                            const PrecisionContext& ctx, Execution policy) {
  check_integrable(f);
  if (vanishes(f)) return ctx.zero();
  return quad_semi_infinite(f, ctx, plan_quadrature(f, ctx), policy);
}

BigFloat quad_semi_infinite(const WeightedIntegrand& f,
                            const PrecisionContext& ctx,
                            const QuadratureSpec& spec, Execution policy) {
  check_integrable(f);
  if (vanishes(f)) return ctx.zero();
  const mpfr_prec_t bits = ctx.working_bits() + kQuadGuardBits;
  const Evaluator eval(f, bits);
  BigFloat total = integrate_lower(eval, spec, ctx, bits, policy);
  total += integrate_upper(eval, spec, bits, policy);
  return total.rounded(ctx.working_bits());
}

namespace {

GaussLegendreRule compute_gauss_legendre(int n, mpfr_prec_t bits) {
  const mpfr_prec_t wp = bits + 16;
  GaussLegendreRule rule;
  rule.nodes.assign(static_cast<size_t>(n), BigFloat(bits));
  rule.weights.assign(static_cast<size_t>(n), BigFloat(bits));
  BigFloat eps = BigFloat(wp, 1L);
  mpfr_div_2ui(eps.get(), eps.get(), static_cast<unsigned long>(bits + 8),
               MPFR_RNDN);

  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Largest roots first; mirrored below.
    BigFloat x = BigFloat::parse(
        wp, std::to_string(std::cos(kPi * (i + 0.75) / (n + 0.5))));
    BigFloat derivative(wp);
    for (int iter = 0; iter < 100; ++iter) {
      BigFloat p_prev(wp, 1L);
      BigFloat p = x;
      for (int k = 1; k < n; ++k) {
        BigFloat p_next = x * p;
        p_next *= 2L * k + 1;
        p_next -= p_prev * static_cast<long>(k);
        p_next /= static_cast<long>(k + 1);
        p_prev = std::move(p);
        p = std::move(p_next);
      }
      // P_n'(x) = n (x P_n - P_{n-1}) / (x^2 - 1)
      derivative = x * p - p_prev;
      derivative *= static_cast<long>(n);
      BigFloat x2m1 = x * x;
      x2m1 -= 1;
      derivative /= x2m1;
      const BigFloat dx = p / derivative;
      x -= dx;
      if (abs(dx) < eps) break;
    }
    BigFloat one_minus_x2 = x * x;
    one_minus_x2 = BigFloat(wp, 1L) - one_minus_x2;
    BigFloat w = BigFloat(wp, 2L) / (one_minus_x2 * derivative * derivative);
    const auto hi = static_cast<size_t>(n - 1 - i);
    const auto lo = static_cast<size_t>(i);
    rule.nodes[hi] = x.rounded(bits);
    rule.nodes[lo] = (-x).rounded(bits);
    rule.weights[hi] = w.rounded(bits);
    rule.weights[lo] = w.rounded(bits);
  }
  if (n % 2 == 1) rule.nodes[static_cast<size_t>(n / 2)] = BigFloat(bits);
  return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int n, mpfr_prec_t bits) {
  if (n < 1) throw DomainError("Gauss-Legendre rule needs n >= 1");
  static std::mutex mutex;
  static std::map<std::pair<int, mpfr_prec_t>,
                  std::unique_ptr<GaussLegendreRule>>
      cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, bits}];
  if (!slot) {
    slot = std::make_unique<GaussLegendreRule>(compute_gauss_legendre(n, bits));
  }
  return *slot;
}

}  // namespace egc
