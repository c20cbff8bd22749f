#include <doctest.h>

#include "egc/errors.hpp"
#include "egc/quadrature.hpp"
#include "oracles.hpp"

using namespace egc;

TEST_SUITE("quadrature") {

TEST_CASE("Gauss-Legendre rule") {
  const mpfr_prec_t bits = 256;
  const BigFloat tol = BigFloat::pow10(bits, -70);
  for (int n : {5, 16, 33}) {
    const auto& rule = gauss_legendre(n, bits);
    REQUIRE(rule.nodes.size() == static_cast<std::size_t>(n));
    for (int i = 1; i < n; ++i) CHECK(rule.nodes[i - 1] < rule.nodes[i]);
    // Exact for degree <= 2n - 1.
    for (int k = 0; k <= 2 * n - 1; ++k) {
      BigFloat s(bits);
      for (int i = 0; i < n; ++i) s += rule.weights[i] * pow(rule.nodes[i], long(k));
      const BigFloat want =
          k % 2 == 0 ? BigFloat(bits, BigRat(2, k + 1)) : BigFloat(bits, 0L);
      CAPTURE(n);
      CAPTURE(k);
      CHECK(abs(s - want) < tol);
    }
    CHECK(&gauss_legendre(n, bits) == &rule);
  }
}

TEST_CASE("power integrand gives Gamma(a + 1)") {
  const PrecisionContext ctx(40);
  const mpfr_prec_t bits = ctx.working_bits();
  const BigFloat tol = ctx.output_tolerance();
  for (const BigRat& a : {BigRat(0), BigRat(3), BigRat(-1, 2), BigRat(5, 2),
                          BigRat(-9, 10), BigRat(12)}) {
    CAPTURE(to_string(a));
    const BigFloat got = quad_semi_infinite(WeightedIntegrand::power(a), ctx);
    const BigFloat want = oracle::gamma(ctx.from(a + 1), bits + 64);
    CHECK(abs(got - want) < tol * abs(want));
  }
}

TEST_CASE("log and rational integrands against E1") {
  const PrecisionContext ctx(40);
  const mpfr_prec_t bits = ctx.working_bits() + 64;
  const BigFloat tol = ctx.output_tolerance();
  for (const BigRat& b : {BigRat(1), BigRat(2), BigRat(1, 2), BigRat(1, 7)}) {
    CAPTURE(to_string(b));
    // int e^{-x} ln(1 + b x) dx = e^{1/b} E1(1/b)
    // int e^{-x} / (1 + b x) dx = e^{1/b} E1(1/b) / b
    const BigFloat inv(bits, BigRat(1) / b);
    BigFloat ei(bits);
    mpfr_eint(ei.get(), (-inv).get(), MPFR_RNDN);
    const BigFloat want_log = -exp(inv) * ei;
    const BigFloat want_rat = want_log * inv;
    CHECK(abs(quad_semi_infinite(WeightedIntegrand::power_log(0, b), ctx) -
              want_log) < tol);
    CHECK(abs(quad_semi_infinite(WeightedIntegrand::power_rational(0, b, 1), ctx) -
              want_rat) < tol);
  }
  // int e^{-x} (1 + x)^{-2} dx = 1 - delta, by parts.
  const BigFloat delta = exp(BigFloat(bits, 1L)) * oracle::e1_at_one(bits);
  CHECK(abs(quad_semi_infinite(WeightedIntegrand::power_rational(0, 1, 2), ctx) -
            (BigFloat(bits, 1L) - delta)) < tol);
}

TEST_CASE("singular log integrand") {
  // Substitution oracle computed independently (mpmath, 60 digits).
  const PrecisionContext ctx(55);
  const BigFloat want = BigFloat::parse(
      ctx.working_bits(),
      "3.33989165425760181470535545211996894622691944259978638590724");
  const BigFloat got =
      quad_semi_infinite(WeightedIntegrand::power_log(BigRat(-7, 4), 1), ctx);
  CHECK(abs(got - want) < ctx.output_tolerance());
}

TEST_CASE("domain errors and trivial cases") {
  const PrecisionContext ctx(30);
  CHECK_THROWS_AS(quad_semi_infinite(WeightedIntegrand::power(-1), ctx),
                  NonIntegrable);
  CHECK_THROWS_AS(quad_semi_infinite(WeightedIntegrand::power(BigRat(-3, 2)), ctx),
                  NonIntegrable);
  CHECK_THROWS_AS(quad_semi_infinite(WeightedIntegrand::power_log(-2, 1), ctx),
                  NonIntegrable);
  CHECK(quad_semi_infinite(WeightedIntegrand::power_log(3, 0), ctx).is_zero());
}

TEST_CASE("plan bounds the truncated tail") {
  for (int digits : {20, 60, 150}) {
    const PrecisionContext ctx(digits);
    for (const auto& f : {WeightedIntegrand::power(7),
                          WeightedIntegrand::power_log(BigRat(29, 2), 3)}) {
      const QuadratureSpec spec = plan_quadrature(f, ctx);
      CHECK(spec.tail_bound < ctx.tolerance());
      CHECK(spec.panel_edges.front() == BigFloat(ctx.working_bits(), 1L));
      CHECK(spec.panel_edges.back() == spec.truncation_x);
      for (std::size_t i = 1; i < spec.panel_edges.size(); ++i) {
        CHECK(spec.panel_edges[i - 1] < spec.panel_edges[i]);
      }
    }
  }
}

TEST_CASE("truncation point matters only through the tail") {
  const PrecisionContext ctx(30);
  const auto f = WeightedIntegrand::power_log(2, 1);
  const BigFloat full = quad_semi_infinite(f, ctx);
  // Cutting at X = 10 drops int_10^inf x^2 ln(1+x) e^{-x} dx, roughly 1e-2.
  const BigFloat cut =
      quad_semi_infinite(f, ctx, plan_quadrature(f, ctx, 10.0));
  const BigFloat dropped = full - cut;
  CHECK(dropped.to_double() > 1e-3);
  CHECK(dropped.to_double() < 1e-1);
}

TEST_CASE("serial and parallel paths are bit-identical") {
  const PrecisionContext ctx(50);
  for (const auto& f : {WeightedIntegrand::power_log(BigRat(-2, 3), BigRat(1, 2)),
                        WeightedIntegrand::power_rational(BigRat(5, 2), 1, 3),
                        WeightedIntegrand::power(BigRat(1, 3))}) {
    CHECK(quad_semi_infinite(f, ctx, Execution::kSerial) ==
          quad_semi_infinite(f, ctx, Execution::kParallel));
  }
}

}  // TEST_SUITE
