#include <doctest.h>

#include <chrono>

#include "egc/errors.hpp"
#include "egc/integrals.hpp"
#include "egc/verify.hpp"

using namespace egc;

namespace {

BigRat pow_rat(const BigRat& x, long n) {
  BigRat out = 1;
  for (long i = 0; i < n; ++i) out *= x;
  return out;
}

BigRat hypergeom_direct(const BigRat& a, long n, const BigRat& c, const BigRat& x) {
  BigRat s = 0;
  for (long k = 0; k <= n; ++k) {
    s += rising_factorial(a, k) * rising_factorial(BigRat(-n), k) /
         (rising_factorial(c, k) * BigRat(factorial(k))) * pow_rat(x, k);
  }
  return s;
}

long count(const std::vector<IdentityReport>& reps, IdentityReport::Verdict v) {
  long n = 0;
  for (const auto& r : reps) n += r.verdict == v;
  return n;
}

// A_{k,m} straight from the triple sum, Stirling numbers by recurrence.
BigRat A_naive(long k, long m, BernoulliConvention conv) {
  const long n = m + 1;
  std::vector<std::vector<BigInt>> S2(n, std::vector<BigInt>(n, 0));
  std::vector<std::vector<BigInt>> c1(n, std::vector<BigInt>(n, 0));
  S2[0][0] = c1[0][0] = 1;
  for (long i = 1; i < n; ++i) {
    for (long j = 1; j <= i; ++j) {
      S2[i][j] = BigInt(j) * S2[i - 1][j] + S2[i - 1][j - 1];
      c1[i][j] = BigInt(i - 1) * c1[i - 1][j] + c1[i - 1][j - 1];
    }
  }
  BigRat total = 0;
  for (long t = 2; t <= m; ++t) {
    BigRat mid = 0;
    for (long w = 1; w <= t - 1; ++w) {
      BigRat inner = 0;
      for (long j = 1; j <= w; ++j) {
        const BigRat term = bernoulli(j, conv) * BigRat(c1[w][j]);
        inner += (j % 2 == 0 ? term : -term);
      }
      BigInt p = 1;
      for (long e = 0; e < t - w; ++e) p *= -k;
      mid += BigRat(p) * inner;
    }
    total += BigRat(S2[m][t]) * mid;
  }
  return total;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("terminating hypergeometric series") {
  for (const BigRat& a : {BigRat(1), BigRat(-3, 4), BigRat(5, 2)}) {
    for (const BigRat& c : {BigRat(2), BigRat(7, 3), BigRat(1, 2)}) {
      for (long n = 0; n <= 8; ++n) {
        for (const BigRat& x : {BigRat(1), BigRat(-1, 2), BigRat(3)}) {
          CHECK(hypergeom_terminating({a, BigRat(-n), c, x}) ==
                hypergeom_direct(a, n, c, x));
        }
        // Chu-Vandermonde.
        CHECK(hypergeom_terminating({a, BigRat(-n), c, 1}) ==
              gauss_terminating_value(a, n, c));
      }
    }
  }
  CHECK_THROWS_AS(hypergeom_terminating({1, BigRat(1, 2), 2, 1}), DomainError);
  CHECK_THROWS_AS(hypergeom_terminating({1, 1, 2, 1}), DomainError);
  CHECK_THROWS_AS(hypergeom_terminating({1, -3, -1, 1}), ZeroDenominator);
}

TEST_CASE("exact identity grids pass within the time budget") {
  const auto start = std::chrono::steady_clock::now();
  const auto bf = bin_formula_grid(12, 3, default_epsilons());
  const auto bf2 = binformula2_grid(20);
  const auto gauss = gauss_grid(15);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(secs < 60.0);
  // sum_{m<=12} (m+1) * 4 values of r * 3 epsilons
  CHECK(bf.size() == 91 * 4 * 3);
  CHECK(count(bf, IdentityReport::Verdict::kExactPass) == static_cast<long>(bf.size()));
  // m = r points are reported but skipped.
  CHECK(count(bf2, IdentityReport::Verdict::kSkipped) == 21);
  CHECK(count(bf2, IdentityReport::Verdict::kFail) == 0);
  long m_gt_r = 0;
  for (long m = 0; m <= 20; ++m)
    for (long r = 0; r < m; ++r) m_gt_r += m - r + 1;
  CHECK(count(bf2, IdentityReport::Verdict::kExactPass) == m_gt_r);
  long g = 0;
  for (long m = 1; m <= 15; ++m)
    for (long j = 1; j <= m; ++j) g += j - 1;
  CHECK(gauss.size() == static_cast<std::size_t>(g));
  CHECK(count(gauss, IdentityReport::Verdict::kExactPass) == g);
}

TEST_CASE("grid order is canonical and independent of execution") {
  const auto s = bin_formula_grid(6, 2, default_epsilons(), Execution::kSerial);
  const auto p = bin_formula_grid(6, 2, default_epsilons(), Execution::kParallel);
  REQUIRE(s.size() == p.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(s[i].parameter_string() == p[i].parameter_string());
  }
  CHECK(s.front().parameter_string() == "m=0;i=0;r=0;eps=-3/4");
}

TEST_CASE("a wrong closed form fails") {
  const HyperGeomParams p{1, -3, 2, 1};
  const BigRat right = gauss_terminating_value(1, 3, 2);
  CHECK(check_gauss_terminating(p, right).verdict ==
        IdentityReport::Verdict::kExactPass);
  const auto bad = check_gauss_terminating(p, right + 1);
  CHECK(bad.failed());
  CHECK(std::get<BigRat>(*bad.residual) == -1);
}

TEST_CASE("degenerate and skipped points") {
  CHECK_THROWS_AS(check_bin_formula(3, 0, 1, 0), DegenerateDenominator);
  CHECK(check_binformula2(4, 4, 4).verdict == IdentityReport::Verdict::kSkipped);
  CHECK_THROWS_AS(check_binformula2(3, 1, 2), DomainError);
  CHECK(to_string(IdentityReport::Verdict::kNumericPass) == "NumericPass");
}

TEST_CASE("f_q derivative matches central differences") {
  const PrecisionContext ctx(30);
  const BigFloat h = BigFloat::pow10(ctx.working_bits(), -12);
  const BigRat hq = BigRat(BigInt(1), BigInt("1000000000000"));
  const BigFloat tol = BigFloat::pow10(ctx.working_bits(), -10);
  for (const BigRat& q : {BigRat(1, 4), BigRat(1, 3), BigRat(2)}) {
    for (const BigRat& u : {BigRat(1, 2), BigRat(1)}) {
      CAPTURE(to_string(q));
      CAPTURE(to_string(u));
      const BigFloat fd = (f_eval(q, 1, u + hq, ctx) - f_eval(q, 1, u - hq, ctx)) /
                          (h * 2L);
      CHECK(abs(f_deriv(q, 1, u, 1, ctx) - fd) < tol);
    }
  }
  CHECK_THROWS_AS(f_eval(-1, 0, 1, ctx), DomainError);
  CHECK(f_eval(BigRat(1, 2), 0, 0, ctx).is_zero());
}

TEST_CASE("f_q recurrences on the grid") {
  const PrecisionContext ctx(30);
  const auto reps = recurrence_grid(ctx);
  CHECK(reps.size() == 32);
  for (const auto& r : reps) {
    CAPTURE(r.identity);
    CAPTURE(r.parameter_string());
    CHECK(r.verdict == IdentityReport::Verdict::kNumericPass);
  }
  const auto base = check_base_recurrence(BigRat(-3, 4), 0, 1, ctx);
  CHECK(*base.tolerance == BigFloat::pow10(ctx.working_bits(), -25));
  const auto j3 = check_diff_equality(3, BigRat(-2, 3), 1, BigRat(1, 2), ctx);
  CHECK(*j3.tolerance == BigFloat::pow10(ctx.working_bits(), -22));
}

TEST_CASE("theorem partial sums approach u") {
  const PrecisionContext ctx(30);
  const BigFloat one = ctx.from(1);
  for (long r = 0; r <= 2; ++r) {
    CAPTURE(r);
    const auto sums = theorem_partial_sums(1, r, 30, ctx);
    REQUIRE(sums.size() == static_cast<std::size_t>(31 - r));
    const BigFloat e5 = abs(sums[5 - r] - one);
    const BigFloat e30 = abs(sums.back() - one);
    CHECK(e30 * 10L < e5);
    const auto quad = theorem_partial_sums(1, r, 15, ctx, IntegralPath::kQuadratureOnly);
    for (std::size_t i = 0; i < quad.size(); ++i) {
      CHECK(abs(quad[i] - sums[i]) < BigFloat::pow10(ctx.working_bits(), -25));
    }
  }
  const auto half = theorem_partial_sums(BigRat(1, 2), 0, 20, ctx);
  CHECK(abs(half.back() - ctx.from(BigRat(1, 2))) <
        abs(half[5] - ctx.from(BigRat(1, 2))));
}

TEST_CASE("theorem partial sum against the literal double sum") {
  const PrecisionContext ctx(30);
  const BigRat u(2, 3);
  const long r = 1;
  const long M = 6;
  BigFloat s = ctx.zero();
  for (long m = r; m <= M; ++m) {
    for (long k = r; k <= m; ++k) {
      BigRat c = BigRat(binom_int(m, k) * binom_int(k, r)) / BigRat(factorial(k));
      if ((k + r) % 2 == 1) c = -c;
      s += ctx.from(c) * theorem_integral_quadrature(k, u, ctx);
    }
  }
  CHECK(abs(theorem_partial_sum(u, r, M, ctx) - s) <
        BigFloat::pow10(ctx.working_bits(), -28));
}

TEST_CASE("A coefficients") {
  CHECK(A_coeff(2, 3, BernoulliConvention::kB1MinusHalf) == BigRat(-7, 3));
  for (long m = 2; m <= 9; ++m) {
    for (long k = 1; k <= 6; ++k) {
      for (auto conv : {BernoulliConvention::kB1MinusHalf,
                        BernoulliConvention::kB1PlusHalf}) {
        CHECK(A_coeff(k, m, conv) == A_naive(k, m, conv));
      }
    }
  }
  CHECK(A_coeff(3, 1, BernoulliConvention::kB1PlusHalf) == 0);
}

TEST_CASE("conjecture harness") {
  const PrecisionContext ctx(20);
  for (const BigRat& u : {BigRat(1, 2), BigRat(1), BigRat(2)}) {
    const auto minus = conjecture_series(u, 6, BernoulliConvention::kB1MinusHalf, ctx);
    const auto plus = conjecture_series(u, 6, BernoulliConvention::kB1PlusHalf, ctx);
    REQUIRE(minus.size() == 6);
    CHECK(minus.back().residual != plus.back().residual);
    CHECK(minus.back().digamma == plus.back().digamma);
    const auto single = conjecture_rhs(u, 4, BernoulliConvention::kB1PlusHalf, ctx);
    CHECK(single.rhs == plus[3].rhs);
  }
  CHECK_THROWS_AS(conjecture_rhs(0, 3, BernoulliConvention::kB1PlusHalf, ctx),
                  DomainError);
}

}  // TEST_SUITE
