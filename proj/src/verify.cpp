#include "egc/verify.hpp"

#include <string>

#include "egc/errors.hpp"
#include "egc/integrals.hpp"
#include "egc/quadrature.hpp"
#include "egc/reference.hpp"

namespace egc {

namespace {

bool is_nonpositive_integer(const BigRat& q) {
  return q.get_den() == 1 && q <= 0;
}

IdentityReport exact_report(std::string name,
                            std::vector<std::pair<std::string, std::string>> params,
                            BigRat lhs, BigRat rhs) {
  IdentityReport rep;
  rep.identity = std::move(name);
  rep.parameters = std::move(params);
  BigRat residual = lhs - rhs;
  rep.verdict = residual == 0 ? IdentityReport::Verdict::kExactPass
                              : IdentityReport::Verdict::kFail;
  rep.lhs = std::move(lhs);
  rep.rhs = std::move(rhs);
  rep.residual = std::move(residual);
  return rep;
}

IdentityReport numeric_report(std::string name,
                              std::vector<std::pair<std::string, std::string>> params,
                              BigFloat lhs, BigFloat rhs, BigFloat tolerance) {
  IdentityReport rep;
  rep.identity = std::move(name);
  rep.parameters = std::move(params);
  BigFloat residual = lhs - rhs;
  rep.verdict = abs(residual) < tolerance ? IdentityReport::Verdict::kNumericPass
                                          : IdentityReport::Verdict::kFail;
  rep.lhs = std::move(lhs);
  rep.rhs = std::move(rhs);
  rep.residual = std::move(residual);
  rep.tolerance = std::move(tolerance);
  return rep;
}

IdentityReport skipped_report(std::string name,
                              std::vector<std::pair<std::string, std::string>> params,
                              std::string why) {
  IdentityReport rep;
  rep.identity = std::move(name);
  rep.parameters = std::move(params);
  rep.verdict = IdentityReport::Verdict::kSkipped;
  rep.note = std::move(why);
  return rep;
}

std::string str(long v) { return std::to_string(v); }

BigRat nonzero_inverse(const BigRat& q, const char* what) {
  if (q == 0) throw DegenerateDenominator(std::string(what) + " vanishes");
  return BigRat(1) / q;
}

// C(q, r) / Gamma(q + 1) at the context precision.
BigFloat f_prefactor(const BigRat& q, long r, const PrecisionContext& ctx) {
  const BigFloat g = gamma_real(ctx.from(q + 1), ctx);
  return ctx.from(binom_gen(q, r)) / g;
}

}  // namespace

BigRat hypergeom_terminating(const HyperGeomParams& p) {
  if (!is_nonpositive_integer(p.b)) {
    throw DomainError("hypergeom_terminating requires b to be a nonpositive "
                      "integer, got " + to_string(p.b));
  }
  const long n = -p.b.get_num().get_si();
  BigRat term = 1;
  BigRat sum = 1;
  for (long k = 0; k < n && term != 0; ++k) {
    const BigRat ck = p.c + k;
    if (ck == 0) {
      throw ZeroDenominator("(c)_k vanishes at k=" + str(k + 1) +
                            " before the series terminates");
    }
    term *= (p.a + k) * (p.b + k) * p.x;
    term /= ck * BigRat(k + 1);
    sum += term;
  }
  return sum;
}

BigRat gauss_terminating_value(const BigRat& a, long n, const BigRat& c) {
  if (n < 0) throw DomainError("gauss_terminating_value requires n >= 0");
  const BigRat denom = rising_factorial(c, n);
  if (denom == 0) throw ZeroDenominator("(c)_n vanishes");
  return rising_factorial(c - a, n) / denom;
}

std::string IdentityReport::parameter_string() const {
  std::string out;
  for (const auto& [k, v] : parameters) {
    if (!out.empty()) out.push_back(';');
    out += k + "=" + v;
  }
  return out;
}

std::string to_string(IdentityReport::Verdict v) {
  switch (v) {
    case IdentityReport::Verdict::kExactPass:
      return "ExactPass";
    case IdentityReport::Verdict::kNumericPass:
      return "NumericPass";
    case IdentityReport::Verdict::kFail:
      return "Fail";
    case IdentityReport::Verdict::kSkipped:
      return "Skipped";
  }
  return "?";
}

std::string format_value(const ExactOrNumeric& v, int digits) {
  if (const auto* q = std::get_if<BigRat>(&v)) return to_string(*q);
  return std::get<BigFloat>(v).to_string(digits);
}

IdentityReport check_gauss_terminating(const HyperGeomParams& p,
                                       const BigRat& closed_form) {
  return exact_report("gauss_terminating",
                      {{"a", to_string(p.a)},
                       {"b", to_string(p.b)},
                       {"c", to_string(p.c)},
                       {"x", to_string(p.x)}},
                      hypergeom_terminating(p), closed_form);
}

IdentityReport check_bin_formula(long m, long i, long r, const BigRat& eps) {
  if (m < 0 || i < 0 || i > m || r < 0) {
    throw DomainError("check_bin_formula requires 0 <= i <= m and r >= 0");
  }
  BigRat lhs = 0;
  for (long j = i; j <= m; ++j) {
    BigRat term = BigRat(binom_int(m, j)) *
                  nonzero_inverse(binom_gen(eps + j - r, j), "C(eps+j-r, j)") *
                  binom_gen(eps + j - 1, j - i);
    if (j % 2 == 1) term = -term;
    lhs += term;
  }
  // C(m-i-r, m-i) has a possibly negative upper argument.
  BigRat rhs = binom_gen(BigRat(m - i - r), m - i) *
               nonzero_inverse(binom_gen(eps + m - r, m), "C(m+eps-r, m)");
  if (i % 2 == 1) rhs = -rhs;
  return exact_report("bin_formula",
                      {{"m", str(m)}, {"i", str(i)}, {"r", str(r)},
                       {"eps", to_string(eps)}},
                      std::move(lhs), std::move(rhs));
}

IdentityReport check_binformula2(long m, long j, long r) {
  if (r < 0 || j < r || m < j) {
    throw DomainError("check_binformula2 requires 0 <= r <= j <= m");
  }
  std::vector<std::pair<std::string, std::string>> params{
      {"m", str(m)}, {"j", str(j)}, {"r", str(r)}};
  if (m == r) return skipped_report("binformula2", std::move(params), "m = r");
  BigInt lhs = 0;
  for (long k = j; k <= m; ++k) {
    const BigInt t = binom_int(m, k) * binom_int(k, r);
    if (k % 2 == 0) {
      lhs += t;
    } else {
      lhs -= t;
    }
  }
  BigRat rhs = BigRat(binom_int(m, j) * binom_int(j, r)) * make_rat(j - r, m - r);
  if (j % 2 == 1) rhs = -rhs;
  return exact_report("binformula2", std::move(params), BigRat(lhs),
                      std::move(rhs));
}

BigFloat f_eval(const BigRat& q, long r, const BigRat& u,
                const PrecisionContext& ctx, Execution policy) {
  if (q <= -1) throw DomainError("f_q requires q > -1");
  if (u < 0) throw DomainError("f_q requires u >= 0");
  if (u == 0) return ctx.zero();
  const BigFloat integral =
      quad_semi_infinite(WeightedIntegrand::power_log(q - 1, u), ctx, policy);
  return f_prefactor(q, r, ctx) * integral;
}

BigFloat f_deriv(const BigRat& q, long r, const BigRat& u, long order,
                 const PrecisionContext& ctx, Execution policy) {
  if (order < 0) throw DomainError("derivative order must be >= 0");
  if (order == 0) return f_eval(q, r, u, ctx, policy);
  if (q <= -1) throw DomainError("f_q requires q > -1");
  if (u < 0) throw DomainError("f_q requires u >= 0");
  BigFloat integral = quad_semi_infinite(
      WeightedIntegrand::power_rational(q - 1 + order, u, order), ctx, policy);
  BigFloat coeff = ctx.from(factorial(order - 1));
  if (order % 2 == 0) coeff = -coeff;
  return f_prefactor(q, r, ctx) * coeff * integral;
}

IdentityReport check_base_recurrence(const BigRat& eps, long r,
                                     const BigRat& u,
                                     const PrecisionContext& ctx) {
  const BigRat denom = eps + 1 - r;
  if (denom == 0) throw DegenerateDenominator("eps + 1 - r vanishes");
  const BigFloat lhs = f_eval(eps + 1, r, u, ctx);
  BigFloat rhs = ctx.from(eps / denom) * f_eval(eps, r, u, ctx);
  if (u != 0) rhs += ctx.from(u / denom) * f_deriv(eps, r, u, 1, ctx);
  const int budget = ctx.decimal_digits() - 5;
  return numeric_report("base_recurrence",
                        {{"eps", to_string(eps)}, {"r", str(r)},
                         {"u", to_string(u)}, {"digits", str(ctx.decimal_digits())}},
                        lhs, rhs, BigFloat::pow10(ctx.working_bits(), -budget));
}

IdentityReport check_diff_equality(long j, const BigRat& eps, long r,
                                   const BigRat& u,
                                   const PrecisionContext& ctx) {
  if (j < 1) throw DomainError("check_diff_equality requires j >= 1");
  const BigRat scale =
      nonzero_inverse(binom_gen(eps + j - r, j), "C(eps+j-r, j)");
  const BigFloat lhs = f_eval(eps + j, r, u, ctx);
  BigFloat rhs = ctx.zero();
  BigRat u_pow = 1;
  for (long i = 0; i <= j; ++i) {
    if (i > 0) u_pow *= u;
    const BigRat c = binom_gen(eps + j - 1, j - i) * u_pow / BigRat(factorial(i));
    if (c == 0) continue;
    rhs += ctx.from(c) * f_deriv(eps, r, u, i, ctx);
  }
  rhs *= ctx.from(scale);
  const int budget = ctx.decimal_digits() - (j == 1 ? 5 : 8);
  return numeric_report("diff_equality",
                        {{"j", str(j)}, {"eps", to_string(eps)}, {"r", str(r)},
                         {"u", to_string(u)}, {"digits", str(ctx.decimal_digits())}},
                        lhs, rhs, BigFloat::pow10(ctx.working_bits(), -budget));
}

std::vector<BigFloat> theorem_partial_sums(const BigRat& u, long r, long max_m,
                                           const PrecisionContext& ctx,
                                           IntegralPath path,
                                           Execution policy) {
  if (u < 0) throw DomainError("theorem partial sum requires u >= 0");
  if (r < 0 || max_m < r) throw DomainError("theorem partial sum requires M >= r >= 0");
  const bool exact = path == IntegralPath::kExactWhereAvailable && u == 1;
  const mpfr_prec_t bits = ctx.working_bits() + 32;

  // Integrals needed numerically: all k, or only k = 0 on the exact path.
  const long first_numeric = r;
  const long last_numeric = exact ? std::min(0L, max_m) : max_m;
  std::vector<BigFloat> numeric;
  if (last_numeric >= first_numeric) {
    numeric = map_indices<BigFloat>(
        static_cast<std::size_t>(last_numeric - first_numeric + 1), policy,
        [&](std::size_t i) {
          const long k = first_numeric + static_cast<long>(i);
          return theorem_integral_quadrature(k, u, ctx, Execution::kSerial)
              .rounded(bits);
        });
  }
  std::vector<DeltaLinear> exact_values;
  if (exact) {
    for (long k = 0; k <= max_m; ++k) {
      exact_values.push_back(k >= 1 ? J_closed(k - 1) : DeltaLinear());
    }
  }
  const BigFloat delta = exact ? delta_cached(ctx).rounded(bits) : BigFloat(bits);

  std::vector<BigFloat> sums;
  BigFloat running(bits);
  for (long m = r; m <= max_m; ++m) {
    DeltaLinear block_exact;
    BigFloat block(bits);
    for (long k = r; k <= m; ++k) {
      BigRat c(binom_int(m, k) * binom_int(k, r), factorial(k));
      c.canonicalize();
      if ((k + r) % 2 == 1) c = -c;
      if (exact && k >= 1) {
        block_exact += exact_values[k] * c;
      } else {
        block += BigFloat(bits, c) * numeric[static_cast<std::size_t>(k - first_numeric)];
      }
    }
    if (exact) {
      block += BigFloat(bits, block_exact.const_part()) +
               BigFloat(bits, block_exact.delta_part()) * delta;
    }
    running += block;
    sums.push_back(running.rounded(ctx.working_bits()));
  }
  return sums;
}

BigFloat theorem_partial_sum(const BigRat& u, long r, long max_m,
                             const PrecisionContext& ctx, IntegralPath path) {
  return theorem_partial_sums(u, r, max_m, ctx, path).back();
}

BigRat A_coeff(long k, long m, BernoulliConvention convention) {
  if (k < 1 || m < 1) throw DomainError("A_coeff requires k, m >= 1");
  reserve_stirling(m);
  reserve_bernoulli(m);
  // beta_w = sum_{j=1}^w (-1)^j B_j c(w, j)
  std::vector<BigRat> beta(static_cast<std::size_t>(m), BigRat(0));
  for (long w = 1; w < m; ++w) {
    for (long j = 1; j <= w; ++j) {
      BigRat t = bernoulli(j, convention) * BigRat(stirling1_unsigned(w, j));
      if (j % 2 == 1) t = -t;
      beta[w] += t;
    }
  }
  const BigInt minus_k = -k;
  BigRat total = 0;
  for (long t = 2; t <= m; ++t) {
    BigRat inner = 0;
    for (long w = 1; w < t; ++w) {
      inner += BigRat(pow_int(minus_k, static_cast<unsigned long>(t - w))) * beta[w];
    }
    total += BigRat(stirling2(m, t)) * inner;
  }
  return total;
}

namespace {

// ln(u) + sum_{k=1}^m A_{k,m+1} C(m,k) (-1)^k/(k! m!) I_k given I_1..I_m.
ConjectureEvaluation conjecture_combine(const BigRat& u, long m,
                                        BernoulliConvention convention,
                                        const std::vector<BigFloat>& integrals,
                                        const BigFloat& psi,
                                        const PrecisionContext& inner,
                                        const PrecisionContext& ctx) {
  const BigInt m_fact = factorial(m);
  BigFloat sum = inner.zero();
  for (long k = 1; k <= m; ++k) {
    BigRat c = A_coeff(k, m + 1, convention) * BigRat(binom_int(m, k)) /
               BigRat(factorial(k) * m_fact);
    if (k % 2 == 1) c = -c;
    sum += inner.from(c) * integrals[static_cast<std::size_t>(k - 1)];
  }
  BigFloat rhs = log(inner.from(u));
  rhs += sum;
  BigFloat residual = rhs - psi;
  const mpfr_prec_t bits = ctx.working_bits();
  return {rhs.rounded(bits), psi.rounded(bits), residual.rounded(bits)};
}

// The k-sum cancels heavily; carry ten more guard digits.
PrecisionContext conjecture_context(const PrecisionContext& ctx) {
  return PrecisionContext(ctx.decimal_digits(), ctx.guard_digits() + 10);
}

std::vector<BigFloat> conjecture_integrals(const BigRat& u, long max_m,
                                           const PrecisionContext& inner,
                                           Execution policy) {
  return map_indices<BigFloat>(
      static_cast<std::size_t>(max_m), policy, [&](std::size_t i) {
        return conjecture_integral(static_cast<long>(i) + 1, u, inner,
                                   Execution::kSerial);
      });
}

}  // namespace

ConjectureEvaluation conjecture_rhs(const BigRat& u, long m,
                                    BernoulliConvention convention,
                                    const PrecisionContext& ctx,
                                    Execution policy) {
  if (u <= 0) throw DomainError("conjecture harness requires u > 0");
  if (m < 1) throw DomainError("conjecture harness requires m >= 1");
  const PrecisionContext inner = conjecture_context(ctx);
  const auto integrals = conjecture_integrals(u, m, inner, policy);
  const BigFloat psi = digamma(inner.from(u), inner);
  return conjecture_combine(u, m, convention, integrals, psi, inner, ctx);
}

std::vector<ConjectureEvaluation> conjecture_series(
    const BigRat& u, long max_m, BernoulliConvention convention,
    const PrecisionContext& ctx, Execution policy) {
  if (u <= 0) throw DomainError("conjecture harness requires u > 0");
  if (max_m < 1) throw DomainError("conjecture harness requires m >= 1");
  const PrecisionContext inner = conjecture_context(ctx);
  const auto integrals = conjecture_integrals(u, max_m, inner, policy);
  const BigFloat psi = digamma(inner.from(u), inner);
  return map_indices<ConjectureEvaluation>(
      static_cast<std::size_t>(max_m), policy, [&](std::size_t i) {
        return conjecture_combine(u, static_cast<long>(i) + 1, convention,
                                  integrals, psi, inner, ctx);
      });
}

const std::vector<BigRat>& default_epsilons() {
  static const std::vector<BigRat> eps{BigRat(-3, 4), BigRat(-2, 3),
                                       BigRat(-5, 9)};
  return eps;
}

std::vector<IdentityReport> bin_formula_grid(long max_m, long max_r,
                                             const std::vector<BigRat>& epsilons,
                                             Execution policy) {
  struct Point {
    long m, i, r;
    std::size_t e;
  };
  std::vector<Point> points;
  for (long m = 0; m <= max_m; ++m) {
    for (long i = 0; i <= m; ++i) {
      for (long r = 0; r <= max_r; ++r) {
        for (std::size_t e = 0; e < epsilons.size(); ++e) {
          points.push_back({m, i, r, e});
        }
      }
    }
  }
  return map_indices<IdentityReport>(points.size(), policy, [&](std::size_t n) {
    const Point& p = points[n];
    try {
      return check_bin_formula(p.m, p.i, p.r, epsilons[p.e]);
    } catch (const DegenerateDenominator& e) {
      return skipped_report("bin_formula",
                            {{"m", str(p.m)}, {"i", str(p.i)}, {"r", str(p.r)},
                             {"eps", to_string(epsilons[p.e])}},
                            e.what());
    }
  });
}

std::vector<IdentityReport> binformula2_grid(long max_m, Execution policy) {
  struct Point {
    long m, j, r;
  };
  std::vector<Point> points;
  for (long m = 0; m <= max_m; ++m) {
    for (long j = 0; j <= m; ++j) {
      for (long r = 0; r <= j; ++r) points.push_back({m, j, r});
    }
  }
  return map_indices<IdentityReport>(points.size(), policy, [&](std::size_t n) {
    return check_binformula2(points[n].m, points[n].j, points[n].r);
  });
}

std::vector<IdentityReport> gauss_grid(long max_m, Execution policy) {
  struct Point {
    long m, j, r;
  };
  std::vector<Point> points;
  for (long m = 1; m <= max_m; ++m) {
    for (long j = 1; j <= m; ++j) {
      for (long r = 1; r < j; ++r) points.push_back({m, j, r});
    }
  }
  return map_indices<IdentityReport>(points.size(), policy, [&](std::size_t n) {
    const auto [m, j, r] = points[n];
    HyperGeomParams p{1, BigRat(j - m), BigRat(1 + j - r), 1};
    IdentityReport rep = check_gauss_terminating(p, make_rat(j - r, m - r));
    rep.parameters.insert(rep.parameters.begin(),
                          {{"m", str(m)}, {"j", str(j)}, {"r", str(r)}});
    return rep;
  });
}

std::vector<IdentityReport> recurrence_grid(const PrecisionContext& ctx,
                                            long max_j, Execution policy) {
  struct Point {
    long j;  // 0 = base recurrence
    BigRat eps;
    long r;
    BigRat u;
  };
  std::vector<Point> points;
  for (const BigRat& eps : {BigRat(-3, 4), BigRat(-2, 3)}) {
    for (long r = 0; r <= 1; ++r) {
      for (const BigRat& u : {BigRat(1, 2), BigRat(1)}) {
        for (long j = 0; j <= max_j; ++j) points.push_back({j, eps, r, u});
      }
    }
  }
  return map_indices<IdentityReport>(points.size(), policy, [&](std::size_t n) {
    const Point& p = points[n];
    if (p.j == 0) return check_base_recurrence(p.eps, p.r, p.u, ctx);
    return check_diff_equality(p.j, p.eps, p.r, p.u, ctx);
  });
}

}  // namespace egc
