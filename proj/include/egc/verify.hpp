#pragma once

// Checks of the binomial-sum identities (exact, over Q), terminating Gauss
// summation, the f_q recurrences (numeric), partial sums of the series for
// u, and the digamma conjecture harness.

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "egc/bigfloat.hpp"
#include "egc/exactmath.hpp"
#include "egc/parallel.hpp"

namespace egc {

// 2F1(a, b; c; x) with b a nonpositive integer, so the series is finite.
struct HyperGeomParams {
  BigRat a;
  BigRat b;
  BigRat c;
  BigRat x;
};

// Exact finite sum. Throws DomainError if b is not a nonpositive integer and
// ZeroDenominator if (c)_k vanishes before the series terminates.
BigRat hypergeom_terminating(const HyperGeomParams& p);

// Gauss's value of 2F1(a, -n; c; 1) with the Gamma ratio cancelled down to
// (c - a)_n / (c)_n.
BigRat gauss_terminating_value(const BigRat& a, long n, const BigRat& c);

using ExactOrNumeric = std::variant<BigRat, BigFloat>;

struct IdentityReport {
  enum class Verdict { kExactPass, kNumericPass, kFail, kSkipped };

  std::string identity;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::optional<ExactOrNumeric> lhs;
  std::optional<ExactOrNumeric> rhs;
  Verdict verdict = Verdict::kFail;
  std::optional<ExactOrNumeric> residual;  // lhs - rhs
  std::optional<BigFloat> tolerance;       // numeric checks only
  std::string note;

  bool passed() const {
    return verdict == Verdict::kExactPass || verdict == Verdict::kNumericPass;
  }
  bool failed() const { return verdict == Verdict::kFail; }
  // "m=2;i=0;r=0;eps=-3/4"
  std::string parameter_string() const;
};

std::string to_string(IdentityReport::Verdict v);
std::string format_value(const ExactOrNumeric& v, int digits);

IdentityReport check_gauss_terminating(const HyperGeomParams& p,
                                       const BigRat& closed_form);

// sum_{j=i}^m C(m,j) C(eps+j-r, j)^{-1} C(eps+j-1, j-i) (-1)^j
//   = C(m-i-r, m-i) C(m+eps-r, m)^{-1} (-1)^i
IdentityReport check_bin_formula(long m, long i, long r, const BigRat& eps);

// sum_{k=j}^m C(m,k) C(k,r) (-1)^k = C(m,j) C(j,r) (j-r)/(m-r) (-1)^j
IdentityReport check_binformula2(long m, long j, long r);

// f_q(u) = C(q, r) / Gamma(q + 1) * int_0^inf x^{q-1} e^{-x} ln(x u + 1) dx
// for rational q > -1 and u >= 0.
BigFloat f_eval(const BigRat& q, long r, const BigRat& u,
                const PrecisionContext& ctx,
                Execution policy = Execution::kParallel);

// i-th derivative in u, by differentiating under the integral:
// d^i/du^i ln(x u + 1) = (-1)^{i-1} (i-1)! x^i / (x u + 1)^i.
BigFloat f_deriv(const BigRat& q, long r, const BigRat& u, long order,
                 const PrecisionContext& ctx,
                 Execution policy = Execution::kParallel);

// f_{eps+1} = eps/(eps+1-r) f_eps + u/(eps+1-r) f'_eps within 10^-(D-5).
IdentityReport check_base_recurrence(const BigRat& eps, long r,
                                     const BigRat& u,
                                     const PrecisionContext& ctx);

// f_{eps+j} = C(eps+j-r, j)^{-1} sum_{i<=j} C(eps+j-1, j-i) u^i/i! f^{(i)}_eps
// within 10^-(D-5) for j = 1 and 10^-(D-8) otherwise.
IdentityReport check_diff_equality(long j, const BigRat& eps, long r,
                                   const BigRat& u,
                                   const PrecisionContext& ctx);

enum class IntegralPath { kExactWhereAvailable, kQuadratureOnly };

// S_M for M = r .. max_m (index M - r), where
// S_M = sum_{m=r}^M sum_{k=r}^m C(m,k) C(k,r) (-1)^{k+r}/k! T_k(u),
// T_k(u) = int_0^inf x^{k-1} e^{-x} ln(x u + 1) dx. With kExactWhereAvailable
// and u = 1 each m-block is summed exactly in Q[delta] and rounded once.
std::vector<BigFloat> theorem_partial_sums(const BigRat& u, long r, long max_m,
                                           const PrecisionContext& ctx,
                                           IntegralPath path =
                                               IntegralPath::kExactWhereAvailable,
                                           Execution policy = Execution::kParallel);
BigFloat theorem_partial_sum(const BigRat& u, long r, long max_m,
                             const PrecisionContext& ctx,
                             IntegralPath path = IntegralPath::kExactWhereAvailable);

// A_{k,m} = sum_{t=2}^m S2(m,t) sum_{w=1}^{t-1} (-k)^{t-w}
//           sum_{j=1}^w (-1)^j B_j c(w,j), c = unsigned Stirling first kind.
BigRat A_coeff(long k, long m, BernoulliConvention convention);

struct ConjectureEvaluation {
  BigFloat rhs;       // ln u + partial sum
  BigFloat digamma;   // psi(u)
  BigFloat residual;  // rhs - psi(u)
};

// ln(u) + sum_{k=1}^m A_{k,m+1} C(m,k) (-1)^k / (k! m!) *
//   int_0^inf x^{k-1} e^{-x} ln((x + u)/u) dx, compared against psi(u).
ConjectureEvaluation conjecture_rhs(const BigRat& u, long m,
                                    BernoulliConvention convention,
                                    const PrecisionContext& ctx,
                                    Execution policy = Execution::kParallel);

// conjecture_rhs for every m = 1 .. max_m (index m - 1), sharing the
// integrals across m.
std::vector<ConjectureEvaluation> conjecture_series(
    const BigRat& u, long max_m, BernoulliConvention convention,
    const PrecisionContext& ctx, Execution policy = Execution::kParallel);

// Grid drivers. Reports come back in lexicographic parameter order.
const std::vector<BigRat>& default_epsilons();
std::vector<IdentityReport> bin_formula_grid(
    long max_m, long max_r, const std::vector<BigRat>& epsilons,
    Execution policy = Execution::kParallel);
std::vector<IdentityReport> binformula2_grid(
    long max_m, Execution policy = Execution::kParallel);
// Family (1, j - m, 1 + j - r; 1) = (j - r)/(m - r), 1 <= r < j <= m.
std::vector<IdentityReport> gauss_grid(long max_m,
                                       Execution policy = Execution::kParallel);
// Base recurrence and j <= max_j differentiation identity over
// eps in {-3/4, -2/3}, r in {0, 1}, u in {1/2, 1}.
std::vector<IdentityReport> recurrence_grid(
    const PrecisionContext& ctx, long max_j = 3,
    Execution policy = Execution::kParallel);

}  // namespace egc
