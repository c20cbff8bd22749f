#pragma once

// Quadrature for the e^{-x}-weighted family on [0, inf):
//
//   integral_0^inf x^a e^{-x} g(x) dx,   g in {1, ln(1 + b x), (1 + b x)^-p}
//
// The range is split at x = 1. (0, 1] uses tanh-sinh, which absorbs the
// algebraic endpoint singularity x^a with a > -1. [1, X] uses composite
// Gauss-Legendre. The tail beyond X is bounded by 2 K X^c e^{-X}.

#include <vector>

#include "egc/bigfloat.hpp"
#include "egc/exactmath.hpp"
#include "egc/parallel.hpp"

namespace egc {

struct WeightedIntegrand {
  enum class Kind { kPower, kPowerLog, kPowerRational };

  Kind kind = Kind::kPower;
  BigRat exponent = 0;     // a
  BigRat scale = 1;        // b >= 0, unused for kPower
  long rational_power = 0; // p, only for kPowerRational

  static WeightedIntegrand power(BigRat exponent);
  static WeightedIntegrand power_log(BigRat exponent, BigRat scale);
  static WeightedIntegrand power_rational(BigRat exponent, BigRat scale,
                                          long rational_power);

  // Exponent of the polynomial envelope that bounds the integrand for x >= 1.
  long envelope_degree() const;
};

struct QuadratureSpec {
  // Lower region (0, 1]: tanh-sinh.
  int ts_max_level = 0;
  BigFloat ts_half_width;  // t in [-T, T]
  // Upper region [1, X]: composite Gauss-Legendre.
  int gl_points = 0;
  std::vector<BigFloat> panel_edges;  // 1 = e_0 < e_1 < ... < e_n = X
  BigFloat truncation_x;
  BigFloat tail_bound;

  QuadratureSpec();
};

QuadratureSpec plan_quadrature(const WeightedIntegrand& f,
                               const PrecisionContext& ctx);
// Same plan but truncated at an explicit X (used by the tail audit).
QuadratureSpec plan_quadrature(const WeightedIntegrand& f,
                               const PrecisionContext& ctx,
                               double truncation_x);

BigFloat quad_semi_infinite(const WeightedIntegrand& f,
                            const PrecisionContext& ctx,
                            Execution policy = Execution::kParallel);
BigFloat quad_semi_infinite(const WeightedIntegrand& f,
                            const PrecisionContext& ctx,
                            const QuadratureSpec& spec,
                            Execution policy = Execution::kParallel);

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1], cached
// per (n, bits). Nodes are ascending.
struct GaussLegendreRule {
  std::vector<BigFloat> nodes;
  std::vector<BigFloat> weights;
};
const GaussLegendreRule& gauss_legendre(int n, mpfr_prec_t bits);

}  // namespace egc
