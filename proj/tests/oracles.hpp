#pragma once

// Independent values for the numeric tests, taken straight from MPFR.

#include <mpfr.h>

#include <functional>

#include "egc/bigfloat.hpp"

namespace oracle {

inline egc::BigFloat mpfr_unary(int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t),
                                const egc::BigFloat& x, mpfr_prec_t bits) {
  egc::BigFloat out(bits);
  fn(out.get(), x.rounded(bits).get(), MPFR_RNDN);
  return out;
}

inline egc::BigFloat gamma(const egc::BigFloat& x, mpfr_prec_t bits) {
  return mpfr_unary(mpfr_gamma, x, bits);
}

inline egc::BigFloat digamma(const egc::BigFloat& x, mpfr_prec_t bits) {
  return mpfr_unary(mpfr_digamma, x, bits);
}

inline egc::BigFloat euler(mpfr_prec_t bits) {
  egc::BigFloat out(bits);
  mpfr_const_euler(out.get(), MPFR_RNDN);
  return out;
}

// E1(1) = -Ei(-1).
inline egc::BigFloat e1_at_one(mpfr_prec_t bits) {
  egc::BigFloat out(bits);
  egc::BigFloat minus_one(bits, -1L);
  mpfr_eint(out.get(), minus_one.get(), MPFR_RNDN);
  return -out;
}

inline bool close(const egc::BigFloat& a, const egc::BigFloat& b,
                  const egc::BigFloat& tol) {
  return egc::abs(a - b) < tol;
}

}  // namespace oracle
