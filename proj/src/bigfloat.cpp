#include "egc/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "egc/errors.hpp"

namespace egc {

namespace {

constexpr double kLog2Of10 = 3.32192809488736234787;

mpfr_prec_t max_prec(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

PrecisionContext::PrecisionContext(int decimal_digits, int guard_digits)
    : decimal_digits_(decimal_digits), guard_digits_(guard_digits) {
  if (decimal_digits < kMinDigits) {
    throw DomainError("decimal_digits must be positive, got " +
                      std::to_string(decimal_digits));
  }
  if (decimal_digits > kMaxDigits) {
    throw PrecisionUnreachable("decimal_digits " +
                               std::to_string(decimal_digits) +
                               " exceeds the cap of " +
                               std::to_string(kMaxDigits));
  }
  // 5 guard digits is the least that keeps 16 spare bits.
  if (guard_digits < 5) {
    throw DomainError("guard_digits must be at least 5, got " +
                      std::to_string(guard_digits));
  }
  working_bits_ = static_cast<mpfr_prec_t>(
      std::ceil((decimal_digits + guard_digits) * kLog2Of10));
}

BigFloat PrecisionContext::tolerance() const {
  return BigFloat::pow10(working_bits_, -total_digits());
}

BigFloat PrecisionContext::output_tolerance() const {
  return BigFloat::pow10(working_bits_, -decimal_digits_);
}

BigFloat PrecisionContext::zero() const { return BigFloat(working_bits_); }

BigFloat PrecisionContext::from(long v) const {
  return BigFloat(working_bits_, v);
}

BigFloat PrecisionContext::from(const mpq_class& q) const {
  return BigFloat(working_bits_, q);
}

BigFloat PrecisionContext::from(const mpz_class& z) const {
  return BigFloat(working_bits_, z);
}

BigFloat::BigFloat(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(mpfr_prec_t bits, long value) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(mpfr_prec_t bits, const mpz_class& value) {
  mpfr_init2(value_, bits);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(mpfr_prec_t bits, const mpq_class& value) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat BigFloat::parse(mpfr_prec_t bits, std::string_view text) {
  BigFloat out(bits);
  std::string s(text);
  char* end = nullptr;
  mpfr_strtofr(out.value_, s.c_str(), &end, 10, MPFR_RNDN);
  if (end == s.c_str() || *end != '\0') {
    throw DomainError("not a decimal number: '" + s + "'");
  }
  return out;
}

BigFloat BigFloat::pow10(mpfr_prec_t bits, long exponent) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  if (exponent >= 0) return BigFloat(bits, p);
  // Exact reciprocal, rounded once.
  return BigFloat(bits, mpq_class(mpz_class(1), p));
}

BigFloat BigFloat::pi(mpfr_prec_t bits) {
  BigFloat out(bits);
  mpfr_const_pi(out.value_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::ln2(mpfr_prec_t bits) {
  BigFloat out(bits);
  mpfr_const_log2(out.value_, MPFR_RNDN);
  return out;
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::rounded(mpfr_prec_t bits) const {
  BigFloat out(bits);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

mpq_class BigFloat::to_rational() const {
  if (!is_finite()) throw DomainError("cannot convert a non-finite value");
  mpz_class mantissa;
  const mpfr_exp_t e = mpfr_get_z_2exp(mantissa.get_mpz_t(), value_);
  mpq_class q(mantissa);
  if (e >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return q;
}

std::string BigFloat::to_string(int significant_digits) const {
  if (is_nan()) return "nan";
  if (mpfr_inf_p(value_)) return sign() < 0 ? "-inf" : "inf";
  if (is_zero()) return "0";
  significant_digits = std::max(significant_digits, 1);

  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10,
                           static_cast<size_t>(significant_digits), value_,
                           MPFR_RNDN);
  std::string digits(raw);
  mpfr_free_str(raw);

  std::string out;
  if (!digits.empty() && digits.front() == '-') {
    out.push_back('-');
    digits.erase(0, 1);
  }
  // value = 0.d1d2d3... × 10^exp10, so the leading digit has exponent
  // exp10 - 1.
  const long lead = static_cast<long>(exp10) - 1;
  const long n = static_cast<long>(digits.size());
  if (lead >= -6 && lead < n) {
    if (lead < 0) {
      out += "0.";
      out.append(static_cast<size_t>(-lead - 1), '0');
      out += digits;
    } else {
      out += digits.substr(0, static_cast<size_t>(lead + 1));
      if (lead + 1 < n) {
        out.push_back('.');
        out += digits.substr(static_cast<size_t>(lead + 1));
      }
    }
  } else {
    out.push_back(digits[0]);
    if (n > 1) {
      out.push_back('.');
      out += digits.substr(1);
    }
    out += (lead < 0 ? "e-" : "e+");
    out += std::to_string(std::labs(lead));
  }
  return out;
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  mpfr_prec_round(value_, max_prec(*this, rhs), MPFR_RNDN);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  mpfr_prec_round(value_, max_prec(*this, rhs), MPFR_RNDN);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  mpfr_prec_round(value_, max_prec(*this, rhs), MPFR_RNDN);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  mpfr_prec_round(value_, max_prec(*this, rhs), MPFR_RNDN);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator+=(long rhs) {
  mpfr_add_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(long rhs) {
  mpfr_sub_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat out(precision());
  mpfr_neg(out.value_, value_, MPFR_RNDN);
  return out;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat out(max_prec(a, b));
  mpfr_add(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat out(max_prec(a, b));
  mpfr_sub(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat out(max_prec(a, b));
  mpfr_mul(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat out(max_prec(a, b));
  mpfr_div(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) {
    return std::partial_ordering::unordered;
  }
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

#define EGC_UNARY(name, fn)                    \
  BigFloat name(const BigFloat& x) {           \
    BigFloat out(x.precision());               \
    fn(out.get(), x.get(), MPFR_RNDN);         \
    return out;                                \
  }

EGC_UNARY(abs, mpfr_abs)
EGC_UNARY(sqrt, mpfr_sqrt)
EGC_UNARY(exp, mpfr_exp)
EGC_UNARY(log, mpfr_log)
EGC_UNARY(log1p, mpfr_log1p)
EGC_UNARY(sinh, mpfr_sinh)
EGC_UNARY(cosh, mpfr_cosh)
EGC_UNARY(tanh, mpfr_tanh)

#undef EGC_UNARY

BigFloat pow(const BigFloat& base, const BigFloat& exponent) {
  BigFloat out(std::max(base.precision(), exponent.precision()));
  mpfr_pow(out.get(), base.get(), exponent.get(), MPFR_RNDN);
  return out;
}

BigFloat pow(const BigFloat& base, long exponent) {
  BigFloat out(base.precision());
  mpfr_pow_si(out.get(), base.get(), exponent, MPFR_RNDN);
  return out;
}

int agreeing_digits(const BigFloat& a, const BigFloat& b, int cap) {
  const BigFloat diff = abs(a - b);
  if (diff.is_zero()) return cap;
  BigFloat l(diff.precision());
  mpfr_log10(l.get(), diff.get(), MPFR_RNDN);
  const double d = -l.to_double();
  if (d >= cap) return cap;
  return static_cast<int>(std::floor(d));
}

}  // namespace egc
