#pragma once

// Arbitrary-precision binary floating point on top of MPFR, plus the
// precision context every numeric routine in the library is parameterised by.

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

namespace egc {

class BigFloat;

// Target decimal digits plus guard digits carried to absorb rounding and
// truncation error. Immutable once built.
class PrecisionContext {
 public:
  static constexpr int kDefaultGuardDigits = 15;
  static constexpr int kMinDigits = 1;
  static constexpr int kMaxDigits = 1000;

  explicit PrecisionContext(int decimal_digits,
                            int guard_digits = kDefaultGuardDigits);

  int decimal_digits() const { return decimal_digits_; }
  int guard_digits() const { return guard_digits_; }
  int total_digits() const { return decimal_digits_ + guard_digits_; }
  mpfr_prec_t working_bits() const { return working_bits_; }

  // 10^-(decimal_digits + guard_digits): internal truncation budget.
  BigFloat tolerance() const;
  // 10^-decimal_digits: the accuracy promised to callers.
  BigFloat output_tolerance() const;

  BigFloat zero() const;
  BigFloat from(long v) const;
  BigFloat from(const mpq_class& q) const;
  BigFloat from(const mpz_class& z) const;

  PrecisionContext with_digits(int decimal_digits) const {
    return PrecisionContext(decimal_digits, guard_digits_);
  }

  friend bool operator==(const PrecisionContext&,
                         const PrecisionContext&) = default;

 private:
  int decimal_digits_;
  int guard_digits_;
  mpfr_prec_t working_bits_;
};

// RAII owner of an mpfr_t. Binary operations round to nearest at the larger
// of the two operand precisions.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits);
  BigFloat(mpfr_prec_t bits, long value);
  BigFloat(mpfr_prec_t bits, const mpz_class& value);
  BigFloat(mpfr_prec_t bits, const mpq_class& value);

  // Parses a decimal literal ("0.5963", "-1e-3") correctly rounded.
  static BigFloat parse(mpfr_prec_t bits, std::string_view text);
  // 10^exponent, correctly rounded.
  static BigFloat pow10(mpfr_prec_t bits, long exponent);
  static BigFloat pi(mpfr_prec_t bits);
  static BigFloat ln2(mpfr_prec_t bits);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  // Same value rounded to a different precision.
  BigFloat rounded(mpfr_prec_t bits) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_nan() const { return mpfr_nan_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  bool is_integer() const { return mpfr_integer_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  // Exact conversion; the value must be finite.
  mpq_class to_rational() const;

  // Exactly `significant_digits` significant decimal digits, round to
  // nearest. Positional notation for moderate exponents, otherwise
  // d.ddd…e±N.
  std::string to_string(int significant_digits) const;

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);
  BigFloat& operator+=(long rhs);
  BigFloat& operator-=(long rhs);
  BigFloat& operator*=(long rhs);
  BigFloat& operator/=(long rhs);

  BigFloat operator-() const;

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator+(BigFloat a, long b) { return a += b; }
  friend BigFloat operator-(BigFloat a, long b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, long b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, long b) { return a /= b; }

  friend bool operator==(const BigFloat& a, const BigFloat& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const BigFloat& a,
                                           const BigFloat& b);

 private:
  mpfr_t value_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat log1p(const BigFloat& x);
BigFloat pow(const BigFloat& base, const BigFloat& exponent);
BigFloat pow(const BigFloat& base, long exponent);
BigFloat sinh(const BigFloat& x);
BigFloat cosh(const BigFloat& x);
BigFloat tanh(const BigFloat& x);

// Number of leading decimal digits on which a and b agree, measured as
// -log10|a-b| (capped at `cap` when they are equal).
int agreeing_digits(const BigFloat& a, const BigFloat& b, int cap);

}  // namespace egc
