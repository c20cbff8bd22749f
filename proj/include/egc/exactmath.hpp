#pragma once

// Exact integer/rational arithmetic and the combinatorial number families
// (binomials, factorials, Stirling numbers, Bernoulli numbers) plus the
// two-dimensional Q-vector space spanned by {1, delta}.

#include <gmpxx.h>

#include <string>

#include "egc/bigfloat.hpp"

namespace egc {

// GMP keeps every mpq_class canonical: lowest terms, positive denominator.
using BigInt = mpz_class;
using BigRat = mpq_class;

// num/den in lowest terms. Throws ZeroDenominator when den == 0.
BigRat make_rat(const BigInt& num, const BigInt& den);
// Parses "p", "p/q" or a plain decimal literal ("0.25", "-1.5") exactly.
BigRat parse_rat(const std::string& text);
std::string to_string(const BigRat& q);
std::string to_string(const BigInt& z);

inline BigInt pow_int(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

inline BigInt minus_one_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

// C(n, k) for n >= 0; zero outside 0 <= k <= n.
BigInt binom_int(long n, long k);
// x(x-1)...(x-k+1)/k! for rational x.
BigRat binom_gen(const BigRat& x, long k);
BigInt factorial(long n);
// x(x+1)...(x+k-1).
BigRat rising_factorial(const BigRat& x, long k);

// Memoised triangles, thread-safe; requests past the current bound extend
// the table. `reserve_*` warms a table up front.
BigInt stirling2(long m, long t);
BigInt stirling1_unsigned(long w, long j);
void reserve_stirling(long n);

enum class BernoulliConvention { kB1MinusHalf, kB1PlusHalf };

BigRat bernoulli(long j,
                 BernoulliConvention convention =
                     BernoulliConvention::kB1MinusHalf);
void reserve_bernoulli(long n);

// sum_{w=0}^{k-1} (-1)^w w!
BigInt alt_factorial_sum(long k);

// p + q*delta with p, q rational.
class DeltaLinear {
 public:
  DeltaLinear() = default;
  DeltaLinear(BigRat const_part, BigRat delta_part)
      : const_part_(std::move(const_part)),
        delta_part_(std::move(delta_part)) {}

  static DeltaLinear delta() { return {0, 1}; }
  static DeltaLinear constant(BigRat c) { return {std::move(c), 0}; }

  const BigRat& const_part() const { return const_part_; }
  const BigRat& delta_part() const { return delta_part_; }

  DeltaLinear& operator+=(const DeltaLinear& rhs) {
    const_part_ += rhs.const_part_;
    delta_part_ += rhs.delta_part_;
    return *this;
  }
  DeltaLinear& operator-=(const DeltaLinear& rhs) {
    const_part_ -= rhs.const_part_;
    delta_part_ -= rhs.delta_part_;
    return *this;
  }
  DeltaLinear& operator*=(const BigRat& s) {
    const_part_ *= s;
    delta_part_ *= s;
    return *this;
  }

  friend DeltaLinear operator+(DeltaLinear a, const DeltaLinear& b) {
    return a += b;
  }
  friend DeltaLinear operator-(DeltaLinear a, const DeltaLinear& b) {
    return a -= b;
  }
  friend DeltaLinear operator*(DeltaLinear a, const BigRat& s) {
    return a *= s;
  }
  friend DeltaLinear operator*(const BigRat& s, DeltaLinear a) {
    return a *= s;
  }
  DeltaLinear operator-() const { return {-const_part_, -delta_part_}; }

  friend bool operator==(const DeltaLinear& a, const DeltaLinear& b) {
    return a.const_part_ == b.const_part_ && a.delta_part_ == b.delta_part_;
  }

  std::string to_string() const;

 private:
  BigRat const_part_{0};
  BigRat delta_part_{0};
};

// const_part + delta_part * delta_value, rounded at ctx precision.
BigFloat delta_linear_eval(const DeltaLinear& v, const BigFloat& delta_value,
                           const PrecisionContext& ctx);

}  // namespace egc
