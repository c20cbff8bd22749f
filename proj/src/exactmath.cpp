#include "egc/exactmath.hpp"

#include <mutex>
#include <shared_mutex>
#include <vector>

#include "egc/errors.hpp"

namespace egc {

BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ZeroDenominator("rational with zero denominator");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

BigRat parse_rat(const std::string& text) {
  if (text.empty()) throw DomainError("empty rational literal");
  const auto slash = text.find('/');
  BigInt num;
  BigInt den;
  auto parse_int = [&](const std::string& s, BigInt& out) {
    const std::string body = (!s.empty() && (s[0] == '+' || s[0] == '-'))
                                 ? s.substr(1)
                                 : s;
    if (body.empty() ||
        body.find_first_not_of("0123456789") != std::string::npos) {
      throw DomainError("not a rational literal: '" + text + "'");
    }
    out.set_str(body, 10);
    if (s[0] == '-') out = -out;
  };
  if (slash != std::string::npos) {
    parse_int(text.substr(0, slash), num);
    parse_int(text.substr(slash + 1), den);
    return make_rat(num, den);
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) {
    parse_int(text, num);
    return BigRat(num);
  }
  // Decimal literal: digits after the point scale by a power of ten.
  const std::string whole = text.substr(0, dot);
  const std::string frac = text.substr(dot + 1);
  if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) {
    throw DomainError("not a rational literal: '" + text + "'");
  }
  const bool negative = !whole.empty() && whole[0] == '-';
  std::string digits = whole;
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
    digits.erase(0, 1);
  }
  parse_int((digits.empty() ? std::string("0") : digits) + frac, num);
  den = pow_int(10, frac.size());
  return make_rat(negative ? BigInt(-num) : num, den);
}

std::string to_string(const BigRat& q) { return q.get_str(10); }
std::string to_string(const BigInt& z) { return z.get_str(10); }

BigInt binom_int(long n, long k) {
  if (n < 0) throw DomainError("binom_int requires n >= 0");
  if (k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

BigRat binom_gen(const BigRat& x, long k) {
  if (k < 0) throw DomainError("binom_gen requires k >= 0");
  BigRat num = 1;
  for (long t = 0; t < k; ++t) num *= x - t;
  return num / BigRat(factorial(k));
}

BigInt factorial(long n) {
  if (n < 0) throw DomainError("factorial requires n >= 0");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigRat rising_factorial(const BigRat& x, long k) {
  if (k < 0) throw DomainError("rising_factorial requires k >= 0");
  BigRat out = 1;
  for (long t = 0; t < k; ++t) out *= x + t;
  return out;
}

namespace {

// Lower-triangular table filled row by row from a three-term recurrence.
// Readers share the lock; growth takes it exclusively.
class Triangle {
 public:
  using Rule = BigInt (*)(const std::vector<BigInt>& prev, long n, long k);

  explicit Triangle(Rule rule) : rule_(rule) { rows_.push_back({1}); }

  BigInt at(long n, long k) {
    if (n < 0 || k < 0) throw DomainError("negative triangle index");
    if (k > n) return 0;
    {
      std::shared_lock lock(mutex_);
      if (n < static_cast<long>(rows_.size())) return rows_[n][k];
    }
    reserve(n);
    std::shared_lock lock(mutex_);
    return rows_[n][k];
  }

  void reserve(long n) {
    std::unique_lock lock(mutex_);
    while (static_cast<long>(rows_.size()) <= n) {
      const long row = static_cast<long>(rows_.size());
      const auto& prev = rows_.back();
      std::vector<BigInt> next(static_cast<size_t>(row + 1));
      for (long k = 0; k <= row; ++k) next[k] = rule_(prev, row, k);
      rows_.push_back(std::move(next));
    }
  }

 private:
  Rule rule_;
  std::shared_mutex mutex_;
  std::vector<std::vector<BigInt>> rows_;
};

BigInt prev_at(const std::vector<BigInt>& prev, long k) {
  if (k < 0 || k >= static_cast<long>(prev.size())) return 0;
  return prev[k];
}

// S2(n,k) = k S2(n-1,k) + S2(n-1,k-1)
BigInt stirling2_rule(const std::vector<BigInt>& prev, long, long k) {
  return k * prev_at(prev, k) + prev_at(prev, k - 1);
}

// c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k)
BigInt stirling1_rule(const std::vector<BigInt>& prev, long n, long k) {
  return prev_at(prev, k - 1) + (n - 1) * prev_at(prev, k);
}

Triangle& stirling2_table() {
  static Triangle t(&stirling2_rule);
  return t;
}

Triangle& stirling1_table() {
  static Triangle t(&stirling1_rule);
  return t;
}

class BernoulliTable {
 public:
  BigRat at(long j) {
    {
      std::shared_lock lock(mutex_);
      if (j < static_cast<long>(values_.size())) return values_[j];
    }
    reserve(j);
    std::shared_lock lock(mutex_);
    return values_[j];
  }

  // sum_{i=0}^{m} C(m+1, i) B_i = 0, solved for B_m (B_1 = -1/2).
  void reserve(long n) {
    std::unique_lock lock(mutex_);
    while (static_cast<long>(values_.size()) <= n) {
      const long m = static_cast<long>(values_.size());
      if (m == 0) {
        values_.emplace_back(1);
        continue;
      }
      if (m > 1 && m % 2 == 1) {
        values_.emplace_back(0);
        continue;
      }
      BigRat acc = 0;
      for (long i = 0; i < m; ++i) acc += BigRat(binom_int(m + 1, i)) * values_[i];
      values_.push_back(-acc / BigRat(m + 1));
    }
  }

 private:
  std::shared_mutex mutex_;
  std::vector<BigRat> values_;
};

BernoulliTable& bernoulli_table() {
  static BernoulliTable t;
  return t;
}

}  // namespace

BigInt stirling2(long m, long t) { return stirling2_table().at(m, t); }

BigInt stirling1_unsigned(long w, long j) {
  return stirling1_table().at(w, j);
}

void reserve_stirling(long n) {
  stirling2_table().reserve(n);
  stirling1_table().reserve(n);
}

BigRat bernoulli(long j, BernoulliConvention convention) {
  if (j < 0) throw DomainError("bernoulli requires j >= 0");
  BigRat b = bernoulli_table().at(j);
  if (j == 1 && convention == BernoulliConvention::kB1PlusHalf) b = -b;
  return b;
}

void reserve_bernoulli(long n) { bernoulli_table().reserve(n); }

BigInt alt_factorial_sum(long k) {
  if (k < 0) throw DomainError("alt_factorial_sum requires k >= 0");
  BigInt sum = 0;
  BigInt fact = 1;
  for (long w = 0; w < k; ++w) {
    if (w > 0) fact *= w;
    if (w % 2 == 0) {
      sum += fact;
    } else {
      sum -= fact;
    }
  }
  return sum;
}

std::string DeltaLinear::to_string() const {
  return egc::to_string(const_part_) + " + " + egc::to_string(delta_part_) +
         "*delta";
}

BigFloat delta_linear_eval(const DeltaLinear& v, const BigFloat& delta_value,
                           const PrecisionContext& ctx) {
  const mpfr_prec_t bits = std::max(ctx.working_bits(), delta_value.precision());
  BigFloat out = BigFloat(bits, v.delta_part()) * delta_value;
  out += BigFloat(bits, v.const_part());
  return out.rounded(ctx.working_bits());
}

}  // namespace egc
