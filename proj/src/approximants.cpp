#include "egc/approximants.hpp"

#include <string>

#include "egc/errors.hpp"
#include "egc/reference.hpp"

namespace egc {

namespace {

BigInt require_integer(const BigRat& q, const char* what, long m, long r) {
  if (q.get_den() != 1) {
    throw IntegralityViolation(std::string(what) + " is not an integer at m=" +
                               std::to_string(m) + ", r=" + std::to_string(r) +
                               ": " + to_string(q));
  }
  return q.get_num();
}

}  // namespace

ApproximantPair cor1_pair(long m, long r) {
  if (r < 0 || m < r) throw DomainError("cor1_pair requires m >= r >= 0");
  ApproximantPair out{0, 0};
  for (long k = r; k <= m; ++k) {
    const BigInt c = binom_int(m, k);
    const BigInt weight = c * c * binom_int(k, r) * factorial(m - k);
    out.b += weight;
    out.a += weight * alt_factorial_sum(k);
  }
  return out;
}

ApproximantPair cor2_pair(long m, long r) {
  if (r < 1 || m < r) throw DomainError("cor2_pair requires m >= r >= 1");
  // For each k the j-sums are prefix sums over j < k:
  //   plain_k  = sum_{j<k} (-1)^j / j!
  //   nested_k = sum_{j<k} (-1)^j / j! * sum_{i<j} i! (-1)^{i+1}
  BigRat plain = 0;
  BigRat nested = 0;
  BigInt j_fact = 1;
  BigInt inner = 0;
  BigRat a_sum = 0;
  BigRat b_sum = 0;
  for (long k = 1; k <= m; ++k) {
    const long j = k - 1;
    if (j > 0) {
      inner += (j - 1) % 2 == 0 ? BigInt(-(j_fact)) : j_fact;  // (j-1)!
      j_fact *= j;
    }
    BigRat term(BigInt(1), j_fact);
    if (j % 2 == 1) term = -term;
    plain += term;
    nested += term * BigRat(inner);
    if (k < r) continue;
    BigRat weight(binom_int(m, k) * binom_int(k, r), BigInt(k));
    weight.canonicalize();
    if (k % 2 == 1) weight = -weight;
    b_sum += weight * plain;
    // (-1)^{k+j+i+1} = (-1)^k (-1)^j (-1)^{i+1}
    a_sum += weight * nested;
  }
  const BigRat m_fact(factorial(m));
  return {require_integer(a_sum * m_fact, "a_m", m, r),
          require_integer(b_sum * m_fact, "b_m", m, r)};
}

int target_sign(Corollary corollary) {
  return corollary == Corollary::kFirst ? +1 : -1;
}

std::vector<ApproximantRow> approx_table(Corollary corollary, long r,
                                         long m_max,
                                         const PrecisionContext& ctx,
                                         Execution policy) {
  if (r < 0) throw DomainError("r must be >= 0");
  if (corollary == Corollary::kSecond && r < 1) {
    throw DomainError("the second family requires r >= 1");
  }
  const long m_min = std::max(r, 1L);
  if (m_max < m_min) {
    throw DomainError("m_max must be >= " + std::to_string(m_min));
  }
  const BigFloat target = ctx.from(target_sign(corollary)) * delta_cached(ctx);
  const auto count = static_cast<std::size_t>(m_max - m_min + 1);
  return map_indices<ApproximantRow>(count, policy, [&](std::size_t i) {
    ApproximantRow row;
    row.m = m_min + static_cast<long>(i);
    row.r = r;
    row.corollary = corollary;
    ApproximantPair p = corollary == Corollary::kFirst ? cor1_pair(row.m, r)
                                                       : cor2_pair(row.m, r);
    row.a = std::move(p.a);
    row.b = std::move(p.b);
    if (row.b != 0) {
      row.ratio = ctx.from(make_rat(row.a, row.b));
      row.abs_error = abs(*row.ratio - target);
    }
    return row;
  });
}

bool target_confirmed(const std::vector<ApproximantRow>& rows) {
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    if (!it->ratio) continue;
    // |ratio - t| < |ratio + t|  <=>  ratio * t > 0
    return it->ratio->sign() * target_sign(it->corollary) > 0;
  }
  return false;
}

ErrorDecaySummary error_decay_report(
    const std::vector<ApproximantRow>& rows,
    const std::vector<std::pair<long, long>>& pairs) {
  ErrorDecaySummary out;
  for (const auto& row : rows) {
    if (!row.abs_error) continue;
    out.m_list.push_back(row.m);
    out.error_list.push_back(*row.abs_error);
  }
  auto find = [&](long m) -> const BigFloat* {
    for (std::size_t i = 0; i < out.m_list.size(); ++i) {
      if (out.m_list[i] == m) return &out.error_list[i];
    }
    return nullptr;
  };
  for (const auto& [from, to] : pairs) {
    const BigFloat* e_from = find(from);
    const BigFloat* e_to = find(to);
    if (e_from == nullptr || e_to == nullptr || e_to->is_zero()) continue;
    out.decade_gains.push_back({from, to, *e_from / *e_to});
  }
  return out;
}

}  // namespace egc
