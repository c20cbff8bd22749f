#pragma once

// Integer sequences (a_m, b_m) whose ratios converge to +delta or -delta,
// computed exactly, with ratio/error tables against the reference delta.

#include <optional>
#include <utility>
#include <vector>

#include "egc/bigfloat.hpp"
#include "egc/exactmath.hpp"
#include "egc/parallel.hpp"

namespace egc {

enum class Corollary { kFirst = 1, kSecond = 2 };

struct ApproximantPair {
  BigInt a;
  BigInt b;
  friend bool operator==(const ApproximantPair&,
                         const ApproximantPair&) = default;
};

// a = sum_{k=r}^m C(m,k)^2 C(k,r) (m-k)! sum_{w<k} (-1)^w w!
// b = sum_{k=r}^m C(m,k)^2 C(k,r) (m-k)!
ApproximantPair cor1_pair(long m, long r);

// a = m! sum_{k=r}^m sum_{j<k} sum_{i<j} C(m,k) C(k,r) i!/(k j!) (-1)^{k+j+i+1}
// b = m! sum_{k=r}^m sum_{j<k} C(m,k) C(k,r) (-1)^{k+j}/(k j!)
// Throws IntegralityViolation if either sum fails to reduce to an integer.
ApproximantPair cor2_pair(long m, long r);

// Limit the printed sequences actually approach: +1 for the first family
// (the printed statement says -delta; direct evaluation gives +delta), -1
// for the second.
int target_sign(Corollary corollary);

struct ApproximantRow {
  long m = 0;
  long r = 0;
  Corollary corollary = Corollary::kFirst;
  BigInt a;
  BigInt b;
  // Empty when b == 0 (happens for the second family at m = r = 2).
  std::optional<BigFloat> ratio;
  std::optional<BigFloat> abs_error;
};

// Rows for m = max(r, 1) .. m_max, ordered by m.
std::vector<ApproximantRow> approx_table(Corollary corollary, long r,
                                         long m_max,
                                         const PrecisionContext& ctx,
                                         Execution policy = Execution::kParallel);

// True when the last row with a defined ratio is closer to the chosen
// target than to its negation.
bool target_confirmed(const std::vector<ApproximantRow>& rows);

struct ErrorDecaySummary {
  struct Gain {
    long m_from;
    long m_to;
    BigFloat ratio;  // e_{m_from} / e_{m_to}
  };
  std::vector<long> m_list;
  std::vector<BigFloat> error_list;
  std::vector<Gain> decade_gains;
};

// Errors per row and e_m / e_m' for each requested (m, m') present in the
// rows. No monotonicity is assumed.
ErrorDecaySummary error_decay_report(
    const std::vector<ApproximantRow>& rows,
    const std::vector<std::pair<long, long>>& pairs);

}  // namespace egc
